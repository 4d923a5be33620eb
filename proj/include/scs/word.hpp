#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scs/errors.hpp"

namespace scs {

// The working alphabet is {'0', '1', '2'}. A Letter is one of these three
// characters; Word construction rejects anything else.
using Letter = char;

inline constexpr Letter kZero = '0';
inline constexpr Letter kOne = '1';
inline constexpr Letter kTwo = '2';
inline constexpr Letter kAlphabet[3] = {kZero, kOne, kTwo};

constexpr bool is_letter(char c) { return c == '0' || c == '1' || c == '2'; }

/// Immutable word over {0,1,2}. The empty word is a valid word.
class Word {
  public:
    Word() = default;
    explicit Word(std::string letters);
    static Word parse(std::string_view text) { return Word(std::string(text)); }

    const std::string& str() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }

    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

  private:
    std::string letters_;
};

/// Witness of the supersequence relation: targets[i] is the 1-based index in
/// the target word that source position i (0-based) is mapped to. Indices are
/// strictly increasing and letter-preserving.
struct Embedding {
    std::vector<std::size_t> targets;

    friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// True iff `e` is a valid embedding of `sub` into `sup`.
bool check_embedding(const Word& sub, const Word& sup, const Embedding& e);

/// True iff `sup` is a supersequence of `sub` (greedy leftmost matching).
bool is_supersequence(const Word& sub, const Word& sup);
bool is_supersequence(std::string_view sub, std::string_view sup);

/// The embedding that maps each letter of `sub` to the earliest feasible
/// position of `sup`; nullopt when no embedding exists. Each returned index is
/// individually minimal over all embeddings.
std::optional<Embedding> leftmost_embedding(const Word& sub, const Word& sup);

/// Image of a {0,1}-word under the morphism 0 -> 0202, 1 -> 1.
/// Throws PreconditionError if `w` contains the letter 2.
Word phi_encode(const Word& w);

/// True iff `w` is a concatenation of blocks "0202" and "1".
bool is_in_phi_image(const Word& w);

/// Inverse of phi_encode. Requires is_in_phi_image(w).
Word phi_decode(const Word& w);

/// Run-length view of a word of the form (02|1)*: runs[t] counts the "02"
/// blocks between the t-th and (t+1)-th one, with runs.front() before the
/// first one and runs.back() after the last. Always has ones()+1 entries.
struct PhiSegmentation {
    std::vector<std::uint64_t> runs;

    std::size_t ones() const { return runs.size() - 1; }
    std::uint64_t total_02_blocks() const;
    bool all_even() const;
    Word reconstruct() const;

    friend bool operator==(const PhiSegmentation&, const PhiSegmentation&) = default;
};

/// Segments a (02|1)*-form word into run counts. Throws ParseError naming the
/// first offending position (1-based) when the word is not of that form.
PhiSegmentation segment(const Word& w);

std::size_t count_ones(const Word& w);

/// Number of "0202" blocks of a word in the phi image (= zeros / 2).
/// Throws PreconditionError when the word is not in the phi image.
std::uint64_t count_0202_blocks(const Word& w);

/// True iff no word of L contains two identical consecutive letters and no
/// word starts with `forbidden_first`.
bool validate_mscs_input(const std::vector<Word>& L, Letter forbidden_first);

}  // namespace scs
