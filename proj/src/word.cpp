#include "scs/word.hpp"

#include <algorithm>

namespace scs {

Word::Word(std::string letters) : letters_(std::move(letters)) {
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (!is_letter(letters_[i])) {
            throw ParseError("invalid letter '" + std::string(1, letters_[i]) +
                             "' at position " + std::to_string(i + 1) +
                             " (expected one of 0, 1, 2)");
        }
    }
}

bool check_embedding(const Word& sub, const Word& sup, const Embedding& e) {
    if (e.targets.size() != sub.size()) return false;
    std::size_t prev = 0;  // 1-based, 0 = before the first position
    for (std::size_t i = 0; i < sub.size(); ++i) {
        const std::size_t t = e.targets[i];
        if (t <= prev || t > sup.size()) return false;
        if (sup[t - 1] != sub[i]) return false;
        prev = t;
    }
    return true;
}

bool is_supersequence(std::string_view sub, std::string_view sup) {
    std::size_t j = 0;
    for (char c : sub) {
        while (j < sup.size() && sup[j] != c) ++j;
        if (j == sup.size()) return false;
        ++j;
    }
    return true;
}

bool is_supersequence(const Word& sub, const Word& sup) {
    return is_supersequence(std::string_view(sub.str()), std::string_view(sup.str()));
}

std::optional<Embedding> leftmost_embedding(const Word& sub, const Word& sup) {
    Embedding e;
    e.targets.reserve(sub.size());
    std::size_t j = 0;
    for (char c : sub) {
        while (j < sup.size() && sup[j] != c) ++j;
        if (j == sup.size()) return std::nullopt;
        e.targets.push_back(++j);  // 1-based
    }
    return e;
}

Word phi_encode(const Word& w) {
    std::string out;
    out.reserve(4 * w.size());
    for (char c : w) {
        if (c == kZero) {
            out += "0202";
        } else if (c == kOne) {
            out += '1';
        } else {
            throw PreconditionError("phi_encode: input contains letter 2");
        }
    }
    return Word(std::move(out));
}

namespace {

// Core scanner shared by segment() and is_in_phi_image(). Returns the run
// counts, or nullopt with *bad_pos set to the first offending 1-based index.
std::optional<PhiSegmentation> try_segment(const Word& w, std::size_t* bad_pos) {
    PhiSegmentation seg;
    seg.runs.push_back(0);
    std::size_t i = 0;
    while (i < w.size()) {
        const char c = w[i];
        if (c == kOne) {
            seg.runs.push_back(0);
            ++i;
        } else if (c == kZero) {
            if (i + 1 >= w.size() || w[i + 1] != kTwo) {
                *bad_pos = (i + 1 < w.size()) ? i + 2 : i + 1;
                return std::nullopt;
            }
            ++seg.runs.back();
            i += 2;
        } else {  // a '2' that does not close an "02" block
            *bad_pos = i + 1;
            return std::nullopt;
        }
    }
    return seg;
}

}  // namespace

std::uint64_t PhiSegmentation::total_02_blocks() const {
    std::uint64_t total = 0;
    for (std::uint64_t c : runs) total += c;
    return total;
}

bool PhiSegmentation::all_even() const {
    return std::all_of(runs.begin(), runs.end(), [](std::uint64_t c) { return c % 2 == 0; });
}

Word PhiSegmentation::reconstruct() const {
    std::string out;
    out.reserve(2 * total_02_blocks() + ones());
    for (std::size_t t = 0; t < runs.size(); ++t) {
        if (t > 0) out += '1';
        for (std::uint64_t b = 0; b < runs[t]; ++b) out += "02";
    }
    return Word(std::move(out));
}

PhiSegmentation segment(const Word& w) {
    std::size_t bad_pos = 0;
    auto seg = try_segment(w, &bad_pos);
    if (!seg) {
        throw ParseError("word is not of the form (02|1)*: offending position " +
                         std::to_string(bad_pos) + " (1-based)");
    }
    return *seg;
}

bool is_in_phi_image(const Word& w) {
    std::size_t bad_pos = 0;
    auto seg = try_segment(w, &bad_pos);
    return seg && seg->all_even();
}

Word phi_decode(const Word& w) {
    if (!is_in_phi_image(w)) {
        throw PreconditionError("phi_decode: word is not in the phi image");
    }
    std::string out;
    out.reserve(w.size());
    std::size_t i = 0;
    while (i < w.size()) {
        if (w[i] == kOne) {
            out += '1';
            ++i;
        } else {  // the image guarantees a full "0202" block here
            out += '0';
            i += 4;
        }
    }
    return Word(std::move(out));
}

std::size_t count_ones(const Word& w) {
    return static_cast<std::size_t>(std::count(w.begin(), w.end(), kOne));
}

std::uint64_t count_0202_blocks(const Word& w) {
    std::size_t bad_pos = 0;
    auto seg = try_segment(w, &bad_pos);
    if (!seg || !seg->all_even()) {
        throw PreconditionError("count_0202_blocks: word is not in the phi image");
    }
    return seg->total_02_blocks() / 2;
}

bool validate_mscs_input(const std::vector<Word>& L, Letter forbidden_first) {
    for (const Word& w : L) {
        if (!w.empty() && w[0] == forbidden_first) return false;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            if (w[i] == w[i + 1]) return false;
        }
    }
    return true;
}

}  // namespace scs
