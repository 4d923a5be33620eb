#pragma once

#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "scs/word.hpp"

namespace scs {

/// Rewrite rules applied by the normalizer. The first six are numbered i..vi
/// in traces; the last two act on the run-length segmentation.
enum class RuleId {
    drop_trailing_zero,  // i:   delete a final 0
    drop_leading_two,    // ii:  delete an initial 2
    merge_zeros,         // iii: 00 -> 0
    merge_twos,          // iv:  22 -> 2
    swap_zero_one,       // v:   01 -> 10
    swap_one_two,        // vi:  12 -> 21
    seg_shift,           // move one 02 block from run t into run t+1
    seg_trim,            // delete one 02 block from the final run
};

/// "i".."vi", "seg-shift", "seg-trim".
std::string_view rule_name(RuleId id);

/// One rule application. For the textual rules i..vi, `pos` is the 1-based
/// index of the leftmost letter of the rewritten factor (for rule i, of the
/// deleted letter). For seg-shift and seg-trim it is the run index t of the
/// segmentation, counted from 0.
struct RewriteStep {
    RuleId rule;
    std::size_t pos;
    std::size_t before_len;
    std::size_t after_len;
};

struct RewriteTrace {
    std::vector<RewriteStep> steps;
};

/// Pushes zeros right and twos left until the word matches (02|1)*: applies,
/// leftmost first, 00->0, 22->2, 01->10, 12->21, then drops a trailing 0 or a
/// leading 2, until no rule applies. Total on all {0,1,2}-words; the result
/// never gets longer.
std::pair<Word, RewriteTrace> first_step(const Word& s);

/// Turns a (02|1)*-form word into a member of the phi image without growing
/// it: scans the run counts left to right, moving one 02 block into the next
/// run whenever the current count is odd, and finally deletes one block if
/// the last run ends up odd. Throws ParseError when the input is not in
/// (02|1)* form. Never changes the number of ones.
std::pair<Word, RewriteTrace> second_step(const Word& s2);

/// Full normalization: second_step(first_step(s)). Requires every word of L
/// to be in the phi image and `s` to be a supersequence of L (else
/// PreconditionError). The result is in the phi image, is no longer than
/// `s`, and is re-checked to still be a supersequence of every word of L; a
/// failed re-check throws InvariantError. The combined trace is appended to
/// *trace when given.
Word normalize(const Word& s, const std::vector<Word>& L, RewriteTrace* trace = nullptr);

/// Applies one recorded step to a word, validating the rule's precondition
/// at the recorded position (PreconditionError when it does not apply).
/// Replaying a trace with this function turns it into a checkable
/// certificate of the normalization.
Word apply_rewrite_step(const Word& s, const RewriteStep& step);

/// Termination measure of the rewrite system: c * |s| + 2 * #(0 before 1
/// pairs) + #(1 before 2 pairs). With c = |s0|^2 + 1 for the starting word
/// s0, the measure strictly decreases along every rule, including the
/// length-preserving swaps and shifts.
std::uint64_t weighted_potential(const Word& s, std::uint64_t c);

/// The weight that makes the measure above strictly decreasing from start
/// word s0: |s0|^2 + 1, which dominates any inversion count of a word never
/// longer than s0.
std::uint64_t potential_weight(const Word& s0);

}  // namespace scs
