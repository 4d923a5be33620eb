#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "scs/word.hpp"

namespace scs {

/// Limits for the exact search. Both must be positive.
struct SearchBudget {
    std::uint64_t max_states = 5'000'000;       // expansions before giving up
    std::uint64_t max_length = 1'000'000'000;   // longest solution considered
};

struct SolverResult {
    Word supersequence;
    std::size_t length = 0;
    bool optimal = false;
    std::uint64_t states_expanded = 0;
    double elapsed_seconds = 0.0;
};

/// Optimal common supersequence of two words via the classic LCS dynamic
/// program; length is |u| + |v| - LCS(u, v).
SolverResult scs_pairwise(const Word& u, const Word& v);

/// Optimal common supersequence of a word set. Best-first search over states
/// given by the vector of matched-prefix lengths, one per word; each
/// transition appends one letter and advances every word whose next unmatched
/// letter equals it. Ordered by length plus the admissible bound
/// max_i(remaining_i); successors are generated in letter order 0 < 1 < 2 and
/// ties in the ordering are expanded first-in first-out, so the returned word
/// is deterministic. Duplicate input words are removed before solving.
///
/// When the budget is exhausted the best incumbent found so far is returned
/// with `optimal` cleared instead of failing; reduction instances are
/// intentionally intractable and callers still want a valid supersequence.
SolverResult scs_exact(std::vector<Word> L, const SearchBudget& budget = {});

/// Brute-force oracle: enumerates all words over {0,1,2} by increasing length
/// (then lexicographically) and returns the first supersequence of L, or
/// nullopt if none has length <= max_len. Refuses max_len > 20.
std::optional<SolverResult> scs_brute_force(const std::vector<Word>& L, std::size_t max_len);

/// Enumerate-all-optima mode of the brute-force oracle: every supersequence of
/// L of the minimal achievable length <= max_len, in lexicographic order;
/// nullopt if none exists within max_len. Used for uniqueness checks.
std::optional<std::vector<Word>> scs_all_optima(const std::vector<Word>& L, std::size_t max_len);

/// Majority-merge heuristic: repeatedly emit the letter that is the next
/// unmatched letter of the largest number of words (ties broken by letter
/// order) and advance those words. Valid but not necessarily optimal.
SolverResult scs_majority_merge(std::vector<Word> L);

}  // namespace scs
