#include "scs/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cstring>
#include <limits>
#include <unordered_map>

namespace scs {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Sort + dedup so that results do not depend on the input order.
void canonicalize(std::vector<Word>& L) {
    std::sort(L.begin(), L.end());
    L.erase(std::unique(L.begin(), L.end()), L.end());
}

std::size_t max_word_length(const std::vector<Word>& L) {
    std::size_t m = 0;
    for (const Word& w : L) m = std::max(m, w.size());
    return m;
}

SolverResult majority_merge_canonical(const std::vector<Word>& L) {
    const auto t0 = Clock::now();
    std::vector<std::size_t> pos(L.size(), 0);
    std::string out;
    for (;;) {
        std::size_t votes[3] = {0, 0, 0};
        for (std::size_t i = 0; i < L.size(); ++i) {
            if (pos[i] < L[i].size()) ++votes[L[i][pos[i]] - '0'];
        }
        std::size_t best = 0, best_votes = 0;
        for (std::size_t c = 0; c < 3; ++c) {
            if (votes[c] > best_votes) {  // strict: ties keep the smaller letter
                best = c;
                best_votes = votes[c];
            }
        }
        if (best_votes == 0) break;  // every word fully matched
        const char letter = static_cast<char>('0' + best);
        out += letter;
        for (std::size_t i = 0; i < L.size(); ++i) {
            if (pos[i] < L[i].size() && L[i][pos[i]] == letter) ++pos[i];
        }
    }
    SolverResult r;
    r.supersequence = Word(std::move(out));
    r.length = r.supersequence.size();
    r.optimal = (r.length == max_word_length(L));  // met the trivial lower bound
    r.states_expanded = 0;
    r.elapsed_seconds = seconds_since(t0);
    return r;
}

// ---------------------------------------------------------------------------
// Exact search.
//
// A state is the vector of matched-prefix lengths. Two key encodings: a
// mixed-radix packed uint64 when prod(len_i + 1) fits, and the raw position
// vector otherwise.

struct PackedCodec {
    using Key = std::uint64_t;

    std::vector<std::uint64_t> strides;

    static std::optional<PackedCodec> make(const std::vector<Word>& L) {
        PackedCodec c;
        c.strides.reserve(L.size());
        unsigned __int128 prod = 1;
        for (const Word& w : L) {
            c.strides.push_back(static_cast<std::uint64_t>(prod));
            prod *= (w.size() + 1);
            if (prod > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
        }
        return c;
    }

    Key encode(const std::vector<std::uint32_t>& pos) const {
        Key k = 0;
        for (std::size_t i = 0; i < pos.size(); ++i) k += pos[i] * strides[i];
        return k;
    }

    void decode(Key k, const std::vector<std::uint32_t>& lens,
                std::vector<std::uint32_t>& out) const {
        for (std::size_t i = 0; i < lens.size(); ++i) {
            out[i] = static_cast<std::uint32_t>((k / strides[i]) % (lens[i] + 1));
        }
    }

    struct Hash {
        std::size_t operator()(Key k) const {
            k += 0x9e3779b97f4a7c15ULL;  // splitmix64 finalizer
            k = (k ^ (k >> 30)) * 0xbf58476d1ce4e5b9ULL;
            k = (k ^ (k >> 27)) * 0x94d049bb133111ebULL;
            return static_cast<std::size_t>(k ^ (k >> 31));
        }
    };
};

struct VectorCodec {
    using Key = std::vector<std::uint32_t>;

    Key encode(const std::vector<std::uint32_t>& pos) const { return pos; }

    void decode(const Key& k, const std::vector<std::uint32_t>&,
                std::vector<std::uint32_t>& out) const {
        out = k;
    }

    struct Hash {
        std::size_t operator()(const Key& k) const {
            std::uint64_t h = 1469598103934665603ULL;
            for (std::uint32_t v : k) {
                for (int b = 0; b < 4; ++b) {
                    h ^= (v >> (8 * b)) & 0xff;
                    h *= 1099511628211ULL;
                }
            }
            return static_cast<std::size_t>(h);
        }
    };
};

template <class Codec>
struct SearchNode {
    typename Codec::Key key;
    std::uint32_t parent;
    std::uint32_t g;
    std::int8_t letter;  // letter appended to reach this state, -1 at the root
};

template <class Codec>
SolverResult run_exact_search(const std::vector<Word>& L, const Codec& codec,
                              const SearchBudget& budget, const SolverResult& incumbent,
                              Clock::time_point t0) {
    const std::size_t nwords = L.size();
    std::vector<std::uint32_t> lens(nwords);
    for (std::size_t i = 0; i < nwords; ++i) lens[i] = static_cast<std::uint32_t>(L[i].size());

    const auto heuristic = [&](const std::vector<std::uint32_t>& pos) {
        std::uint32_t h = 0;
        for (std::size_t i = 0; i < nwords; ++i) h = std::max(h, lens[i] - pos[i]);
        return h;
    };

    using Node = SearchNode<Codec>;
    std::vector<Node> nodes;
    std::unordered_map<typename Codec::Key, std::uint32_t, typename Codec::Hash> best;

    // The incumbent length caps the search: no state with length-plus-bound
    // beyond it can lead to a strictly better solution, and states at exactly
    // the cap are kept so an optimum of that length is still found.
    std::uint64_t cap = std::min<std::uint64_t>(budget.max_length, incumbent.length);

    std::vector<std::uint32_t> start(nwords, 0);
    const std::uint32_t h0 = heuristic(start);

    SolverResult result;
    result.states_expanded = 0;

    auto finish_with = [&](const Word& w, bool optimal) {
        result.supersequence = w;
        result.length = w.size();
        result.optimal = optimal;
        result.elapsed_seconds = seconds_since(t0);
        return result;
    };

    if (h0 == 0) return finish_with(Word(), true);  // every word is empty
    if (h0 > cap) return finish_with(incumbent.supersequence, incumbent.optimal);

    nodes.push_back(Node{codec.encode(start), 0, 0, -1});
    best.emplace(nodes[0].key, 0);

    std::vector<std::vector<std::uint32_t>> buckets(cap + 1);
    buckets[h0].push_back(0);

    std::uint32_t goal_node = std::numeric_limits<std::uint32_t>::max();
    std::uint64_t goal_g = std::numeric_limits<std::uint64_t>::max();

    auto reconstruct = [&](std::uint32_t idx) {
        std::string s;
        for (std::uint32_t at = idx; nodes[at].letter >= 0; at = nodes[at].parent) {
            s += static_cast<char>('0' + nodes[at].letter);
        }
        std::reverse(s.begin(), s.end());
        return Word(std::move(s));
    };

    std::vector<std::uint32_t> pos(nwords), next(nwords);
    bool exhausted_budget = false;

    for (std::uint64_t f = h0; f <= cap && !exhausted_budget; ++f) {
        for (std::size_t cur = 0; cur < buckets[f].size(); ++cur) {
            const std::uint32_t idx = buckets[f][cur];
            const auto it = best.find(nodes[idx].key);
            if (it == best.end() || it->second != idx) continue;  // stale entry
            codec.decode(nodes[idx].key, lens, pos);
            if (heuristic(pos) == 0) {
                // First goal expanded: optimal by admissibility of the bound.
                return finish_with(reconstruct(idx), true);
            }
            if (result.states_expanded >= budget.max_states) {
                exhausted_budget = true;
                break;
            }
            ++result.states_expanded;
            const std::uint32_t g2 = nodes[idx].g + 1;
            for (int c = 0; c < 3; ++c) {
                const char letter = static_cast<char>('0' + c);
                bool advanced = false;
                std::uint32_t h2 = 0;
                for (std::size_t i = 0; i < nwords; ++i) {
                    std::uint32_t p = pos[i];
                    if (p < lens[i] && L[i][p] == letter) {
                        ++p;
                        advanced = true;
                    }
                    next[i] = p;
                    h2 = std::max(h2, lens[i] - p);
                }
                if (!advanced) continue;  // a letter no word needs is never useful
                const std::uint64_t f2 = g2 + h2;
                if (f2 > cap) continue;
                auto key2 = codec.encode(next);
                const auto found = best.find(key2);
                if (found != best.end() && nodes[found->second].g <= g2) continue;
                const std::uint32_t new_idx = static_cast<std::uint32_t>(nodes.size());
                nodes.push_back(Node{std::move(key2), idx, g2, static_cast<std::int8_t>(c)});
                if (found != best.end()) {
                    best[nodes[new_idx].key] = new_idx;
                } else {
                    best.emplace(nodes[new_idx].key, new_idx);
                }
                buckets[f2].push_back(new_idx);
                if (h2 == 0 && g2 < goal_g) {
                    goal_g = g2;
                    goal_node = new_idx;
                    cap = std::min<std::uint64_t>(cap, g2);
                }
            }
        }
    }

    // No goal expanded within the cap or the budget ran out: fall back to the
    // best incumbent (a pushed goal beats the heuristic word if shorter).
    if (goal_node != std::numeric_limits<std::uint32_t>::max() && goal_g < incumbent.length) {
        return finish_with(reconstruct(goal_node), false);
    }
    return finish_with(incumbent.supersequence,
                       !exhausted_budget && incumbent.optimal);
}

}  // namespace

SolverResult scs_pairwise(const Word& u, const Word& v) {
    const auto t0 = Clock::now();
    const std::size_t n = u.size(), m = v.size();
    // LCS table, row-major (n+1) x (m+1).
    std::vector<std::uint32_t> dp((n + 1) * (m + 1), 0);
    const auto at = [&](std::size_t i, std::size_t j) -> std::uint32_t& {
        return dp[i * (m + 1) + j];
    };
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= m; ++j) {
            at(i, j) = (u[i - 1] == v[j - 1]) ? at(i - 1, j - 1) + 1
                                              : std::max(at(i - 1, j), at(i, j - 1));
        }
    }
    std::string out;
    out.reserve(n + m - at(n, m));
    std::size_t i = n, j = m;
    while (i > 0 && j > 0) {
        if (u[i - 1] == v[j - 1]) {
            out += u[i - 1];
            --i;
            --j;
        } else if (at(i - 1, j) >= at(i, j - 1)) {
            out += u[i - 1];
            --i;
        } else {
            out += v[j - 1];
            --j;
        }
    }
    while (i > 0) out += u[--i];
    while (j > 0) out += v[--j];
    std::reverse(out.begin(), out.end());

    SolverResult r;
    r.supersequence = Word(std::move(out));
    r.length = r.supersequence.size();
    r.optimal = true;
    r.states_expanded = (n + 1) * (m + 1);
    r.elapsed_seconds = seconds_since(t0);
    return r;
}

SolverResult scs_exact(std::vector<Word> L, const SearchBudget& budget) {
    if (budget.max_states == 0 || budget.max_length == 0) {
        throw PreconditionError("scs_exact: budget limits must be positive");
    }
    const auto t0 = Clock::now();
    canonicalize(L);
    SolverResult incumbent = majority_merge_canonical(L);
    if (auto codec = PackedCodec::make(L)) {
        return run_exact_search(L, *codec, budget, incumbent, t0);
    }
    return run_exact_search(L, VectorCodec{}, budget, incumbent, t0);
}

namespace {

// Shared enumeration core: calls visit(candidate) for every supersequence of
// L found at the minimal achievable length <= max_len. Returns that length.
template <class Visit>
std::optional<std::size_t> enumerate_optima(const std::vector<Word>& L, std::size_t max_len,
                                            std::uint64_t& tested, Visit visit) {
    const std::size_t lo = max_word_length(L);  // nothing shorter can work
    for (std::size_t len = lo; len <= max_len; ++len) {
        bool found = false;
        std::string cand(len, '0');
        for (;;) {
            ++tested;
            bool ok = true;
            for (const Word& w : L) {
                if (!is_supersequence(w.str(), cand)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                found = true;
                visit(cand);
            }
            // Odometer step in lexicographic order.
            std::size_t p = len;
            while (p > 0 && cand[p - 1] == '2') cand[--p] = '0';
            if (p == 0) break;
            ++cand[p - 1];
        }
        if (found) return len;
    }
    return std::nullopt;
}

void check_enumeration_bound(std::size_t max_len) {
    if (max_len > 20) {
        throw PreconditionError("scs_brute_force: refusing to enumerate beyond length 20 "
                                "over a 3-letter alphabet");
    }
}

}  // namespace

std::optional<SolverResult> scs_brute_force(const std::vector<Word>& L, std::size_t max_len) {
    check_enumeration_bound(max_len);
    const auto t0 = Clock::now();
    std::uint64_t tested = 0;
    std::optional<Word> first;
    auto len = enumerate_optima(L, max_len, tested, [&](const std::string& cand) {
        if (!first) first = Word(cand);
    });
    if (!len) return std::nullopt;
    SolverResult r;
    r.supersequence = *first;
    r.length = *len;
    r.optimal = true;
    r.states_expanded = tested;
    r.elapsed_seconds = seconds_since(t0);
    return r;
}

std::optional<std::vector<Word>> scs_all_optima(const std::vector<Word>& L, std::size_t max_len) {
    check_enumeration_bound(max_len);
    std::uint64_t tested = 0;
    std::vector<Word> optima;
    auto len = enumerate_optima(L, max_len, tested,
                                [&](const std::string& cand) { optima.emplace_back(cand); });
    if (!len) return std::nullopt;
    return optima;
}

SolverResult scs_majority_merge(std::vector<Word> L) {
    canonicalize(L);
    return majority_merge_canonical(L);
}

}  // namespace scs
