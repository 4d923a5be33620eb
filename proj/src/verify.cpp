#include "scs/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "scs/errors.hpp"
#include "scs/normalizer.hpp"
#include "scs/reduction.hpp"
#include "scs/solver.hpp"
#include "scs/word.hpp"

namespace scs {

bool CheckGroup::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const CheckResult* CheckGroup::first_failure() const {
    for (const CheckResult& c : checks) {
        if (!c.pass) return &c;
    }
    return nullptr;
}

namespace {

class Timer {
  public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

std::string fmt_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f s", s);
    return buf;
}

void add(CheckGroup& g, std::string name, std::string expected, std::string observed, bool pass) {
    g.checks.push_back(CheckResult{std::move(name), std::move(expected), std::move(observed), pass});
}

void add_eq(CheckGroup& g, std::string name, std::uint64_t expected, std::uint64_t observed) {
    add(g, std::move(name), std::to_string(expected), std::to_string(observed),
        expected == observed);
}

void add_true(CheckGroup& g, std::string name, bool ok) {
    add(g, std::move(name), "true", ok ? "true" : "false", ok);
}

void add_elapsed(CheckGroup& g, double elapsed, double limit) {
    add(g, "wall time", "< " + fmt_seconds(limit), fmt_seconds(elapsed), elapsed < limit);
}

bool covers_all(const std::vector<Word>& L, const Word& s) {
    return std::all_of(L.begin(), L.end(),
                       [&](const Word& w) { return is_supersequence(w, s); });
}

/// A random interleaving of all letters of all words, in order: a
/// supersequence of every word by construction.
Word random_merge(const std::vector<Word>& L, std::mt19937_64& rng) {
    std::vector<std::size_t> pos(L.size(), 0);
    std::vector<std::size_t> live;
    for (std::size_t i = 0; i < L.size(); ++i) {
        if (!L[i].empty()) live.push_back(i);
    }
    std::string out;
    while (!live.empty()) {
        const std::size_t pick = live[rng() % live.size()];
        out += L[pick][pos[pick]];
        if (++pos[pick] == L[pick].size()) {
            live.erase(std::find(live.begin(), live.end(), pick));
        }
    }
    return Word(std::move(out));
}

Word insert_noise(const Word& w, std::mt19937_64& rng, std::size_t max_insertions) {
    std::string s = w.str();
    const std::size_t count = rng() % (max_insertions + 1);
    for (std::size_t t = 0; t < count; ++t) {
        const std::size_t at = rng() % (s.size() + 1);
        s.insert(s.begin() + static_cast<std::ptrdiff_t>(at), kAlphabet[rng() % 3]);
    }
    return Word(std::move(s));
}

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

}  // namespace

CheckGroup run_criterion_1() {
    CheckGroup g{1, "two-word instances", {}, 0.0};
    Timer timer;

    {
        const std::vector<Word> L = {Word("00111"), Word("11100")};
        const SolverResult r = scs_exact(L);
        add_eq(g, "scs{00111, 11100} length", 7, r.length);
        add_true(g, "solver reports optimal", r.optimal);
        add_true(g, "solver witness covers both words", covers_all(L, r.supersequence));
        add_true(g, "0011100 is a common supersequence", covers_all(L, Word("0011100")));
        add_eq(g, "pairwise solver agrees", 7, scs_pairwise(L[0], L[1]).length);
    }
    {
        const std::vector<Word> L = {Word("0202111"), Word("1110202")};
        const SolverResult r = scs_exact(L);
        add_eq(g, "scs{0202111, 1110202} length", 10, r.length);
        add_true(g, "solver reports optimal", r.optimal);
        add_true(g, "solver witness covers both words", covers_all(L, r.supersequence));
        add_true(g, "1110202111 is a common supersequence", covers_all(L, Word("1110202111")));
        add_eq(g, "pairwise solver agrees", 10, scs_pairwise(L[0], L[1]).length);
    }

    g.elapsed_seconds = timer.seconds();
    add_elapsed(g, g.elapsed_seconds, 1.0);
    return g;
}

CheckGroup run_criterion_2() {
    CheckGroup g{2, "binary cube and its two-letter coding", {}, 0.0};
    Timer timer;

    std::vector<Word> cube;
    for (int b = 0; b < 8; ++b) {
        std::string w = {static_cast<char>('0' + ((b >> 2) & 1)),
                         static_cast<char>('0' + ((b >> 1) & 1)),
                         static_cast<char>('0' + (b & 1))};
        if (w != "111") cube.emplace_back(std::move(w));
    }

    const SolverResult r = scs_exact(cube);
    add_eq(g, "cube scs length", 5, r.length);
    add_true(g, "solver witness covers the cube", covers_all(cube, r.supersequence));
    add_true(g, "01010 is a common supersequence", covers_all(cube, Word("01010")));

    const auto optima = scs_all_optima(cube, 5);
    add_true(g, "an optimum of length <= 5 exists", optima.has_value());
    add_eq(g, "optimal supersequences of length 5", 1, optima ? optima->size() : 0);
    add(g, "the unique optimum", "01010",
        (optima && !optima->empty()) ? optima->front().str() : "(none)",
        optima && optima->size() == 1 && optima->front().str() == "01010");

    // Recode the cube letterwise by 0 -> 02, 1 -> 12.
    std::vector<Word> coded;
    for (const Word& w : cube) {
        std::string m;
        for (char c : w) m += (c == '0') ? "02" : "12";
        coded.emplace_back(std::move(m));
    }
    const SolverResult rc = scs_exact(coded);
    add_eq(g, "coded cube scs length", 9, rc.length);
    add_true(g, "solver witness covers the coded cube", covers_all(coded, rc.supersequence));
    add_true(g, "012012012 is a common supersequence", covers_all(coded, Word("012012012")));

    // No word obtained from 01010 by inserting twos covers the coded cube,
    // even with as many insertions as the known optimum lengths allow.
    std::size_t candidates = 0, covering = 0;
    for (std::size_t c0 = 0; c0 <= 4; ++c0)
        for (std::size_t c1 = 0; c0 + c1 <= 4; ++c1)
            for (std::size_t c2 = 0; c0 + c1 + c2 <= 4; ++c2)
                for (std::size_t c3 = 0; c0 + c1 + c2 + c3 <= 4; ++c3)
                    for (std::size_t c4 = 0; c0 + c1 + c2 + c3 + c4 <= 4; ++c4)
                        for (std::size_t c5 = 0; c0 + c1 + c2 + c3 + c4 + c5 <= 4; ++c5) {
                            std::string w;
                            w.append(c0, '2').append(1, '0');
                            w.append(c1, '2').append(1, '1');
                            w.append(c2, '2').append(1, '0');
                            w.append(c3, '2').append(1, '1');
                            w.append(c4, '2').append(1, '0');
                            w.append(c5, '2');
                            ++candidates;
                            if (covers_all(coded, Word(std::move(w)))) ++covering;
                        }
    add_eq(g, "words built by inserting twos into 01010", 210, candidates);
    add_eq(g, "insertions that cover the coded cube", 0, covering);
    add_true(g, "0212021202 is a common supersequence", covers_all(coded, Word("0212021202")));

    g.elapsed_seconds = timer.seconds();
    add_elapsed(g, g.elapsed_seconds, 10.0);
    return g;
}

CheckGroup run_criterion_3() {
    CheckGroup g{3, "hard family exact optimum, n = 2", {}, 0.0};
    Timer timer;

    const std::vector<Word> family = hard_family(2);
    add_eq(g, "family size", 5, family.size());
    const SolverResult r = scs_exact(family);
    add_eq(g, "exact scs length", 21, r.length);
    add_true(g, "solver reports optimal", r.optimal);
    add_true(g, "solver witness covers the family", covers_all(family, r.supersequence));

    const Word smin = hard_family_smin(2);
    add(g, "closed-form optimum", "102021020210202102021", smin.str(),
        smin.str() == "102021020210202102021");
    add_eq(g, "closed-form optimum length", 21, smin.size());
    add_true(g, "closed-form optimum covers the family", covers_all(family, smin));
    add_true(g, "closed-form optimum is a phi image", is_in_phi_image(smin));

    g.elapsed_seconds = timer.seconds();
    add_elapsed(g, g.elapsed_seconds, 30.0);
    return g;
}

CheckGroup run_criterion_4() {
    CheckGroup g{4, "hard family counting bounds", {}, 0.0};
    Timer timer;

    for (const int n : {2, 4}) {
        const std::vector<Word> family = hard_family(n);
        const Word smin = hard_family_smin(n);
        std::mt19937_64 rng(0xC0DE0400u + static_cast<unsigned>(n));

        std::size_t cases = 0, bad_ones_to_blocks = 0, bad_blocks_to_ones = 0, exceptions = 0;
        std::string first_error;
        auto run_case = [&](const Word& raw) {
            try {
                const Word s = normalize(raw, family);
                ++cases;
                if (!hard_family_ones_to_blocks_bound(s, n)) ++bad_ones_to_blocks;
                if (!hard_family_blocks_to_ones_bound(s, n)) ++bad_blocks_to_ones;
            } catch (const std::exception& e) {
                ++exceptions;
                if (first_error.empty()) first_error = e.what();
            }
        };

        for (int rep = 0; rep < 500; ++rep) run_case(random_merge(family, rng));
        for (int rep = 0; rep < 499; ++rep) run_case(insert_noise(smin, rng, 12));
        run_case(scs_majority_merge(family).supersequence);

        const std::string tag = "n = " + std::to_string(n) + ": ";
        add_eq(g, tag + "supersequences checked", 1000, cases);
        add_eq(g, tag + "ones-to-blocks violations", 0, bad_ones_to_blocks);
        add_eq(g, tag + "blocks-to-ones violations", 0, bad_blocks_to_ones);
        add(g, tag + "unexpected exceptions", "0",
            exceptions == 0 ? "0" : std::to_string(exceptions) + " (first: " + first_error + ")",
            exceptions == 0);
        add_true(g, tag + "both bounds hold at the closed-form optimum",
                 hard_family_ones_to_blocks_bound(smin, n) &&
                     hard_family_blocks_to_ones_bound(smin, n));
    }

    // Both bounds are met with equality at the closed-form optimum for n = 2.
    {
        const Word smin = hard_family_smin(2);
        const std::uint64_t nn = 4;
        const std::uint64_t ones = count_ones(smin);
        const std::uint64_t blocks = count_0202_blocks(smin);
        add_eq(g, "n = 2 optimum: ones", 5, ones);
        add_eq(g, "n = 2 optimum: 0202 blocks", 4, blocks);
        add_eq(g, "ones-to-blocks bound is tight", blocks, ceil_div(nn + 1, ones) - 1 + nn);
        add_eq(g, "blocks-to-ones bound is tight", ones, ceil_div(nn + 1, blocks - (nn - 1)));
    }

    g.elapsed_seconds = timer.seconds();
    add_elapsed(g, g.elapsed_seconds, 120.0);
    return g;
}

CheckGroup run_criterion_5() {
    CheckGroup g{5, "vertex-cover reduction round trips", {}, 0.0};
    Timer timer;

    std::size_t graphs = 0, covers_checked = 0;
    std::size_t bad_length = 0, bad_coverage = 0, bad_zones = 0, bad_roundtrip = 0;
    std::size_t bad_minimum = 0, exceptions = 0;
    std::string first_error;

    for (int n = 1; n <= 4; ++n) {
        std::vector<std::pair<int, int>> all_edges;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) all_edges.push_back({i, j});

        for (std::uint32_t mask = 0; mask < (1u << all_edges.size()); ++mask) {
            Graph graph;
            graph.n = n;
            for (std::size_t e = 0; e < all_edges.size(); ++e) {
                if (mask & (1u << e)) graph.edges.push_back(all_edges[e]);
            }
            ++graphs;

            // All minimum covers, by exhausting the 2^n vertex subsets.
            int best = n + 1;
            std::vector<VertexCover> minimum;
            for (std::uint32_t vm = 0; vm < (1u << n); ++vm) {
                VertexCover c;
                for (int v = 1; v <= n; ++v) {
                    if (vm & (1u << (v - 1))) c.vertices.push_back(v);
                }
                if (!is_vertex_cover(graph, c)) continue;
                const int size = static_cast<int>(c.size());
                if (size < best) {
                    best = size;
                    minimum.clear();
                }
                if (size == best) minimum.push_back(std::move(c));
            }

            const auto bf = vertex_cover_brute_force(graph, n);
            if (!bf || static_cast<int>(bf->size()) != best) ++bad_minimum;

            for (const VertexCover& c : minimum) {
                ++covers_checked;
                try {
                    const Word w = witness_from_cover(graph, c);
                    if (w.size() != threshold(n, static_cast<int>(c.size()))) ++bad_length;

                    const ReductionInstance inst = build_gadgets(graph);
                    bool all_covered = true;
                    inst.for_each_word([&](std::size_t, const Word& word) {
                        if (all_covered && !is_supersequence(word, w)) all_covered = false;
                    });
                    if (!all_covered) ++bad_coverage;

                    const std::size_t un = static_cast<std::size_t>(n);
                    const std::size_t prefix_len = 24 * un * un + 13 * un + c.size();
                    if (!check_structural_ones(Word(w.str().substr(0, prefix_len)), n))
                        ++bad_zones;

                    const VertexCover back = extract_cover(w, graph, static_cast<int>(c.size()));
                    if (!(back == c)) ++bad_roundtrip;
                } catch (const std::exception& e) {
                    ++exceptions;
                    if (first_error.empty()) first_error = e.what();
                }
            }
        }
    }

    add_eq(g, "graphs enumerated (all on up to 4 vertices)", 75, graphs);
    add(g, "minimum covers verified", ">= 75", std::to_string(covers_checked),
        covers_checked >= 75);
    add_eq(g, "witness length mismatches", 0, bad_length);
    add_eq(g, "witness coverage failures", 0, bad_coverage);
    add_eq(g, "structural-ones failures in the witness prefix", 0, bad_zones);
    add_eq(g, "extraction round-trip mismatches", 0, bad_roundtrip);
    add_eq(g, "brute-force minimum-cover disagreements", 0, bad_minimum);
    add(g, "unexpected exceptions", "0",
        exceptions == 0 ? "0" : std::to_string(exceptions) + " (first: " + first_error + ")",
        exceptions == 0);

    add_eq(g, "threshold(1, 0)", 202, threshold(1, 0));
    add_eq(g, "threshold(1, 1)", 203, threshold(1, 1));
    add_eq(g, "threshold(2, 1)", 744, threshold(2, 1));
    {
        const Graph k2{2, {{1, 2}}};
        const ReductionInstance inst = build_gadgets(k2);
        add_eq(g, "single-edge instance word count", 291, inst.word_count());
        add_eq(g, "single-edge instance X word length", 698, inst.word_at(0).size());
        add_eq(g, "single-edge instance T word length", 694, inst.word_at(290).size());
    }
    {
        const Graph k4{4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};
        const ReductionInstance inst = build_gadgets(k4);
        add_eq(g, "complete-4 instance word count", 2314, inst.word_count());
        add_eq(g, "complete-4 instance X word length", 2738, inst.word_at(0).size());
        add_eq(g, "complete-4 instance T word length", 2734,
               inst.word_at(inst.word_count() - 1).size());
    }

    g.elapsed_seconds = timer.seconds();
    return g;
}

CheckGroup run_criterion_6() {
    CheckGroup g{6, "normalizer guarantees on random inputs", {}, 0.0};
    Timer timer;

    std::mt19937_64 rng(0xC0DE0600u);
    const std::size_t total = 10000;
    std::size_t cases = 0, bad_image = 0, bad_growth = 0, bad_lost = 0;
    std::size_t bad_replay = 0, bad_potential = 0, exceptions = 0;
    std::string first_error;

    for (std::size_t rep = 0; rep < total; ++rep) {
        try {
            const std::size_t word_count = 1 + rng() % 4;
            std::vector<Word> L;
            for (std::size_t i = 0; i < word_count; ++i) {
                const std::size_t len = rng() % 7;
                std::string bin;
                for (std::size_t p = 0; p < len; ++p) bin += static_cast<char>('0' + rng() % 2);
                L.push_back(phi_encode(Word(std::move(bin))));
            }
            const Word s = insert_noise(random_merge(L, rng), rng, 8);

            RewriteTrace trace;
            const Word out = normalize(s, L, &trace);
            ++cases;

            if (!is_in_phi_image(out)) ++bad_image;
            if (out.size() > s.size()) ++bad_growth;
            if (!covers_all(L, out)) ++bad_lost;

            const std::uint64_t c = potential_weight(s);
            Word cur = s;
            std::uint64_t prev = weighted_potential(cur, c);
            bool decreasing = true;
            for (const RewriteStep& step : trace.steps) {
                cur = apply_rewrite_step(cur, step);
                const std::uint64_t now = weighted_potential(cur, c);
                if (now >= prev) {
                    decreasing = false;
                    break;
                }
                prev = now;
            }
            if (!decreasing)
                ++bad_potential;
            else if (!(cur == out))
                ++bad_replay;
        } catch (const std::exception& e) {
            ++exceptions;
            if (first_error.empty()) first_error = e.what();
        }
    }

    add_eq(g, "cases run", total, cases);
    add_eq(g, "results outside the phi image", 0, bad_image);
    add_eq(g, "results longer than the input", 0, bad_growth);
    add_eq(g, "results that lost a word", 0, bad_lost);
    add_eq(g, "traces with non-decreasing potential", 0, bad_potential);
    add_eq(g, "trace replays that missed the result", 0, bad_replay);
    add(g, "unexpected exceptions", "0",
        exceptions == 0 ? "0" : std::to_string(exceptions) + " (first: " + first_error + ")",
        exceptions == 0);

    g.elapsed_seconds = timer.seconds();
    add_elapsed(g, g.elapsed_seconds, 60.0);
    return g;
}

CheckGroup run_criterion_7() {
    CheckGroup g{7, "exact solver against the brute-force oracle", {}, 0.0};
    Timer timer;

    std::mt19937_64 rng(0xC0DE0700u);
    const std::size_t total = 1000;
    std::size_t cases = 0, missing = 0, mismatches = 0;
    std::size_t bad_exact_witness = 0, bad_brute_witness = 0, not_optimal = 0, exceptions = 0;
    std::string first_error;

    for (std::size_t rep = 0; rep < total; ++rep) {
        try {
            const std::size_t word_count = 1 + rng() % 4;
            std::vector<Word> L;
            std::size_t total_len = 0;
            for (std::size_t i = 0; i < word_count; ++i) {
                const std::size_t len = rng() % 6;
                total_len += len;
                std::string w;
                for (std::size_t p = 0; p < len; ++p) w += kAlphabet[rng() % 3];
                L.emplace_back(std::move(w));
            }
            ++cases;

            const SolverResult exact = scs_exact(L);
            const auto brute = scs_brute_force(L, total_len);
            if (!brute) {
                ++missing;
                continue;
            }
            if (brute->length != exact.length) ++mismatches;
            if (!covers_all(L, exact.supersequence)) ++bad_exact_witness;
            if (!covers_all(L, brute->supersequence)) ++bad_brute_witness;
            if (!exact.optimal) ++not_optimal;
        } catch (const std::exception& e) {
            ++exceptions;
            if (first_error.empty()) first_error = e.what();
        }
    }

    add_eq(g, "cases run", total, cases);
    add_eq(g, "oracle found no supersequence", 0, missing);
    add_eq(g, "length disagreements", 0, mismatches);
    add_eq(g, "invalid solver witnesses", 0, bad_exact_witness);
    add_eq(g, "invalid oracle witnesses", 0, bad_brute_witness);
    add_eq(g, "solver results not flagged optimal", 0, not_optimal);
    add(g, "unexpected exceptions", "0",
        exceptions == 0 ? "0" : std::to_string(exceptions) + " (first: " + first_error + ")",
        exceptions == 0);

    g.elapsed_seconds = timer.seconds();
    return g;
}

namespace {

CheckGroup run_one(int id) {
    try {
        switch (id) {
            case 1: return run_criterion_1();
            case 2: return run_criterion_2();
            case 3: return run_criterion_3();
            case 4: return run_criterion_4();
            case 5: return run_criterion_5();
            case 6: return run_criterion_6();
            case 7: return run_criterion_7();
        }
        throw PreconditionError("unknown criterion id " + std::to_string(id));
    } catch (const std::exception& e) {
        CheckGroup g{id, "criterion " + std::to_string(id), {}, 0.0};
        add(g, "criterion ran to completion", "no exception", e.what(), false);
        return g;
    }
}

}  // namespace

std::vector<CheckGroup> run_scope(const std::string& scope) {
    std::vector<int> ids;
    if (scope == "intro") {
        ids = {1, 2};
    } else if (scope == "family") {
        ids = {3, 4};
    } else if (scope == "reduction") {
        ids = {5};
    } else if (scope == "normalizer") {
        ids = {6};
    } else if (scope == "solver") {
        ids = {7};
    } else if (scope == "all") {
        ids = {1, 2, 3, 4, 5, 6, 7};
    } else {
        throw PreconditionError("unknown scope \"" + scope +
                                "\" (expected intro, family, reduction, normalizer, solver, or all)");
    }
    std::vector<CheckGroup> out;
    out.reserve(ids.size());
    for (int id : ids) out.push_back(run_one(id));
    return out;
}

}  // namespace scs
