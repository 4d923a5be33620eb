#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "scs/errors.hpp"
#include "scs/normalizer.hpp"
#include "scs/word.hpp"

using namespace scs;

namespace {

std::string random_word(std::mt19937_64& rng, std::size_t max_len, int alphabet = 3) {
    std::string w;
    const std::size_t len = rng() % (max_len + 1);
    for (std::size_t i = 0; i < len; ++i) w += kAlphabet[rng() % alphabet];
    return w;
}

bool is_two_letter_normal(const Word& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        const char a = w[i], b = w[i + 1];
        if ((a == '0' && b == '0') || (a == '2' && b == '2') || (a == '0' && b == '1') ||
            (a == '1' && b == '2'))
            return false;
    }
    if (!w.empty() && (w[0] == '2' || w[w.size() - 1] == '0')) return false;
    return true;
}

}  // namespace

TEST_CASE("first step worked examples") {
    CHECK(first_step(Word("00")).first == Word(""));
    CHECK(first_step(Word("01")).first == Word("1"));
    CHECK(first_step(Word("2102")).first == Word("102"));
    CHECK(first_step(Word("0202")).first == Word("0202"));
    CHECK(first_step(Word("")).first == Word(""));
    CHECK(first_step(Word("120")).first == Word("1"));  // 120 -> 210 -> 21 -> 1
}

TEST_CASE("first step reaches the block-or-one normal form") {
    std::mt19937_64 rng(1001);
    for (int rep = 0; rep < 2000; ++rep) {
        const Word s(random_word(rng, 30));
        const auto [w, trace] = first_step(s);
        CHECK(is_two_letter_normal(w));
        CHECK_NOTHROW(segment(w));  // (02|1)* form
        CHECK(w.size() <= s.size());
        CHECK(count_ones(w) == count_ones(s));
        // Already-normal inputs are fixpoints with empty traces.
        const auto [w2, trace2] = first_step(w);
        CHECK(w2 == w);
        CHECK(trace2.steps.empty());
    }
}

TEST_CASE("second step worked example") {
    const auto [w, trace] = second_step(Word("0210202"));
    CHECK(w == Word("10202"));
    REQUIRE(trace.steps.size() == 2);
    CHECK(trace.steps[0].rule == RuleId::seg_shift);
    CHECK(trace.steps[0].pos == 0);
    CHECK(trace.steps[1].rule == RuleId::seg_trim);
    CHECK(trace.steps[1].pos == 1);
    CHECK_THROWS_AS(second_step(Word("010")), ParseError);
}

TEST_CASE("second step yields an image word and keeps the ones") {
    std::mt19937_64 rng(2002);
    for (int rep = 0; rep < 1000; ++rep) {
        PhiSegmentation ref;
        ref.runs.clear();
        const std::size_t ones = rng() % 5;
        for (std::size_t t = 0; t <= ones; ++t) ref.runs.push_back(rng() % 6);
        const Word in = ref.reconstruct();
        const auto [out, trace] = second_step(in);
        CHECK(is_in_phi_image(out));
        CHECK(count_ones(out) == count_ones(in));
        CHECK(out.size() <= in.size());
        CHECK(in.size() - out.size() <= 2);  // at most one trimmed block
    }
}

TEST_CASE("phi images are fixpoints of the whole pipeline") {
    std::mt19937_64 rng(3003);
    for (int rep = 0; rep < 300; ++rep) {
        const Word img = phi_encode(Word(random_word(rng, 6, 2)));
        RewriteTrace trace;
        CHECK(normalize(img, {img}, &trace) == img);
        CHECK(trace.steps.empty());
    }
}

TEST_CASE("normalize rejects bad inputs") {
    CHECK_THROWS_AS(normalize(Word("0202"), {Word("02")}, nullptr), PreconditionError);
    CHECK_THROWS_AS(normalize(Word("1"), {Word("0202")}, nullptr), PreconditionError);
}

TEST_CASE("normalize guarantees, trace replay, and potential descent") {
    std::mt19937_64 rng(4004);
    for (int rep = 0; rep < 300; ++rep) {
        std::vector<Word> L;
        const std::size_t count = 1 + rng() % 3;
        for (std::size_t i = 0; i < count; ++i)
            L.push_back(phi_encode(Word(random_word(rng, 5, 2))));

        // A supersequence: concatenation plus random noise.
        std::string cat;
        for (const Word& w : L) cat += w.str();
        std::string noisy = cat;
        const std::size_t inserts = rng() % 6;
        for (std::size_t t = 0; t < inserts; ++t)
            noisy.insert(noisy.begin() + static_cast<std::ptrdiff_t>(rng() % (noisy.size() + 1)),
                         kAlphabet[rng() % 3]);
        const Word s(noisy);

        RewriteTrace trace;
        const Word out = normalize(s, L, &trace);
        CHECK(is_in_phi_image(out));
        CHECK(out.size() <= s.size());
        for (const Word& w : L) CHECK(is_supersequence(w, out));

        const std::uint64_t c = potential_weight(s);
        Word cur = s;
        std::uint64_t prev = weighted_potential(cur, c);
        for (const RewriteStep& step : trace.steps) {
            cur = apply_rewrite_step(cur, step);
            const std::uint64_t now = weighted_potential(cur, c);
            CHECK(now < prev);
            prev = now;
        }
        CHECK(cur == out);
    }
}

TEST_CASE("potential hand value") {
    // "01": one 0-before-1 pair, no 1-before-2 pair, weight 2*2+1 = 5.
    CHECK(potential_weight(Word("01")) == 5);
    CHECK(weighted_potential(Word("01"), 5) == 5 * 2 + 2);
    CHECK(weighted_potential(Word("012"), 5) == 5 * 3 + 2 + 1);
    CHECK(weighted_potential(Word(""), 5) == 0);
}

TEST_CASE("replay rejects steps that do not apply") {
    CHECK_THROWS_AS(
        apply_rewrite_step(Word("01"), RewriteStep{RuleId::swap_zero_one, 2, 2, 2}),
        PreconditionError);
    CHECK_THROWS_AS(
        apply_rewrite_step(Word("01"), RewriteStep{RuleId::swap_one_two, 1, 2, 2}),
        PreconditionError);
    CHECK_THROWS_AS(
        apply_rewrite_step(Word("01"), RewriteStep{RuleId::swap_zero_one, 1, 3, 3}),
        PreconditionError);
    CHECK_THROWS_AS(apply_rewrite_step(Word("0202"), RewriteStep{RuleId::seg_shift, 0, 4, 4}),
                    PreconditionError);
    CHECK(apply_rewrite_step(Word("01"), RewriteStep{RuleId::swap_zero_one, 1, 2, 2}) ==
          Word("10"));
    CHECK(apply_rewrite_step(Word("0210202"), RewriteStep{RuleId::seg_shift, 0, 7, 7}) ==
          Word("1020202"));
}

TEST_CASE("rule names") {
    CHECK(rule_name(RuleId::drop_trailing_zero) == "i");
    CHECK(rule_name(RuleId::swap_one_two) == "vi");
    CHECK(rule_name(RuleId::seg_shift) == "seg-shift");
    CHECK(rule_name(RuleId::seg_trim) == "seg-trim");
}
