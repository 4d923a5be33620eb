#include "scs/normalizer.hpp"

#include <string>

namespace scs {

std::string_view rule_name(RuleId id) {
    switch (id) {
        case RuleId::drop_trailing_zero: return "i";
        case RuleId::drop_leading_two: return "ii";
        case RuleId::merge_zeros: return "iii";
        case RuleId::merge_twos: return "iv";
        case RuleId::swap_zero_one: return "v";
        case RuleId::swap_one_two: return "vi";
        case RuleId::seg_shift: return "seg-shift";
        case RuleId::seg_trim: return "seg-trim";
    }
    return "?";
}

std::pair<Word, RewriteTrace> first_step(const Word& s) {
    std::string w = s.str();
    RewriteTrace trace;
    auto emit = [&](RuleId rule, std::size_t pos, std::size_t before, std::size_t after) {
        trace.steps.push_back(RewriteStep{rule, pos, before, after});
    };

    for (;;) {
        // Two-letter rules, leftmost first. A rule application can only make
        // a new factor appear one position to the left, so the scan pointer
        // backs up by one instead of restarting.
        std::size_t p = 0;
        while (p + 1 < w.size()) {
            const char a = w[p], b = w[p + 1];
            if (a == '0' && b == '0') {
                emit(RuleId::merge_zeros, p + 1, w.size(), w.size() - 1);
                w.erase(p + 1, 1);
            } else if (a == '2' && b == '2') {
                emit(RuleId::merge_twos, p + 1, w.size(), w.size() - 1);
                w.erase(p + 1, 1);
            } else if (a == '0' && b == '1') {
                emit(RuleId::swap_zero_one, p + 1, w.size(), w.size());
                w[p] = '1';
                w[p + 1] = '0';
            } else if (a == '1' && b == '2') {
                emit(RuleId::swap_one_two, p + 1, w.size(), w.size());
                w[p] = '2';
                w[p + 1] = '1';
            } else {
                ++p;
                continue;
            }
            p = (p == 0) ? 0 : p - 1;
        }
        if (!w.empty() && w.back() == '0') {
            emit(RuleId::drop_trailing_zero, w.size(), w.size(), w.size() - 1);
            w.pop_back();
            continue;
        }
        if (!w.empty() && w.front() == '2') {
            emit(RuleId::drop_leading_two, 1, w.size(), w.size() - 1);
            w.erase(0, 1);
            continue;
        }
        break;
    }
    return {Word(std::move(w)), std::move(trace)};
}

std::pair<Word, RewriteTrace> second_step(const Word& s2) {
    PhiSegmentation seg = segment(s2);  // throws ParseError on malformed input
    RewriteTrace trace;
    std::size_t len = s2.size();
    for (std::size_t t = 0; t + 1 < seg.runs.size(); ++t) {
        if (seg.runs[t] % 2 != 0) {
            --seg.runs[t];
            ++seg.runs[t + 1];
            trace.steps.push_back(RewriteStep{RuleId::seg_shift, t, len, len});
        }
    }
    if (seg.runs.back() % 2 != 0) {
        --seg.runs.back();
        trace.steps.push_back(RewriteStep{RuleId::seg_trim, seg.runs.size() - 1, len, len - 2});
        len -= 2;
    }
    return {seg.reconstruct(), std::move(trace)};
}

Word normalize(const Word& s, const std::vector<Word>& L, RewriteTrace* trace) {
    for (std::size_t i = 0; i < L.size(); ++i) {
        if (!is_in_phi_image(L[i])) {
            throw PreconditionError("normalize: word #" + std::to_string(i + 1) +
                                    " of L is not in the phi image: " + L[i].str());
        }
    }
    for (std::size_t i = 0; i < L.size(); ++i) {
        if (!is_supersequence(L[i], s)) {
            throw PreconditionError("normalize: input is not a supersequence of word #" +
                                    std::to_string(i + 1) + ": " + L[i].str());
        }
    }

    auto [w1, t1] = first_step(s);
    auto [w2, t2] = second_step(w1);

    if (w2.size() > s.size() || !is_in_phi_image(w2)) {
        throw InvariantError("normalize: result violates the length or image guarantee");
    }
    for (std::size_t i = 0; i < L.size(); ++i) {
        if (!is_supersequence(L[i], w2)) {
            throw InvariantError("normalize: result is no longer a supersequence of word #" +
                                 std::to_string(i + 1) + ": " + L[i].str());
        }
    }

    if (trace) {
        trace->steps.insert(trace->steps.end(), t1.steps.begin(), t1.steps.end());
        trace->steps.insert(trace->steps.end(), t2.steps.begin(), t2.steps.end());
    }
    return w2;
}

namespace {

[[noreturn]] void reject_step(const RewriteStep& step, const std::string& why) {
    throw PreconditionError("apply_rewrite_step: rule " + std::string(rule_name(step.rule)) +
                            " at position " + std::to_string(step.pos) + ": " + why);
}

Word apply_seg_step(const Word& s, const RewriteStep& step) {
    PhiSegmentation seg = segment(s);  // ParseError if not in (02|1)* form
    const std::size_t t = step.pos;
    if (t >= seg.runs.size()) reject_step(step, "run index out of range");
    if (seg.runs[t] % 2 == 0) reject_step(step, "run count is even");
    if (step.rule == RuleId::seg_shift) {
        if (t + 1 >= seg.runs.size()) reject_step(step, "no next run to shift into");
        --seg.runs[t];
        ++seg.runs[t + 1];
    } else {
        if (t + 1 != seg.runs.size()) reject_step(step, "trim applies to the final run only");
        --seg.runs[t];
    }
    return seg.reconstruct();
}

}  // namespace

Word apply_rewrite_step(const Word& s, const RewriteStep& step) {
    if (s.size() != step.before_len)
        reject_step(step, "word length " + std::to_string(s.size()) +
                              " does not match recorded length " +
                              std::to_string(step.before_len));
    if (step.rule == RuleId::seg_shift || step.rule == RuleId::seg_trim) {
        Word out = apply_seg_step(s, step);
        if (out.size() != step.after_len) reject_step(step, "result length mismatch");
        return out;
    }

    std::string w = s.str();
    const std::size_t p = step.pos;  // 1-based
    switch (step.rule) {
        case RuleId::drop_trailing_zero:
            if (p != w.size() || w.empty() || w.back() != kZero)
                reject_step(step, "no trailing 0 at that position");
            w.pop_back();
            break;
        case RuleId::drop_leading_two:
            if (p != 1 || w.empty() || w.front() != kTwo)
                reject_step(step, "no leading 2");
            w.erase(0, 1);
            break;
        case RuleId::merge_zeros:
            if (p == 0 || p >= w.size() || w[p - 1] != kZero || w[p] != kZero)
                reject_step(step, "no 00 factor there");
            w.erase(p, 1);
            break;
        case RuleId::merge_twos:
            if (p == 0 || p >= w.size() || w[p - 1] != kTwo || w[p] != kTwo)
                reject_step(step, "no 22 factor there");
            w.erase(p, 1);
            break;
        case RuleId::swap_zero_one:
            if (p == 0 || p >= w.size() || w[p - 1] != kZero || w[p] != kOne)
                reject_step(step, "no 01 factor there");
            w[p - 1] = kOne;
            w[p] = kZero;
            break;
        case RuleId::swap_one_two:
            if (p == 0 || p >= w.size() || w[p - 1] != kOne || w[p] != kTwo)
                reject_step(step, "no 12 factor there");
            w[p - 1] = kTwo;
            w[p] = kOne;
            break;
        default:
            reject_step(step, "unknown rule");
    }
    if (w.size() != step.after_len) reject_step(step, "result length mismatch");
    return Word(std::move(w));
}

std::uint64_t weighted_potential(const Word& s, std::uint64_t c) {
    std::uint64_t zeros_seen = 0, ones_seen = 0;
    std::uint64_t inv01 = 0, inv12 = 0;
    for (char ch : s) {
        if (ch == kZero) {
            ++zeros_seen;
        } else if (ch == kOne) {
            inv01 += zeros_seen;
            ++ones_seen;
        } else {
            inv12 += ones_seen;
        }
    }
    return c * s.size() + 2 * inv01 + inv12;
}

std::uint64_t potential_weight(const Word& s0) {
    const std::uint64_t n = s0.size();
    return n * n + 1;
}

}  // namespace scs
