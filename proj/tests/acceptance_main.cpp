// Acceptance gate: runs every criterion group and prints one PASS/FAIL line
// per criterion plus each individual check. The exit code is the number of
// failed criteria, so a zero exit means the whole gate is green.
#include <cstdio>

#include "scs/verify.hpp"

int main() {
    const auto groups = scs::run_scope("all");
    int failures = 0;
    for (const auto& g : groups) {
        const bool pass = g.pass();
        if (!pass) ++failures;
        std::printf("[%s] criterion %d: %s (%zu checks, %.2f s)\n", pass ? "PASS" : "FAIL", g.id,
                    g.title.c_str(), g.checks.size(), g.elapsed_seconds);
        for (const auto& c : g.checks) {
            std::printf("    %s %s: expected %s, observed %s\n", c.pass ? "ok  " : "FAIL",
                        c.name.c_str(), c.expected.c_str(), c.observed.c_str());
        }
    }
    std::printf("%zu of %zu criteria passed\n", groups.size() - static_cast<std::size_t>(failures),
                groups.size());
    return failures;
}
