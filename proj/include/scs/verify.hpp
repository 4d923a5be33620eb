#pragma once

#include <string>
#include <vector>

namespace scs {

/// One observable fact checked by the acceptance suite.
struct CheckResult {
    std::string name;
    std::string expected;
    std::string observed;
    bool pass = false;
};

/// One acceptance criterion: a titled group of checks plus its wall time.
struct CheckGroup {
    int id = 0;
    std::string title;
    std::vector<CheckResult> checks;
    double elapsed_seconds = 0.0;

    bool pass() const;
    const CheckResult* first_failure() const;
};

CheckGroup run_criterion_1();  // two-word instances from the introduction
CheckGroup run_criterion_2();  // the binary cube and its {02,12} image
CheckGroup run_criterion_3();  // exact optimum of the hard family, n = 2
CheckGroup run_criterion_4();  // counting bounds on random supersequences
CheckGroup run_criterion_5();  // cover/witness round trips, all graphs n <= 4
CheckGroup run_criterion_6();  // normalizer guarantees on random inputs
CheckGroup run_criterion_7();  // exact solver against the brute-force oracle

/// Scopes: "intro" {1,2}, "family" {3,4}, "reduction" {5}, "normalizer" {6},
/// "solver" {7}, "all" {1..7}. Throws PreconditionError on unknown scope.
std::vector<CheckGroup> run_scope(const std::string& scope);

}  // namespace scs
