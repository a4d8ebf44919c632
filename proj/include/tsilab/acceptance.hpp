#pragma once

#include "tsilab/tsirelson.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace tsilab {

/// Reference norm evaluator used to anchor the production implementation:
/// a direct recursion over the fully general admissible partitions (parts are
/// arbitrary finite index sets, not just consecutive runs of the support).
/// Exponential in the support size; intended for supports of size <= 8.
Rational reference_tsirelson_norm(const FiniteVector& x, const Theta& theta);

struct CriterionResult {
    int number = 0;
    std::string name;
    bool passed = false;
    std::string detail; // failure explanation, empty on pass
};

/// Runs the full acceptance suite. When `progress` is non-null, one
/// "PASS <n>: name" / "FAIL <n>: name (detail)" line is printed per criterion
/// as it completes.
std::vector<CriterionResult> run_acceptance(std::ostream* progress);

bool all_passed(const std::vector<CriterionResult>& results);

} // namespace tsilab
