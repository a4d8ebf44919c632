#pragma once

#include "tsilab/vectors.hpp"

#include <vector>

namespace tsilab {

/// maximize <objective, x> subject to <row, x> <= bound for every constraint.
/// Variables are the listed coordinates; they are free (not sign-restricted)
/// unless `nonnegative` is set, which constrains every variable to x >= 0
/// without spending explicit constraint rows on the bounds.
struct LinearProgram {
    FiniteVector objective;
    std::vector<std::pair<FiniteVector, Rational>> constraints;
    std::vector<int> variables;
    bool nonnegative = false;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Optimal;
    Rational objective;
    FiniteVector vertex;
};

/// Exact two-phase simplex with Bland's least-index anti-cycling rule, so the
/// run is deterministic and cannot cycle. Infeasible and unbounded programs
/// are reported through `status` with the other fields empty.
LpResult solve_lp(const LinearProgram& program);

} // namespace tsilab
