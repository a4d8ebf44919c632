#pragma once

#include "tsilab/tsirelson.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace tsilab {

/// A named exact norm evaluator.
///
/// `power` declares the reporting convention: evaluate(x) returns |x|^power.
/// The sequence-space norms with irrational values (l_p for p >= 2) report
/// p-th powers so every comparison stays inside the rationals; c0 and the
/// Tsirelson-type norms report plain values (power 1). Values coming from
/// oracles with different powers are never comparable.
struct NormOracle {
    std::string id;
    int power = 1;
    std::function<Rational(const FiniteVector&)> evaluate;
    /// Set for tsirelson/dual-tsirelson oracles; enables the closed-form
    /// block-family bound checks in the separation lab.
    std::optional<Rational> theta;
    bool is_dual_tsirelson = false;
};

Rational c0_norm(const FiniteVector& x);

/// Exact p-th power of the l_p norm.
Rational lp_norm_pow(const FiniteVector& x, int p);

NormOracle c0_oracle();
NormOracle lp_oracle(int p);
NormOracle tsirelson_oracle(const Theta& theta);
/// Shares one cut pool across evaluations, so repeated queries get cheaper.
NormOracle dual_tsirelson_oracle(const Theta& theta);

/// Space ids: "c0", "lp:p", "tsirelson:t", "dual-tsirelson:t" with t a
/// rational in (0,1). Throws std::invalid_argument on anything else.
NormOracle parse_space(const std::string& id);

/// x_m = e_1 + ... + e_m - e_{m+1} for m = 1..n: a unit-ball family in c0
/// whose pairwise sums and differences all have sup norm exactly 2.
std::vector<FiniteVector> c0_prototype_family(int n);

/// The first n unit vectors (pairwise separation 2 in l_p p-th power units).
std::vector<FiniteVector> lp_basis_family(int n);

} // namespace tsilab
