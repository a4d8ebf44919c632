#pragma once

#include "tsilab/tsirelson.hpp"

#include <map>
#include <vector>

namespace tsilab {

struct DualNormResult {
    Rational value;
    /// Point of the primal unit ball attaining <functional, maximizer> = value.
    FiniteVector maximizer;
};

/// Dual norm sup { <f, x> : |x| <= 1 in the primal space }, evaluated as an
/// exact linear program over the polytope carved out by the norming set.
///
/// The norming set on n coordinates grows exponentially with n, so instead of
/// materializing it the solver works with a growing subset of constraints:
/// each LP relaxation is checked by evaluating the exact primal norm of its
/// optimizer, and a violated norming functional extracted from the norm
/// certificate is added as a cut until the optimizer is feasible. Every cut
/// is a genuine member of the norming set, so the final value is exact.
class DualBallSolver {
public:
    explicit DualBallSolver(Theta theta);

    DualNormResult dual_norm(const FiniteVector& functional);

    const Theta& theta() const { return theta_; }

private:
    Theta theta_;
    std::vector<FiniteVector> pool_; // nonnegative cuts discovered so far
    // Norms already computed, keyed by |functional|; the stored maximizer is
    // the nonnegative one and gets re-signed per query.
    std::map<FiniteVector, DualNormResult> cache_;
};

/// One-shot convenience wrapper around DualBallSolver.
DualNormResult dual_norm(const FiniteVector& functional, const Theta& theta);

/// Smallest lambda with max|a_i| <= |sum a_i u_i| <= lambda max|a_i| over the
/// span of the blocks, computed exactly as a maximum over sign patterns.
/// Preconditions: 2 <= blocks.size() <= 16, blocks normalized in the dual
/// norm, successively supported, blocks.size() <= min support of blocks[0].
/// The result always lies in [1, 1/theta]; leaving that range is a bug.
Rational c0_equivalence_constant(const std::vector<FiniteVector>& blocks, const Theta& theta);

struct AsymptoticWitness {
    std::vector<FiniteVector> subsequence;
    Rational lambda;
};

/// Picks the first `length` blocks supported entirely beyond coordinate
/// `length` and returns them with their equivalence constant. Throws
/// std::invalid_argument (asking for longer input) when the supply runs out.
AsymptoticWitness lambda_asymptotic_witness(const std::vector<FiniteVector>& blocks, int length,
                                            const Theta& theta);

} // namespace tsilab
