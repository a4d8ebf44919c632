#include "tsilab/dual.hpp"

#include "tsilab/errors.hpp"
#include "tsilab/lp.hpp"

#include <cstdint>
#include <set>
#include <stdexcept>
#include <utility>

namespace tsilab {

DualBallSolver::DualBallSolver(Theta theta) : theta_(std::move(theta)) {}

namespace {

FiniteVector resign(const FiniteVector& nonnegative, const FiniteVector& functional) {
    FiniteVector signed_vector;
    for (const auto& [index, value] : nonnegative.entries())
        signed_vector.set(index, functional.at(index) < 0 ? Rational(-value) : value);
    return signed_vector;
}

} // namespace

DualNormResult DualBallSolver::dual_norm(const FiniteVector& functional) {
    DualNormResult result;
    result.value = 0;
    if (functional.is_zero())
        return result;

    // The primal norm is unconditional, so the supremum may be taken over
    // nonnegative vectors supported inside supp(functional); signs are put
    // back on the maximizer at the end.
    const FiniteVector magnitude = functional.abs();
    if (const auto hit = cache_.find(magnitude); hit != cache_.end()) {
        result.value = hit->second.value;
        result.maximizer = resign(hit->second.maximizer, functional);
        return result;
    }

    const std::vector<int> support = magnitude.support();
    const Segment window(support);

    std::set<FiniteVector> cuts;
    for (int index : support)
        cuts.insert(FiniteVector::unit(index));
    for (const FiniteVector& cut : pool_) {
        if (cut.min_index() > window.max() || cut.max_index() < window.min())
            continue;
        FiniteVector restricted = restrict(cut, window);
        if (!restricted.is_zero())
            cuts.insert(std::move(restricted));
    }

    for (;;) {
        LinearProgram lp;
        lp.objective = magnitude;
        lp.variables = support;
        lp.nonnegative = true;
        for (const FiniteVector& cut : cuts)
            lp.constraints.emplace_back(cut, 1);

        const LpResult relaxation = solve_lp(lp);
        if (relaxation.status != LpStatus::Optimal)
            throw InvariantViolation("dual ball relaxation must stay bounded and feasible");

        const auto [norm, certificate] = tsirelson_norm(relaxation.vertex, theta_);
        if (norm <= 1) {
            result.value = relaxation.objective;
            result.maximizer = resign(relaxation.vertex, functional);
            cache_.emplace(magnitude,
                           DualNormResult{result.value, relaxation.vertex});
            return result;
        }

        FiniteVector cut = certificate_functional(certificate, relaxation.vertex, theta_);
        if (!cuts.insert(cut).second)
            throw InvariantViolation("cut generation failed to make progress");
        pool_.push_back(std::move(cut));
    }
}

DualNormResult dual_norm(const FiniteVector& functional, const Theta& theta) {
    DualBallSolver solver(theta);
    return solver.dual_norm(functional);
}

Rational c0_equivalence_constant(const std::vector<FiniteVector>& blocks, const Theta& theta) {
    if (blocks.size() < 2 || blocks.size() > 16)
        throw std::invalid_argument("between 2 and 16 blocks are supported");
    for (const auto& block : blocks)
        if (block.is_zero())
            throw std::invalid_argument("blocks must be nonzero");
    for (std::size_t i = 1; i < blocks.size(); ++i)
        if (blocks[i - 1].max_index() >= blocks[i].min_index())
            throw std::invalid_argument("blocks must be successively supported");
    if (static_cast<int>(blocks.size()) > blocks.front().min_index())
        throw std::invalid_argument(
            "block count must not exceed the first block's minimal support index");

    DualBallSolver solver(theta);
    for (const auto& block : blocks)
        if (solver.dual_norm(block).value != 1)
            throw std::invalid_argument("blocks must be normalized in the dual norm");

    // The norm is convex, so over coefficient boxes the maximum sits at a
    // sign vertex; by symmetry the first sign can be fixed.
    const int k = static_cast<int>(blocks.size());
    Rational best = 0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << (k - 1)); ++mask) {
        FiniteVector combination = blocks[0];
        for (int i = 1; i < k; ++i) {
            if ((mask >> (i - 1)) & 1U)
                combination -= blocks[i];
            else
                combination += blocks[i];
        }
        const Rational value = solver.dual_norm(combination).value;
        if (value > best)
            best = value;
    }
    if (best < 1 || best * theta.value() > 1)
        throw InvariantViolation("equivalence constant escaped [1, 1/theta]");
    return best;
}

AsymptoticWitness lambda_asymptotic_witness(const std::vector<FiniteVector>& blocks, int length,
                                            const Theta& theta) {
    if (length < 2)
        throw std::invalid_argument("a witness needs at least two blocks");
    if (length > 16)
        throw std::invalid_argument("witness length is capped at 16");

    AsymptoticWitness witness;
    for (const auto& block : blocks) {
        if (block.is_zero())
            throw std::invalid_argument("blocks must be nonzero");
        if (block.min_index() > length)
            witness.subsequence.push_back(block);
        if (static_cast<int>(witness.subsequence.size()) == length)
            break;
    }
    if (static_cast<int>(witness.subsequence.size()) < length)
        throw std::invalid_argument("not enough blocks supported beyond the requested length; "
                                    "provide a longer block sequence");
    witness.lambda = c0_equivalence_constant(witness.subsequence, theta);
    return witness;
}

} // namespace tsilab
