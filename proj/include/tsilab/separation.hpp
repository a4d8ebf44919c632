#pragma once

#include "tsilab/spaces.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace tsilab {

struct PairWitness {
    int i = 0;
    int j = 0;
    Rational diff_norm;
    Rational sum_norm;
};

/// Exact pairwise geometry of a finite family. `separation` is the minimum of
/// |x_i - x_j| over pairs; `symmetric_separation` additionally takes sums
/// into account and can only be smaller. Values follow the oracle's power
/// convention.
struct SeparationReport {
    std::string space;
    int power = 1;
    std::vector<FiniteVector> family;
    Rational separation;
    Rational symmetric_separation;
    PairWitness separation_witness;
    PairWitness symmetric_witness;
    std::vector<PairWitness> pairs;
};

/// Requires at least two members. O(n^2) oracle evaluations.
SeparationReport separation_report(const std::vector<FiniteVector>& family,
                                   const NormOracle& oracle);

/// Two-coloring of pairs by whether |u_i + u_j| exceeds 1 + eta. A sum norm
/// exactly on the threshold counts as WithinThreshold.
enum class PairColor { Greater, WithinThreshold };

struct PairColoring {
    int family_size = 0;
    /// Threshold in the oracle's power convention: (1 + eta)^power.
    Rational threshold_pow;
    std::map<std::pair<int, int>, PairColor> colors; // keys i < j
};

PairColoring pair_coloring(const std::vector<FiniteVector>& family, const NormOracle& oracle,
                           const Rational& eta);

struct CliqueResult {
    PairColor color = PairColor::Greater;
    std::vector<int> indices;
};

/// Lowest-index-first greedy clique on each color. Returns the Greater clique
/// if it reaches `target`, else the WithinThreshold clique if it does, else
/// the larger of the two (ties prefer Greater). Deterministic.
CliqueResult greedy_monochromatic(const PairColoring& coloring, int target);

enum class ExtractionBranch { MonochromeGreater, PlusConstruction };

/// Result of a symmetric-separation extraction.
///
/// All norms are reported in `result_power` convention (the oracle's power
/// for the Ramsey extraction, twice that for the square-root construction,
/// whose guarantee is a square root). When `scale_sq` != 1 the listed output
/// vectors still carry an irrational normalization: every norm of the actual
/// family, raised to result_power, equals the corresponding power for the
/// unscaled member divided by scale_sq. `measured` already accounts for it.
struct ExtractionResult {
    ExtractionBranch branch = ExtractionBranch::MonochromeGreater;
    std::vector<FiniteVector> output_family;
    Rational scale_sq = 1;

    Rational guarantee;          // certified lower bound for the symmetric separation
    Rational measured;           // exact symmetric separation of the output family
    int result_power = 1;

    Rational input_separation;   // (1 + eps)^oracle_power, measured on the input
    std::optional<Rational> eta; // rational threshold parameter when one exists
    Rational basis_bound;        // K_b supplied by the caller
    int oracle_power = 1;
};

/// Closed form min{ (1+eps)/(1+eta), 2/(K_b (1+eta)) } of the extraction
/// guarantee in plain (power-1) units.
Rational extraction_guarantee(const Rational& eps, const Rational& eta,
                              const Rational& basis_bound);

/// Ramsey step: color pairs at threshold 1 + eta, pass to the larger greedy
/// monochromatic clique, and either keep it (Greater: guarantee 1 + eta) or
/// form y_j = (u_first + u_j) / (1 + eta) over the WithinThreshold clique
/// (guarantee extraction_guarantee(eps, eta, K_b)). eps is measured from the
/// family. Preconditions: members normalized, separation > 1,
/// 0 < eta < min(eps, 1/2), basis_bound >= 1, output size >= 2 achievable.
ExtractionResult ramsey_extract(const std::vector<FiniteVector>& family,
                                const NormOracle& oracle, const Rational& eta,
                                const Rational& basis_bound);

/// Square-root step: eta = sqrt(1 + eps) - 1, all comparisons on squares.
/// Input must be a normalized successively supported block family with
/// measured eps in (0, 1) and basis_bound <= 2 / (1 + eps); eps_override
/// (downward only) tightens the claimed separation before the construction.
/// Either branch certifies symmetric separation >= sqrt(1 + eps).
ExtractionResult sqrt_construction(const std::vector<FiniteVector>& family,
                                   const NormOracle& oracle, const Rational& basis_bound,
                                   const std::optional<Rational>& eps_override = std::nullopt);

/// Certified symmetric-separation lower bound r^2 (reported in the oracle's
/// power convention) obtained by running sqrt_construction with the measured
/// eps capped below 1. A family with separation exactly 1 yields the vacuous
/// certificate 1.
Rational ks_lower_from_gamma0(const std::vector<FiniteVector>& family, const NormOracle& oracle);

struct KottmanConfig {
    std::uint64_t seed = 0;
    int iterations = 1000;
    int family_size = 4;
    int support_cap = 24;
    bool canonical = true;
};

/// Seeded deterministic search for well-separated unit-ball families:
/// canonical probes, random successively supported block families (supports
/// start at coordinate 2 or later), and local perturbation of the best find.
/// Returns the best family's separation report. Identical seed and config
/// give identical output. Throws std::invalid_argument when there is nothing
/// to search (iterations == 0 with canonical probes disabled).
SeparationReport empirical_kottman(const NormOracle& oracle, const KottmanConfig& config);

/// Exact Kottman constant of the dual space: 2 for theta <= 1/2, otherwise
/// 1/theta. Both the plain and the symmetric constant take this value.
Rational expected_dual_kottman(const Theta& theta);

} // namespace tsilab
