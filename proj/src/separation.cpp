#include "tsilab/separation.hpp"

#include "tsilab/errors.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

namespace tsilab {

SeparationReport separation_report(const std::vector<FiniteVector>& family,
                                   const NormOracle& oracle) {
    if (family.size() < 2)
        throw std::invalid_argument("a separation report needs at least two members");

    SeparationReport report;
    report.space = oracle.id;
    report.power = oracle.power;
    report.family = family;

    const int n = static_cast<int>(family.size());
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            PairWitness witness;
            witness.i = i;
            witness.j = j;
            witness.diff_norm = oracle.evaluate(family[i - 1] - family[j - 1]);
            witness.sum_norm = oracle.evaluate(family[i - 1] + family[j - 1]);
            report.pairs.push_back(std::move(witness));
        }
    }

    const PairWitness* separation = nullptr;
    const PairWitness* symmetric = nullptr;
    for (const auto& pair : report.pairs) {
        if (!separation || pair.diff_norm < separation->diff_norm)
            separation = &pair;
        const Rational& pair_min = std::min(pair.diff_norm, pair.sum_norm);
        if (!symmetric || pair_min < std::min(symmetric->diff_norm, symmetric->sum_norm))
            symmetric = &pair;
    }
    report.separation = separation->diff_norm;
    report.separation_witness = *separation;
    report.symmetric_separation = std::min(symmetric->diff_norm, symmetric->sum_norm);
    report.symmetric_witness = *symmetric;
    return report;
}

PairColoring pair_coloring(const std::vector<FiniteVector>& family, const NormOracle& oracle,
                           const Rational& eta) {
    if (eta < 0)
        throw std::invalid_argument("eta must be nonnegative");
    PairColoring coloring;
    coloring.family_size = static_cast<int>(family.size());
    coloring.threshold_pow = rational_pow(1 + eta, oracle.power);
    for (int i = 1; i <= coloring.family_size; ++i) {
        for (int j = i + 1; j <= coloring.family_size; ++j) {
            const Rational sum_norm = oracle.evaluate(family[i - 1] + family[j - 1]);
            coloring.colors[{i, j}] = sum_norm > coloring.threshold_pow
                                          ? PairColor::Greater
                                          : PairColor::WithinThreshold;
        }
    }
    return coloring;
}

namespace {

std::vector<int> greedy_clique(const PairColoring& coloring, PairColor color) {
    std::vector<int> clique;
    for (int v = 1; v <= coloring.family_size; ++v) {
        bool compatible = true;
        for (int u : clique) {
            const auto it = coloring.colors.find({u, v});
            if (it == coloring.colors.end())
                throw std::invalid_argument("coloring is missing a pair");
            if (it->second != color) {
                compatible = false;
                break;
            }
        }
        if (compatible)
            clique.push_back(v);
    }
    return clique;
}

} // namespace

CliqueResult greedy_monochromatic(const PairColoring& coloring, int target) {
    CliqueResult greater{PairColor::Greater, greedy_clique(coloring, PairColor::Greater)};
    CliqueResult within{PairColor::WithinThreshold,
                        greedy_clique(coloring, PairColor::WithinThreshold)};
    if (static_cast<int>(greater.indices.size()) >= target)
        return greater;
    if (static_cast<int>(within.indices.size()) >= target)
        return within;
    return greater.indices.size() >= within.indices.size() ? greater : within;
}

Rational extraction_guarantee(const Rational& eps, const Rational& eta,
                              const Rational& basis_bound) {
    if (eps <= 0 || eta <= 0)
        throw std::invalid_argument("eps and eta must be positive");
    if (basis_bound < 1)
        throw std::invalid_argument("basis_bound must be at least 1");
    const Rational clique_branch = (1 + eps) / (1 + eta);
    const Rational plus_branch = Rational(2) / (basis_bound * (1 + eta));
    return std::min(clique_branch, plus_branch);
}

ExtractionResult ramsey_extract(const std::vector<FiniteVector>& family,
                                const NormOracle& oracle, const Rational& eta,
                                const Rational& basis_bound) {
    const SeparationReport input = separation_report(family, oracle);
    for (const auto& member : family)
        if (oracle.evaluate(member) != 1)
            throw std::invalid_argument("family members must be normalized");
    if (input.separation <= 1)
        throw std::invalid_argument("the family must be separated by more than one");
    if (eta <= 0 || 2 * eta >= 1)
        throw std::invalid_argument("eta must lie strictly between 0 and 1/2");
    if (basis_bound < 1)
        throw std::invalid_argument("basis_bound must be at least 1");
    const Rational threshold_pow = rational_pow(1 + eta, oracle.power);
    if (threshold_pow >= input.separation)
        throw std::invalid_argument("eta must stay below the family's eps");

    const PairColoring coloring = pair_coloring(family, oracle, eta);
    const CliqueResult clique =
        greedy_monochromatic(coloring, static_cast<int>(family.size()));

    ExtractionResult result;
    result.scale_sq = 1;
    result.result_power = oracle.power;
    result.oracle_power = oracle.power;
    result.input_separation = input.separation;
    result.eta = eta;
    result.basis_bound = basis_bound;

    if (clique.color == PairColor::Greater) {
        result.branch = ExtractionBranch::MonochromeGreater;
        for (int index : clique.indices)
            result.output_family.push_back(family[index - 1]);
        result.guarantee = threshold_pow;
        const SeparationReport out = separation_report(result.output_family, oracle);
        result.measured = out.symmetric_separation;
        if (result.measured < result.guarantee)
            throw InvariantViolation("monochromatic clique lost its certified separation");
    } else {
        if (clique.indices.size() < 3)
            throw std::invalid_argument(
                "the within-threshold clique is too small for the plus construction");
        result.branch = ExtractionBranch::PlusConstruction;
        const FiniteVector& first = family[clique.indices.front() - 1];
        const Rational scale = Rational(1) / (1 + eta);
        for (std::size_t t = 1; t < clique.indices.size(); ++t)
            result.output_family.push_back(
                (first + family[clique.indices[t] - 1]).scaled(scale));
        result.guarantee =
            std::min(input.separation, rational_pow(Rational(2) / basis_bound, oracle.power)) /
            threshold_pow;
        const SeparationReport out = separation_report(result.output_family, oracle);
        result.measured = out.symmetric_separation;
        if (result.measured < result.guarantee)
            throw std::invalid_argument(
                "the supplied basis bound does not hold for this family");
    }
    return result;
}

ExtractionResult sqrt_construction(const std::vector<FiniteVector>& family,
                                   const NormOracle& oracle, const Rational& basis_bound,
                                   const std::optional<Rational>& eps_override) {
    const SeparationReport input = separation_report(family, oracle);
    for (const auto& member : family)
        if (oracle.evaluate(member) != 1)
            throw std::invalid_argument("family members must be normalized");
    for (std::size_t i = 1; i < family.size(); ++i)
        if (family[i - 1].max_index() >= family[i].min_index())
            throw std::invalid_argument("the family must be successively supported");
    if (input.separation <= 1)
        throw std::invalid_argument("the family must be separated by more than one");

    const int p = oracle.power;
    // claimed = (1 + eps)^p for the claimed eps; every later comparison is on
    // squares of oracle values, which keeps the sqrt(1 + eps) threshold exact.
    Rational claimed = input.separation;
    if (eps_override) {
        if (*eps_override <= 0 || *eps_override >= 1)
            throw std::invalid_argument("eps_override must lie in (0, 1)");
        const Rational override_pow = rational_pow(1 + *eps_override, p);
        if (override_pow > input.separation)
            throw std::invalid_argument("eps_override may only lower the claimed separation");
        claimed = override_pow;
    }
    if (claimed >= rational_pow(Rational(2), p))
        throw std::invalid_argument("eps must stay below 1; pass eps_override to cap it");
    if (basis_bound < 1)
        throw std::invalid_argument("basis_bound must be at least 1");
    if (rational_pow(basis_bound, p) * claimed > rational_pow(Rational(2), p))
        throw std::invalid_argument("basis_bound must not exceed 2 / (1 + eps)");

    PairColoring coloring;
    coloring.family_size = static_cast<int>(family.size());
    coloring.threshold_pow = claimed; // threshold for squared sums
    for (const auto& pair : input.pairs)
        coloring.colors[{pair.i, pair.j}] = pair.sum_norm * pair.sum_norm > claimed
                                                ? PairColor::Greater
                                                : PairColor::WithinThreshold;
    const CliqueResult clique = greedy_monochromatic(coloring, coloring.family_size);

    ExtractionResult result;
    result.result_power = 2 * p;
    result.oracle_power = p;
    result.input_separation = input.separation;
    result.eta = std::nullopt;
    result.basis_bound = basis_bound;
    result.guarantee = claimed;

    if (clique.color == PairColor::Greater) {
        result.branch = ExtractionBranch::MonochromeGreater;
        result.scale_sq = 1;
        for (int index : clique.indices)
            result.output_family.push_back(family[index - 1]);
        const SeparationReport out = separation_report(result.output_family, oracle);
        result.measured = out.symmetric_separation * out.symmetric_separation;
        if (result.measured < result.guarantee)
            throw InvariantViolation("monochromatic clique lost its certified separation");
    } else {
        if (clique.indices.size() < 3)
            throw std::invalid_argument(
                "the within-threshold clique is too small for the plus construction");
        result.branch = ExtractionBranch::PlusConstruction;
        result.scale_sq = claimed;
        const FiniteVector& first = family[clique.indices.front() - 1];
        for (std::size_t t = 1; t < clique.indices.size(); ++t)
            result.output_family.push_back(first + family[clique.indices[t] - 1]);
        const SeparationReport out = separation_report(result.output_family, oracle);
        result.measured = out.symmetric_separation * out.symmetric_separation / claimed;
        if (result.measured < result.guarantee)
            throw std::invalid_argument(
                "the supplied basis bound does not hold for this family");
    }
    return result;
}

Rational ks_lower_from_gamma0(const std::vector<FiniteVector>& family,
                              const NormOracle& oracle) {
    const SeparationReport report = separation_report(family, oracle);
    if (report.separation < 1)
        throw std::invalid_argument("the family must be at least 1-separated");
    if (report.separation == 1)
        return 1;
    std::optional<Rational> override;
    if (report.separation > rational_pow(Rational(199, 100), oracle.power))
        override = Rational(99, 100);
    return sqrt_construction(family, oracle, 1, override).guarantee;
}

namespace {

int draw_below(std::mt19937_64& rng, int bound) {
    // rng() % bound instead of a standard distribution: the distributions are
    // implementation-defined, and identical seeds must reproduce identical
    // families everywhere.
    return static_cast<int>(rng() % static_cast<std::uint64_t>(bound));
}

Rational decimal_to_rational(const std::string& text) {
    const auto dot = text.find('.');
    if (dot == std::string::npos)
        return parse_rational(text);
    const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    Rational scale = 1;
    for (std::size_t i = dot + 1; i < text.size(); ++i)
        scale *= 10;
    return parse_rational(digits) / scale;
}

// Scales x into the unit ball: exactly onto the sphere for plain-value
// oracles, and for p-th power oracles by the smallest 6-digit decimal at
// least the norm (the exact norm is irrational there).
FiniteVector scaled_into_ball(const FiniteVector& x, const NormOracle& oracle) {
    if (x.is_zero())
        return x;
    const Rational value = oracle.evaluate(x);
    if (value == 0 || value == 1)
        return x;
    if (oracle.power == 1)
        return x.scaled(Rational(1) / value);
    Rational scale = decimal_to_rational(rational_root_decimal(value, oracle.power, 6));
    if (rational_pow(scale, oracle.power) < value)
        scale += Rational(1, 1000000);
    return x.scaled(Rational(1) / scale);
}

std::vector<FiniteVector> random_blocks(const NormOracle& oracle, const KottmanConfig& config,
                                        std::mt19937_64& rng) {
    const int n = config.family_size;
    std::vector<FiniteVector> family;
    family.reserve(static_cast<std::size_t>(n));
    int pos = 2;
    for (int i = 0; i < n; ++i) {
        const int blocks_after = n - i - 1;
        const int room = config.support_cap - pos + 1 - blocks_after;
        const int length = 1 + draw_below(rng, std::min(3, room));
        FiniteVector block;
        for (int c = 0; c < length; ++c) {
            const int numerator = 1 + draw_below(rng, 3);
            const int denominator = 1 + draw_below(rng, 2);
            const int sign = draw_below(rng, 2) == 0 ? 1 : -1;
            block.set(pos + c, Rational(sign * numerator, denominator));
        }
        family.push_back(scaled_into_ball(block, oracle));
        pos += length;
        if (blocks_after > 0) {
            const int slack = config.support_cap - pos + 1 - blocks_after;
            if (slack > 0)
                pos += draw_below(rng, std::min(2, slack) + 1);
        }
    }
    return family;
}

} // namespace

SeparationReport empirical_kottman(const NormOracle& oracle, const KottmanConfig& config) {
    if (config.family_size < 2)
        throw std::invalid_argument("family_size must be at least 2");
    if (config.iterations < 0)
        throw std::invalid_argument("iterations must be nonnegative");
    if (config.support_cap < config.family_size + 1)
        throw std::invalid_argument(
            "support_cap must leave room for the family beyond coordinate 1");
    if (config.iterations == 0 && !config.canonical)
        throw std::invalid_argument(
            "nothing to search: zero iterations with canonical probes disabled");

    std::mt19937_64 rng(config.seed);

    std::vector<FiniteVector> best;
    Rational best_separation = -1;
    const auto consider = [&](const std::vector<FiniteVector>& candidate) {
        std::optional<Rational> separation;
        for (std::size_t i = 0; i < candidate.size(); ++i) {
            for (std::size_t j = i + 1; j < candidate.size(); ++j) {
                Rational diff = oracle.evaluate(candidate[i] - candidate[j]);
                if (!separation || diff < *separation)
                    separation = std::move(diff);
                // Only a strictly better family replaces the incumbent, so
                // the remaining pairs cannot matter once the running minimum
                // drops to the incumbent's separation.
                if (*separation <= best_separation)
                    return;
            }
        }
        if (separation && *separation > best_separation) {
            best_separation = *separation;
            best = candidate;
        }
    };

    if (config.canonical) {
        std::vector<FiniteVector> prefix;
        for (int i = 0; i < config.family_size; ++i)
            prefix.push_back(FiniteVector::unit(i + 2));
        consider(prefix);
        if (!oracle.theta) {
            // Only the plain sequence spaces: under the Tsirelson-type norms
            // these overlapping-support vectors are not ball members.
            std::vector<FiniteVector> prototype = c0_prototype_family(config.family_size);
            for (auto& member : prototype)
                member = scaled_into_ball(member, oracle);
            consider(prototype);
        }
    }

    for (int it = 0; it < config.iterations; ++it)
        consider(random_blocks(oracle, config, rng));

    for (int it = 0; it < config.iterations && !best.empty(); ++it) {
        std::vector<FiniteVector> candidate = best;
        const int member = draw_below(rng, static_cast<int>(candidate.size()));
        const std::vector<int> support = candidate[member].support();
        const int coordinate = support[static_cast<std::size_t>(
            draw_below(rng, static_cast<int>(support.size())))];
        const Rational delta(draw_below(rng, 2) == 0 ? 1 : -1, 1 + draw_below(rng, 4));
        FiniteVector tweaked = candidate[member];
        tweaked.set(coordinate, tweaked.at(coordinate) + delta);
        if (tweaked.is_zero())
            continue;
        candidate[member] = scaled_into_ball(tweaked, oracle);
        consider(candidate);
    }

    return separation_report(best, oracle);
}

Rational expected_dual_kottman(const Theta& theta) {
    if (2 * theta.value() <= 1)
        return 2;
    return Rational(1) / theta.value();
}

} // namespace tsilab
