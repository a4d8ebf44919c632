#include "tsilab/tsirelson.hpp"

#include "tsilab/errors.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>

namespace tsilab {

Theta::Theta(Rational value) : value_(std::move(value)) {
    if (value_ <= 0 || value_ >= 1)
        throw std::invalid_argument("theta must satisfy 0 < theta < 1");
}

namespace {

Rational abs_value(const Rational& r) {
    return r < 0 ? Rational(-r) : r;
}

/// Interval dynamic program over the consecutive runs of the support.
///
/// t(a, b) is the norm of x restricted to support positions [a..b]. Any
/// admissible partition can be replaced, without lowering the sum, by one
/// whose parts are runs: widening a part to the enclosing run only raises
/// its norm (suppression monotonicity) and cannot break admissibility as
/// long as the first part keeps its left endpoint. The recursion therefore
/// scans a first run [s..e] -- the bound "part count <= idx[s]" applies at
/// its start -- and completes it with a tail table holding the best sum of
/// exactly j further runs placed after e.
class NormDp {
  public:
    NormDp(const FiniteVector& x, const Rational& theta) : theta_(theta) {
        for (const auto& [index, value] : x.entries()) {
            idx_.push_back(index);
            mag_.push_back(abs_value(value));
        }
        fill();
    }

    Rational value() const {
        return idx_.empty() ? Rational(0) : t_[0][idx_.size() - 1];
    }

    NormCertificate certificate() const {
        if (idx_.empty()) {
            NormCertificate leaf;
            leaf.value = 0;
            leaf.witness = NormCertificate::Leaf{0};
            return leaf;
        }
        return build(0, static_cast<int>(idx_.size()) - 1);
    }

  private:
    std::vector<int> idx_;
    std::vector<Rational> mag_;
    Rational theta_;
    std::vector<std::vector<Rational>> t_;
    std::vector<std::vector<Rational>> sup_;

    // tails[p][j]: best sum of t-values over exactly j disjoint ordered runs
    // inside positions [p..b], gaps allowed. Row p has entries 0..(b - p + 1).
    std::vector<std::vector<Rational>> tail_table(int b) const {
        std::vector<std::vector<Rational>> tails(static_cast<std::size_t>(b) + 2);
        tails[static_cast<std::size_t>(b) + 1] = {Rational(0)};
        for (int p = b; p >= 0; --p)
            tails[p] = tail_row(b, p, tails);
        return tails;
    }

    std::vector<Rational> tail_row(int b, int p,
                                   const std::vector<std::vector<Rational>>& tails) const {
        std::vector<Rational> row(static_cast<std::size_t>(b - p) + 2);
        row[0] = 0;
        for (int j = 1; j <= b - p + 1; ++j) {
            std::optional<Rational> best;
            if (j <= b - p)
                best = tails[p + 1][j]; // leave position p uncovered
            for (int e = p; e <= b - j + 1; ++e) {
                Rational cand = t_[p][e] + tails[e + 1][j - 1];
                if (!best || cand > *best)
                    best = std::move(cand);
            }
            row[j] = *best;
        }
        return row;
    }

    void fill() {
        const int n = static_cast<int>(idx_.size());
        t_.assign(n, std::vector<Rational>(n));
        sup_.assign(n, std::vector<Rational>(n));
        for (int b = 0; b < n; ++b) {
            std::vector<std::vector<Rational>> tails(static_cast<std::size_t>(b) + 2);
            tails[static_cast<std::size_t>(b) + 1] = {Rational(0)};
            for (int a = b; a >= 0; --a) {
                sup_[a][b] = (a == b) ? mag_[a] : std::max(mag_[a], sup_[a + 1][b]);
                std::optional<Rational> best_sum;
                for (int s = a; s <= b; ++s) {
                    for (int e = s; e <= b; ++e) {
                        if (s == a && e == b)
                            continue; // the norm equation's self-reference
                        const int j = std::min(idx_[s] - 1, b - e);
                        Rational cand = t_[s][e] + tails[e + 1][j];
                        if (!best_sum || cand > *best_sum)
                            best_sum = std::move(cand);
                    }
                }
                Rational value = sup_[a][b];
                if (best_sum) {
                    Rational split = theta_ * *best_sum;
                    if (split > value)
                        value = std::move(split);
                }
                t_[a][b] = std::move(value);
                tails[a] = tail_row(b, a, tails);
            }
        }
    }

    // Witness for t(a, b), choosing among optimal partitions the first in
    // enumerate_admissible order: smallest part count, then lexicographically
    // earliest run boundaries. Single-part partitions never attain the value
    // (theta < 1), so the scan starts at two parts.
    NormCertificate build(int a, int b) const {
        const Rational& value = t_[a][b];
        const auto tails = tail_table(b);
        for (int k = 2; k <= b - a + 1; ++k) {
            std::optional<Rational> best_sum;
            for (int s = a; s <= b - k + 1; ++s) {
                if (idx_[s] < k)
                    continue;
                for (int e = s; e <= b - k + 1; ++e) {
                    Rational cand = t_[s][e] + tails[e + 1][k - 1];
                    if (!best_sum || cand > *best_sum)
                        best_sum = std::move(cand);
                }
            }
            if (!best_sum || theta_ * *best_sum != value)
                continue;

            const Rational& target = *best_sum;
            std::vector<std::pair<int, int>> bounds;
            Rational partial = 0;
            int start = a;
            for (int i = 1; i <= k; ++i) {
                bool chosen = false;
                for (int s = start; s <= b - (k - i) && !chosen; ++s) {
                    if (i == 1 && idx_[s] < k)
                        continue;
                    for (int e = s; e <= b - (k - i) && !chosen; ++e) {
                        if (partial + t_[s][e] + tails[e + 1][k - i] == target) {
                            bounds.emplace_back(s, e);
                            partial += t_[s][e];
                            start = e + 1;
                            chosen = true;
                        }
                    }
                }
                if (!chosen)
                    throw InvariantViolation("certificate reconstruction lost its target");
            }

            AdmissiblePartition partition;
            partition.part_count = k;
            std::vector<NormCertificate> children;
            children.reserve(bounds.size());
            for (const auto& [s, e] : bounds) {
                partition.parts.emplace_back(
                    std::vector<int>(idx_.begin() + s, idx_.begin() + e + 1));
                children.push_back(build(s, e));
            }
            NormCertificate node;
            node.value = value;
            node.witness = NormCertificate::Node{std::move(partition), std::move(children)};
            return node;
        }
        for (int p = a; p <= b; ++p) {
            if (mag_[p] == value) {
                NormCertificate leaf;
                leaf.value = value;
                leaf.witness = NormCertificate::Leaf{idx_[p]};
                return leaf;
            }
        }
        throw InvariantViolation("norm value witnessed by neither sup nor partition");
    }
};

} // namespace

Rational certificate_value(const NormCertificate& certificate, const FiniteVector& x,
                           const Theta& theta) {
    if (certificate.is_leaf()) {
        const auto& leaf = std::get<NormCertificate::Leaf>(certificate.witness);
        if (leaf.index == 0)
            return 0;
        return abs_value(x.at(leaf.index));
    }
    const auto& node = std::get<NormCertificate::Node>(certificate.witness);
    if (!is_admissible(node.partition))
        throw InvariantViolation("certificate carries an inadmissible partition");
    if (node.children.size() != node.partition.parts.size())
        throw InvariantViolation("certificate children do not match partition parts");
    Rational sum = 0;
    for (std::size_t i = 0; i < node.children.size(); ++i)
        sum += certificate_value(node.children[i], restrict(x, node.partition.parts[i]), theta);
    return theta.value() * sum;
}

Rational norm_level(const FiniteVector& x, const Theta& theta, int level) {
    if (level < 0)
        throw std::invalid_argument("level must be nonnegative");
    std::vector<int> idx;
    std::vector<Rational> mag;
    for (const auto& [index, value] : x.entries()) {
        idx.push_back(index);
        mag.push_back(abs_value(value));
    }
    const int n = static_cast<int>(idx.size());
    if (n == 0)
        return 0;

    std::vector<std::vector<Rational>> sup(n, std::vector<Rational>(n));
    for (int b = 0; b < n; ++b)
        for (int a = b; a >= 0; --a)
            sup[a][b] = (a == b) ? mag[a] : std::max(mag[a], sup[a + 1][b]);

    std::vector<std::vector<Rational>> prev = sup;
    for (int m = 1; m <= level; ++m) {
        std::vector<std::vector<Rational>> cur(n, std::vector<Rational>(n));
        for (int b = 0; b < n; ++b) {
            // Tail sums over the previous iterate; unlike the fixed point,
            // the whole interval as a single part is a valid candidate here.
            std::vector<std::vector<Rational>> tails(static_cast<std::size_t>(b) + 2);
            tails[static_cast<std::size_t>(b) + 1] = {Rational(0)};
            for (int p = b; p >= 0; --p) {
                std::vector<Rational> row(static_cast<std::size_t>(b - p) + 2);
                row[0] = 0;
                for (int j = 1; j <= b - p + 1; ++j) {
                    std::optional<Rational> best;
                    if (j <= b - p)
                        best = tails[p + 1][j];
                    for (int e = p; e <= b - j + 1; ++e) {
                        Rational cand = prev[p][e] + tails[e + 1][j - 1];
                        if (!best || cand > *best)
                            best = std::move(cand);
                    }
                    row[j] = *best;
                }
                tails[p] = std::move(row);
            }
            for (int a = b; a >= 0; --a) {
                std::optional<Rational> best_sum;
                for (int s = a; s <= b; ++s) {
                    for (int e = s; e <= b; ++e) {
                        const int j = std::min(idx[s] - 1, b - e);
                        Rational cand = prev[s][e] + tails[e + 1][j];
                        if (!best_sum || cand > *best_sum)
                            best_sum = std::move(cand);
                    }
                }
                Rational value = sup[a][b];
                Rational split = theta.value() * *best_sum;
                if (split > value)
                    value = std::move(split);
                cur[a][b] = std::move(value);
            }
        }
        prev = std::move(cur);
    }
    return prev[0][n - 1];
}

Rational tsirelson_norm_value(const FiniteVector& x, const Theta& theta) {
    return NormDp(x, theta.value()).value();
}

std::pair<Rational, NormCertificate> tsirelson_norm(const FiniteVector& x, const Theta& theta) {
    const NormDp dp(x, theta.value());
    return {dp.value(), dp.certificate()};
}

FiniteVector certificate_functional(const NormCertificate& certificate, const FiniteVector& x,
                                    const Theta& theta) {
    if (certificate.is_leaf()) {
        const auto& leaf = std::get<NormCertificate::Leaf>(certificate.witness);
        FiniteVector f;
        if (leaf.index != 0)
            f.set(leaf.index, x.at(leaf.index) < 0 ? -1 : 1);
        return f;
    }
    const auto& node = std::get<NormCertificate::Node>(certificate.witness);
    if (!is_admissible(node.partition))
        throw InvariantViolation("certificate carries an inadmissible partition");
    if (node.children.size() != node.partition.parts.size())
        throw InvariantViolation("certificate children do not match partition parts");
    FiniteVector sum;
    for (std::size_t i = 0; i < node.children.size(); ++i)
        sum += certificate_functional(node.children[i], restrict(x, node.partition.parts[i]),
                                      theta);
    return sum.scaled(theta.value());
}

namespace {

bool coordinatewise_leq(const FiniteVector& f, const FiniteVector& g) {
    for (const auto& [index, value] : f.entries())
        if (value > g.at(index))
            return false;
    return true;
}

} // namespace

std::vector<NormingFunctional> norming_functionals(int dimension, const Theta& theta) {
    if (dimension < 1)
        throw std::invalid_argument("dimension must be positive");
    if (dimension > 30)
        throw std::invalid_argument(
            "norming set enumeration is exponential; dimension capped at 30");

    // Generation runs in the positive orthant; signs are restored at the end.
    // Per support we keep only the maximal functionals: a coordinatewise
    // smaller one with the same support can be swapped for its dominator in
    // any composite without affecting admissibility, so nothing achievable
    // is lost.
    struct Entry {
        FiniteVector functional;
        int level;
    };
    std::map<std::vector<int>, std::vector<Entry>> antichains;

    const auto try_insert = [&antichains](const FiniteVector& f, int level) {
        auto& chain = antichains[f.support()];
        for (const auto& entry : chain)
            if (coordinatewise_leq(f, entry.functional))
                return false;
        chain.erase(std::remove_if(chain.begin(), chain.end(),
                                   [&f](const Entry& entry) {
                                       return coordinatewise_leq(entry.functional, f);
                                   }),
                    chain.end());
        chain.push_back({f, level});
        return true;
    };

    for (int i = 1; i <= dimension; ++i)
        try_insert(FiniteVector::unit(i), 0);

    for (int level = 1;; ++level) {
        if (level > dimension)
            throw InvariantViolation("norming set generation failed to stabilize");

        std::vector<FiniteVector> pool;
        for (const auto& [support, chain] : antichains)
            for (const auto& entry : chain)
                pool.push_back(entry.functional);
        std::sort(pool.begin(), pool.end(), [](const FiniteVector& a, const FiniteVector& b) {
            return a.min_index() != b.min_index() ? a.min_index() < b.min_index() : a < b;
        });

        bool grew = false;
        // Successive tuples (f_1, ..., f_j) with 2 <= j <= min supp f_1;
        // every prefix of length >= 2 yields a composite theta * sum.
        const std::function<void(const FiniteVector&, int, int, int)> extend =
            [&](const FiniteVector& sum, int count, int last_max, int count_cap) {
                for (const auto& g : pool) {
                    if (g.min_index() <= last_max)
                        continue;
                    const FiniteVector next = sum + g;
                    if (count + 1 >= 2 && try_insert(next.scaled(theta.value()), level))
                        grew = true;
                    if (count + 1 < count_cap)
                        extend(next, count + 1, g.max_index(), count_cap);
                }
            };
        for (const auto& first : pool) {
            const int count_cap = std::min(first.min_index(), dimension);
            if (count_cap < 2)
                continue;
            extend(first, 1, first.max_index(), count_cap);
        }
        if (!grew)
            break;
    }

    std::vector<NormingFunctional> positives;
    for (const auto& [support, chain] : antichains)
        for (const auto& entry : chain)
            positives.push_back({entry.functional, entry.level});

    std::vector<NormingFunctional> kept;
    for (const auto& candidate : positives) {
        bool dominated = false;
        for (const auto& other : positives) {
            if (other.functional == candidate.functional)
                continue;
            if (coordinatewise_leq(candidate.functional, other.functional)) {
                dominated = true;
                break;
            }
        }
        if (!dominated)
            kept.push_back(candidate);
    }

    std::vector<NormingFunctional> result;
    for (const auto& positive : kept) {
        const std::vector<int> support = positive.functional.support();
        const std::size_t patterns = std::size_t{1} << support.size();
        for (std::size_t mask = 0; mask < patterns; ++mask) {
            FiniteVector flipped;
            for (std::size_t i = 0; i < support.size(); ++i) {
                const Rational& v = positive.functional.at(support[i]);
                flipped.set(support[i], (mask >> i) & 1U ? Rational(-v) : v);
            }
            result.push_back({flipped, positive.level});
        }
    }
    std::sort(result.begin(), result.end(),
              [](const NormingFunctional& a, const NormingFunctional& b) {
                  return a.level != b.level ? a.level < b.level : a.functional < b.functional;
              });
    return result;
}

bool check_suppression(const FiniteVector& x, const Segment& segment, const Theta& theta) {
    return tsirelson_norm_value(restrict(x, segment), theta) <= tsirelson_norm_value(x, theta);
}

BlockBounds block_l1_bounds(const std::vector<FiniteVector>& blocks,
                            const std::vector<Rational>& coefficients, const Theta& theta) {
    if (blocks.empty())
        throw std::invalid_argument("at least one block is required");
    if (blocks.size() != coefficients.size())
        throw std::invalid_argument("one coefficient per block is required");
    for (const auto& block : blocks)
        if (block.is_zero())
            throw std::invalid_argument("blocks must be nonzero");
    for (std::size_t i = 1; i < blocks.size(); ++i)
        if (blocks[i - 1].max_index() >= blocks[i].min_index())
            throw std::invalid_argument("blocks must be successively supported");
    if (static_cast<int>(blocks.size()) > blocks.front().min_index())
        throw std::invalid_argument(
            "block count must not exceed the first block's minimal support index");
    for (const auto& block : blocks)
        if (tsirelson_norm_value(block, theta) != 1)
            throw std::invalid_argument("blocks must be normalized");

    FiniteVector combination;
    Rational coefficient_sum = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        combination += blocks[i].scaled(coefficients[i]);
        coefficient_sum += abs_value(coefficients[i]);
    }

    BlockBounds bounds;
    bounds.lower = theta.value() * coefficient_sum;
    bounds.value = tsirelson_norm_value(combination, theta);
    bounds.upper = coefficient_sum;
    if (bounds.value < bounds.lower || bounds.upper < bounds.value)
        throw InvariantViolation("block combination escaped its sandwich bounds");
    return bounds;
}

} // namespace tsilab
