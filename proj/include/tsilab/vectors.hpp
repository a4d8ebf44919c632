#pragma once

#include "tsilab/rational.hpp"

#include <functional>
#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

namespace tsilab {

/// Finitely supported vector over the positive-integer coordinate basis.
/// Only nonzero entries are stored; reading an absent coordinate yields zero.
class FiniteVector {
public:
    FiniteVector() = default;
    FiniteVector(std::initializer_list<std::pair<int, Rational>> entries);

    /// The canonical unit vector e_index.
    static FiniteVector unit(int index);

    /// Assigns a coordinate; a zero value erases the entry.
    /// Throws std::invalid_argument for index < 1.
    void set(int index, const Rational& value);

    const Rational& at(int index) const;
    bool is_zero() const { return entries_.empty(); }
    std::size_t support_size() const { return entries_.size(); }

    /// Smallest / largest index of the support. Requires a nonzero vector.
    int min_index() const;
    int max_index() const;

    std::vector<int> support() const;
    const std::map<int, Rational>& entries() const { return entries_; }

    FiniteVector& operator+=(const FiniteVector& rhs);
    FiniteVector& operator-=(const FiniteVector& rhs);
    friend FiniteVector operator+(FiniteVector lhs, const FiniteVector& rhs);
    friend FiniteVector operator-(FiniteVector lhs, const FiniteVector& rhs);
    FiniteVector operator-() const;

    FiniteVector scaled(const Rational& factor) const;

    /// Coordinatewise absolute value.
    FiniteVector abs() const;

    bool operator==(const FiniteVector& rhs) const { return entries_ == rhs.entries_; }
    bool operator!=(const FiniteVector& rhs) const { return !(*this == rhs); }
    bool operator<(const FiniteVector& rhs) const { return entries_ < rhs.entries_; }

private:
    std::map<int, Rational> entries_;
};

Rational dot(const FiniteVector& a, const FiniteVector& b);

/// Nonempty finite set of positive integers kept sorted, with O(1) min/max.
class Segment {
public:
    explicit Segment(std::vector<int> indices);
    Segment(std::initializer_list<int> indices);

    int min() const { return indices_.front(); }
    int max() const { return indices_.back(); }
    std::size_t size() const { return indices_.size(); }
    bool contains(int index) const;
    const std::vector<int>& indices() const { return indices_; }

    bool operator==(const Segment& rhs) const { return indices_ == rhs.indices_; }
    bool operator!=(const Segment& rhs) const { return !(*this == rhs); }

private:
    std::vector<int> indices_;
};

/// An ordered family E_1 < E_2 < ... < E_k of disjoint segments subject to
/// the admissibility constraint k <= min(E_1). "E < F" means max(E) < min(F).
struct AdmissiblePartition {
    int part_count = 0;
    std::vector<Segment> parts;
};

/// Checks k == parts.size(), ordering, disjointness and k <= min(parts[0]).
bool is_admissible(const AdmissiblePartition& partition);

/// Restriction of x to the coordinates in segment (other entries dropped).
FiniteVector restrict(const FiniteVector& x, const Segment& segment);

Rational sup_norm(const FiniteVector& x);

/// Visits every admissible partition whose parts are consecutive runs of
/// `support`, with part_count <= max_k, each exactly once, ordered first by
/// part_count and then lexicographically by the run boundaries. The visitor
/// returns false to stop early.
void for_each_admissible(const Segment& support, int max_k,
                         const std::function<bool(const AdmissiblePartition&)>& visit);

std::vector<AdmissiblePartition> enumerate_admissible(const Segment& support, int max_k);

} // namespace tsilab
