#include "tsilab/vectors.hpp"

#include <algorithm>
#include <stdexcept>

namespace tsilab {

FiniteVector::FiniteVector(std::initializer_list<std::pair<int, Rational>> entries) {
    for (const auto& [index, value] : entries)
        set(index, value);
}

FiniteVector FiniteVector::unit(int index) {
    FiniteVector v;
    v.set(index, 1);
    return v;
}

void FiniteVector::set(int index, const Rational& value) {
    if (index < 1)
        throw std::invalid_argument("coordinate indices start at 1");
    if (value == 0)
        entries_.erase(index);
    else
        entries_[index] = value;
}

const Rational& FiniteVector::at(int index) const {
    static const Rational zero = 0;
    const auto it = entries_.find(index);
    return it == entries_.end() ? zero : it->second;
}

int FiniteVector::min_index() const {
    if (entries_.empty())
        throw std::logic_error("min_index of the zero vector");
    return entries_.begin()->first;
}

int FiniteVector::max_index() const {
    if (entries_.empty())
        throw std::logic_error("max_index of the zero vector");
    return entries_.rbegin()->first;
}

std::vector<int> FiniteVector::support() const {
    std::vector<int> indices;
    indices.reserve(entries_.size());
    for (const auto& [index, value] : entries_)
        indices.push_back(index);
    return indices;
}

FiniteVector& FiniteVector::operator+=(const FiniteVector& rhs) {
    for (const auto& [index, value] : rhs.entries_) {
        const auto it = entries_.find(index);
        if (it == entries_.end()) {
            entries_.emplace(index, value);
        } else {
            it->second += value;
            if (it->second == 0)
                entries_.erase(it);
        }
    }
    return *this;
}

FiniteVector& FiniteVector::operator-=(const FiniteVector& rhs) {
    for (const auto& [index, value] : rhs.entries_) {
        const auto it = entries_.find(index);
        if (it == entries_.end()) {
            entries_.emplace(index, -value);
        } else {
            it->second -= value;
            if (it->second == 0)
                entries_.erase(it);
        }
    }
    return *this;
}

FiniteVector operator+(FiniteVector lhs, const FiniteVector& rhs) {
    lhs += rhs;
    return lhs;
}

FiniteVector operator-(FiniteVector lhs, const FiniteVector& rhs) {
    lhs -= rhs;
    return lhs;
}

FiniteVector FiniteVector::operator-() const {
    FiniteVector result;
    for (const auto& [index, value] : entries_)
        result.entries_.emplace(index, -value);
    return result;
}

FiniteVector FiniteVector::scaled(const Rational& factor) const {
    FiniteVector result;
    if (factor == 0)
        return result;
    for (const auto& [index, value] : entries_)
        result.entries_.emplace(index, value * factor);
    return result;
}

FiniteVector FiniteVector::abs() const {
    FiniteVector result;
    for (const auto& [index, value] : entries_)
        result.entries_.emplace(index, value < 0 ? Rational(-value) : value);
    return result;
}

Rational dot(const FiniteVector& a, const FiniteVector& b) {
    const FiniteVector& small = a.support_size() <= b.support_size() ? a : b;
    const FiniteVector& large = a.support_size() <= b.support_size() ? b : a;
    Rational sum = 0;
    for (const auto& [index, value] : small.entries())
        sum += value * large.at(index);
    return sum;
}

Segment::Segment(std::vector<int> indices) : indices_(std::move(indices)) {
    if (indices_.empty())
        throw std::invalid_argument("empty segment");
    if (!std::is_sorted(indices_.begin(), indices_.end()) ||
        std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end())
        throw std::invalid_argument("segment indices must be strictly increasing");
    if (indices_.front() < 1)
        throw std::invalid_argument("segment indices start at 1");
}

Segment::Segment(std::initializer_list<int> indices)
    : Segment(std::vector<int>(indices)) {}

bool Segment::contains(int index) const {
    return std::binary_search(indices_.begin(), indices_.end(), index);
}

bool is_admissible(const AdmissiblePartition& partition) {
    if (partition.part_count < 1)
        return false;
    if (partition.parts.size() != static_cast<std::size_t>(partition.part_count))
        return false;
    if (partition.part_count > partition.parts.front().min())
        return false;
    for (std::size_t i = 1; i < partition.parts.size(); ++i) {
        if (partition.parts[i - 1].max() >= partition.parts[i].min())
            return false;
    }
    return true;
}

FiniteVector restrict(const FiniteVector& x, const Segment& segment) {
    FiniteVector result;
    for (int index : segment.indices()) {
        const Rational& value = x.at(index);
        if (value != 0)
            result.set(index, value);
    }
    return result;
}

Rational sup_norm(const FiniteVector& x) {
    Rational best = 0;
    for (const auto& [index, value] : x.entries()) {
        Rational mag = value < 0 ? Rational(-value) : value;
        if (mag > best)
            best = mag;
    }
    return best;
}

namespace {

// Appends every way of laying out `remaining` further runs inside
// support[pos..], each run a block of consecutive support entries.
bool extend_partition(const std::vector<int>& support, std::size_t pos, int remaining,
                      std::vector<Segment>& parts,
                      const std::function<bool(const AdmissiblePartition&)>& visit) {
    if (remaining == 0) {
        AdmissiblePartition partition;
        partition.part_count = static_cast<int>(parts.size());
        partition.parts = parts;
        return visit(partition);
    }
    for (std::size_t start = pos; start < support.size(); ++start) {
        // Leave room for the remaining - 1 runs after this one.
        for (std::size_t stop = start;
             stop + static_cast<std::size_t>(remaining) - 1 < support.size(); ++stop) {
            parts.emplace_back(std::vector<int>(support.begin() + start,
                                                support.begin() + stop + 1));
            const bool keep = extend_partition(support, stop + 1, remaining - 1, parts, visit);
            parts.pop_back();
            if (!keep)
                return false;
        }
    }
    return true;
}

} // namespace

void for_each_admissible(const Segment& support, int max_k,
                         const std::function<bool(const AdmissiblePartition&)>& visit) {
    const std::vector<int>& indices = support.indices();
    for (int k = 1; k <= max_k && k <= static_cast<int>(indices.size()); ++k) {
        std::vector<Segment> parts;
        bool keep = true;
        for (std::size_t start = 0; start < indices.size() && keep; ++start) {
            if (indices[start] < k)
                continue; // admissibility requires k <= min of the first run
            for (std::size_t stop = start;
                 stop + static_cast<std::size_t>(k) - 1 < indices.size() && keep; ++stop) {
                parts.emplace_back(std::vector<int>(indices.begin() + start,
                                                    indices.begin() + stop + 1));
                keep = extend_partition(indices, stop + 1, k - 1, parts, visit);
                parts.pop_back();
            }
        }
        if (!keep)
            return;
    }
}

std::vector<AdmissiblePartition> enumerate_admissible(const Segment& support, int max_k) {
    std::vector<AdmissiblePartition> result;
    for_each_admissible(support, max_k, [&](const AdmissiblePartition& partition) {
        result.push_back(partition);
        return true;
    });
    return result;
}

} // namespace tsilab
