#include "tsilab/lp.hpp"

#include "tsilab/errors.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

namespace tsilab {

namespace {

// Dense tableau. Column layout: for the i-th listed variable the split pair
// (u_i, v_i) with x = u - v occupies columns 2i and 2i+1, then one slack per
// constraint, then a single artificial column used only while a feasible
// basis is being constructed. The right-hand side lives at index `cols`.
// red[j] is the rate at which the objective grows when the nonbasic column j
// enters; red[cols] tracks minus the objective value so that pivoting updates
// every slot uniformly.
struct Tableau {
    int cols = 0;
    std::vector<std::vector<Rational>> a;
    std::vector<int> basis;
    std::vector<Rational> red;
    int banned = -1;

    static void eliminate(std::vector<Rational>& target, const std::vector<Rational>& row,
                          int q) {
        if (target[q] == 0)
            return;
        const Rational factor = target[q];
        for (std::size_t j = 0; j < target.size(); ++j)
            target[j] -= factor * row[j];
    }

    void pivot(std::size_t p, int q) {
        auto& row = a[p];
        const Rational piv = row[q];
        for (auto& value : row)
            value /= piv;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (i != p)
                eliminate(a[i], row, q);
        eliminate(red, row, q);
        basis[p] = q;
    }

    void price_out() {
        for (std::size_t i = 0; i < a.size(); ++i)
            eliminate(red, a[i], basis[i]);
    }

    // Bland's rule: the lowest-numbered improving column enters, and ratio
    // ties are broken toward the lowest-numbered basic variable, which rules
    // out cycling.
    int entering() const {
        for (int j = 0; j < cols; ++j)
            if (j != banned && red[j] > 0)
                return j;
        return -1;
    }

    std::optional<std::size_t> leaving(int q) const {
        std::optional<std::size_t> best;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i][q] <= 0)
                continue;
            if (!best) {
                best = i;
                continue;
            }
            const Rational lhs = a[i][cols] * a[*best][q];
            const Rational rhs = a[*best][cols] * a[i][q];
            if (lhs < rhs || (lhs == rhs && basis[i] < basis[*best]))
                best = i;
        }
        return best;
    }

    bool optimize() {
        for (;;) {
            const int q = entering();
            if (q < 0)
                return true;
            const auto p = leaving(q);
            if (!p)
                return false;
            pivot(*p, q);
        }
    }
};

} // namespace

LpResult solve_lp(const LinearProgram& program) {
    std::vector<int> vars = program.variables;
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    if (!vars.empty() && vars.front() < 1)
        throw std::invalid_argument("variable ids start at 1");

    std::map<int, int> slot;
    for (std::size_t i = 0; i < vars.size(); ++i)
        slot[vars[i]] = static_cast<int>(i);
    const auto slot_of = [&slot](int coordinate) {
        const auto it = slot.find(coordinate);
        if (it == slot.end())
            throw std::invalid_argument("program references an unlisted variable");
        return it->second;
    };

    const int rows = static_cast<int>(program.constraints.size());
    const int per_var = program.nonnegative ? 1 : 2;
    const int structural = per_var * static_cast<int>(vars.size());
    const int slack0 = structural;
    const int art = structural + rows;

    Tableau t;
    t.cols = structural + rows + 1;
    t.a.assign(rows, std::vector<Rational>(t.cols + 1));
    t.basis.resize(rows);
    bool negative_rhs = false;
    for (int i = 0; i < rows; ++i) {
        const auto& [row, bound] = program.constraints[i];
        for (const auto& [coordinate, coefficient] : row.entries()) {
            const int s = slot_of(coordinate);
            t.a[i][per_var * s] = coefficient;
            if (!program.nonnegative)
                t.a[i][2 * s + 1] = -coefficient;
        }
        t.a[i][slack0 + i] = 1;
        t.a[i][art] = -1;
        t.a[i][t.cols] = bound;
        t.basis[i] = slack0 + i;
        if (bound < 0)
            negative_rhs = true;
    }
    for (const auto& [coordinate, coefficient] : program.objective.entries())
        slot_of(coordinate);

    if (negative_rhs) {
        std::size_t lowest = 0;
        for (std::size_t i = 1; i < t.a.size(); ++i)
            if (t.a[i][t.cols] < t.a[lowest][t.cols])
                lowest = i;
        t.red.assign(t.cols + 1, 0);
        t.pivot(lowest, art);
        t.red[art] = -1;
        t.price_out();
        if (!t.optimize())
            throw InvariantViolation("feasibility phase cannot be unbounded");
        if (-t.red[t.cols] < 0) {
            LpResult result;
            result.status = LpStatus::Infeasible;
            result.objective = 0;
            return result;
        }
        for (std::size_t i = 0; i < t.a.size(); ++i) {
            if (t.basis[i] != art)
                continue;
            int replacement = -1;
            for (int j = 0; j < t.cols && replacement < 0; ++j)
                if (j != art && t.a[i][j] != 0)
                    replacement = j;
            if (replacement >= 0) {
                t.pivot(i, replacement); // degenerate: the row's value is zero
            } else {
                t.a.erase(t.a.begin() + static_cast<std::ptrdiff_t>(i));
                t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
            }
            break;
        }
    }

    t.banned = art;
    t.red.assign(t.cols + 1, 0);
    for (const auto& [coordinate, coefficient] : program.objective.entries()) {
        const int s = slot_of(coordinate);
        t.red[per_var * s] = coefficient;
        if (!program.nonnegative)
            t.red[2 * s + 1] = -coefficient;
    }
    t.price_out();
    if (!t.optimize()) {
        LpResult result;
        result.status = LpStatus::Unbounded;
        result.objective = 0;
        return result;
    }

    LpResult result;
    result.status = LpStatus::Optimal;
    result.objective = -t.red[t.cols];
    std::map<int, Rational> values;
    for (std::size_t i = 0; i < t.a.size(); ++i) {
        const int var = t.basis[i];
        if (var >= structural)
            continue;
        const Rational& value = t.a[i][t.cols];
        if (program.nonnegative || var % 2 == 0)
            values[vars[static_cast<std::size_t>(var / per_var)]] += value;
        else
            values[vars[static_cast<std::size_t>(var / 2)]] -= value;
    }
    for (const auto& [coordinate, value] : values)
        if (value != 0)
            result.vertex.set(coordinate, value);
    return result;
}

} // namespace tsilab
