#include "tsilab/spaces.hpp"

#include "tsilab/dual.hpp"

#include <memory>
#include <stdexcept>

namespace tsilab {

Rational c0_norm(const FiniteVector& x) {
    return sup_norm(x);
}

Rational lp_norm_pow(const FiniteVector& x, int p) {
    if (p < 1)
        throw std::invalid_argument("p must be at least 1");
    Rational sum = 0;
    for (const auto& [index, value] : x.entries()) {
        const Rational magnitude = value < 0 ? Rational(-value) : value;
        sum += rational_pow(magnitude, p);
    }
    return sum;
}

NormOracle c0_oracle() {
    NormOracle oracle;
    oracle.id = "c0";
    oracle.power = 1;
    oracle.evaluate = [](const FiniteVector& x) { return c0_norm(x); };
    return oracle;
}

NormOracle lp_oracle(int p) {
    if (p < 1)
        throw std::invalid_argument("p must be at least 1");
    NormOracle oracle;
    oracle.id = "lp:" + std::to_string(p);
    oracle.power = p;
    oracle.evaluate = [p](const FiniteVector& x) { return lp_norm_pow(x, p); };
    return oracle;
}

NormOracle tsirelson_oracle(const Theta& theta) {
    NormOracle oracle;
    oracle.id = "tsirelson:" + rational_to_string(theta.value());
    oracle.power = 1;
    oracle.theta = theta.value();
    const Theta copy = theta;
    oracle.evaluate = [copy](const FiniteVector& x) { return tsirelson_norm_value(x, copy); };
    return oracle;
}

NormOracle dual_tsirelson_oracle(const Theta& theta) {
    NormOracle oracle;
    oracle.id = "dual-tsirelson:" + rational_to_string(theta.value());
    oracle.power = 1;
    oracle.theta = theta.value();
    oracle.is_dual_tsirelson = true;
    auto solver = std::make_shared<DualBallSolver>(theta);
    oracle.evaluate = [solver](const FiniteVector& x) { return solver->dual_norm(x).value; };
    return oracle;
}

NormOracle parse_space(const std::string& id) {
    if (id == "c0")
        return c0_oracle();
    const auto colon = id.find(':');
    if (colon != std::string::npos) {
        const std::string head = id.substr(0, colon);
        const std::string tail = id.substr(colon + 1);
        if (head == "lp") {
            int p = 0;
            try {
                std::size_t used = 0;
                p = std::stoi(tail, &used);
                if (used != tail.size())
                    throw std::invalid_argument(tail);
            } catch (const std::exception&) {
                throw std::invalid_argument("lp spaces need an integer exponent, got '" + tail +
                                            "'");
            }
            return lp_oracle(p);
        }
        if (head == "tsirelson")
            return tsirelson_oracle(Theta(parse_rational(tail)));
        if (head == "dual-tsirelson")
            return dual_tsirelson_oracle(Theta(parse_rational(tail)));
    }
    throw std::invalid_argument(
        "unknown space '" + id +
        "'; expected c0, lp:p, tsirelson:theta or dual-tsirelson:theta");
}

std::vector<FiniteVector> c0_prototype_family(int n) {
    if (n < 1)
        throw std::invalid_argument("family size must be positive");
    std::vector<FiniteVector> family;
    family.reserve(static_cast<std::size_t>(n));
    FiniteVector prefix;
    for (int m = 1; m <= n; ++m) {
        prefix.set(m, 1);
        FiniteVector x = prefix;
        x.set(m + 1, -1);
        family.push_back(std::move(x));
    }
    return family;
}

std::vector<FiniteVector> lp_basis_family(int n) {
    if (n < 1)
        throw std::invalid_argument("family size must be positive");
    std::vector<FiniteVector> family;
    family.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        family.push_back(FiniteVector::unit(i));
    return family;
}

} // namespace tsilab
