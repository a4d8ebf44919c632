#include "tsilab/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace tsilab {

namespace {

Int parse_integer(std::string_view text) {
    if (text.empty())
        throw std::invalid_argument("empty integer literal");
    std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size())
        throw std::invalid_argument("sign without digits in rational literal");
    for (std::size_t i = start; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw std::invalid_argument("invalid digit in rational literal: '" +
                                        std::string(text) + "'");
    }
    return Int(std::string(text));
}

} // namespace

Rational parse_rational(std::string_view text) {
    const std::size_t slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text));
    const Int num = parse_integer(text.substr(0, slash));
    const Int den = parse_integer(text.substr(slash + 1));
    if (den == 0)
        throw std::invalid_argument("zero denominator in rational literal: '" +
                                    std::string(text) + "'");
    return Rational(num) / Rational(den);
}

std::string rational_to_string(const Rational& value) {
    const Int num = boost::multiprecision::numerator(value);
    const Int den = boost::multiprecision::denominator(value);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

namespace {

// Largest t >= 0 with t^root <= target, by bisection on integers.
Int integer_root_floor(const Int& target, int root) {
    if (target <= 0)
        return 0;
    if (root == 1)
        return target;
    Int lo = 0;
    Int hi = 1;
    while (boost::multiprecision::pow(hi, static_cast<unsigned>(root)) <= target)
        hi <<= 1;
    while (lo + 1 < hi) {
        const Int mid = (lo + hi) / 2;
        if (boost::multiprecision::pow(mid, static_cast<unsigned>(root)) <= target)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

std::string format_scaled(const Int& scaled, int digits, bool negative) {
    std::string body = scaled.str();
    if (digits == 0)
        return (negative ? "-" : "") + body;
    if (body.size() <= static_cast<std::size_t>(digits))
        body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
    return (negative ? "-" : "") + body;
}

} // namespace

std::string rational_to_decimal(const Rational& value, int digits) {
    if (digits < 0)
        throw std::invalid_argument("negative digit count");
    const bool negative = value < 0;
    const Rational mag = negative ? Rational(-value) : value;
    Int scale = 1;
    for (int i = 0; i < digits; ++i)
        scale *= 10;
    const Int scaled = Int(boost::multiprecision::numerator(mag) * scale /
                           boost::multiprecision::denominator(mag));
    return format_scaled(scaled, digits, negative && scaled != 0);
}

std::string rational_root_decimal(const Rational& value, int root, int digits) {
    if (value < 0)
        throw std::invalid_argument("root of a negative value");
    if (root < 1)
        throw std::invalid_argument("root must be positive");
    if (digits < 0)
        throw std::invalid_argument("negative digit count");
    // floor(value^(1/root) * 10^digits) = floor((num * 10^(root*digits) / den)^(1/root))
    Int scale = 1;
    for (int i = 0; i < root * digits; ++i)
        scale *= 10;
    const Int inner = Int(boost::multiprecision::numerator(value) * scale /
                          boost::multiprecision::denominator(value));
    return format_scaled(integer_root_floor(inner, root), digits, false);
}

Rational rational_pow(const Rational& base, int exponent) {
    if (exponent < 0)
        throw std::invalid_argument("negative exponent");
    Rational result = 1;
    Rational factor = base;
    int e = exponent;
    while (e > 0) {
        if (e & 1)
            result *= factor;
        factor *= factor;
        e >>= 1;
    }
    return result;
}

} // namespace tsilab
