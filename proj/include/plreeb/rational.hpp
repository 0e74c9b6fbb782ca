#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <string>

#include "plreeb/error.hpp"

namespace plreeb {

/// Exact rational scalar. All field values, levels and interval endpoints
/// use this type; there is no floating point anywhere in the core.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

namespace detail {

inline bool parse_integer_token(const std::string& s, BigInt& out)
{
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (std::size_t k = i; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    out = BigInt(s);
    return true;
}

} // namespace detail

/// Parses "p" or "p/q" with q > 0. Whitespace is not accepted.
inline Rational parse_rational(const std::string& text)
{
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        BigInt n;
        if (!detail::parse_integer_token(text, n))
            throw Error(ErrorCode::ParseError, "bad rational '" + text + "'");
        return Rational(n);
    }
    BigInt num, den;
    if (!detail::parse_integer_token(text.substr(0, slash), num) ||
        !detail::parse_integer_token(text.substr(slash + 1), den))
        throw Error(ErrorCode::ParseError, "bad rational '" + text + "'");
    if (den <= 0)
        throw Error(ErrorCode::ParseError, "denominator must be positive in '" + text + "'");
    return Rational(num, den);
}

/// Canonical form: reduced, positive denominator; "p/q", or "p" when q == 1.
inline std::string to_string(const Rational& r)
{
    const BigInt num = numerator(r);
    const BigInt den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline Rational midpoint(const Rational& a, const Rational& b)
{
    return (a + b) / 2;
}

} // namespace plreeb
