#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "equiloc/errors.hpp"

namespace equiloc {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational numbers. Values are always stored reduced with positive
/// denominator; zero is 0/1. Backed by Boost.Multiprecision so localization
/// denominators like products of weight differences never overflow.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0)
        throw InvalidArgument("rational with zero denominator");
    if (den < 0)
        return Rational(-num, -den);
    return Rational(num, den);
}

/// Canonical serialization: "p/q", or "p" when q = 1.
inline std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += '/';
        s += denominator(r).str();
    }
    return s;
}

inline double to_double(const Rational& r) { return static_cast<double>(r); }

/// Parses "p" or "p/q" with optional sign and surrounding whitespace.
inline Rational parse_rational(std::string_view text) {
    std::size_t b = 0, e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    std::string_view body = text.substr(b, e - b);
    if (body.empty())
        throw ParseError("empty rational literal");
    auto parse_int = [](std::string_view tok) -> BigInt {
        if (tok.empty())
            throw ParseError("empty integer literal");
        bool negative = tok[0] == '-';
        std::string_view digits =
            (tok[0] == '+' || tok[0] == '-') ? tok.substr(1) : tok;
        if (digits.empty())
            throw ParseError("sign without digits in rational literal");
        for (char c : digits)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw ParseError("invalid character in rational literal: '" +
                                 std::string(tok) + "'");
        BigInt v{std::string(digits)};
        return negative ? BigInt(-v) : v;
    };
    std::size_t slash = body.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_int(body));
    BigInt num = parse_int(body.substr(0, slash));
    BigInt den = parse_int(body.substr(slash + 1));
    if (den == 0)
        throw ParseError("zero denominator in rational literal");
    return make_rational(num, den);
}

inline Rational rat_pow(const Rational& base, long exponent) {
    if (exponent == 0)
        return Rational(1);
    if (base == 0) {
        if (exponent < 0)
            throw InvalidArgument("zero raised to a negative power");
        return Rational(0);
    }
    Rational b = exponent > 0 ? base : Rational(1) / base;
    unsigned long n = static_cast<unsigned long>(exponent > 0 ? exponent : -exponent);
    Rational acc(1);
    while (n) {
        if (n & 1)
            acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

/// Factorials as exact rationals, cached.
inline const Rational& factorial(int n) {
    static std::vector<Rational> cache{Rational(1)};
    while (static_cast<int>(cache.size()) <= n)
        cache.push_back(cache.back() * Rational(static_cast<int>(cache.size())));
    return cache[static_cast<std::size_t>(n)];
}

using RationalVector = std::vector<Rational>;

inline std::string to_string(const RationalVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ", ";
        s += to_string(v[i]);
    }
    return s + ")";
}

} // namespace equiloc
