#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace boson {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always reduced, denominator > 0, zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

// Renders "num/den", always with an explicit denominator ("3" -> "3/1").
inline std::string rat_to_fraction_string(const Rational& r) {
    return rat_num(r).str() + "/" + rat_den(r).str();
}

// Renders without "/1" for display purposes.
inline std::string rat_to_string(const Rational& r) {
    if (rat_den(r) == 1) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

// Parses "int" or "int/nat". Throws std::invalid_argument on malformed input.
inline Rational rat_parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den <= 0) throw std::invalid_argument("rational denominator must be positive: " + s);
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational: " + s);
    }
}

inline double rat_to_double(const Rational& r) {
    return static_cast<double>(r);
}

inline BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt b = 1;
    for (unsigned i = 0; i < k; ++i) {
        b *= n - i;
        b /= i + 1;
    }
    return b;
}

// Integer falling factorial (m)_l = m(m-1)...(m-l+1).
inline BigInt int_falling(BigInt m, unsigned l) {
    BigInt p = 1;
    for (unsigned i = 0; i < l; ++i) p *= m - i;
    return p;
}

}  // namespace boson
