#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "cyclemass/errors.hpp"

namespace cyclemass {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// base^e with integer exponent; e < 0 inverts (base must be nonzero then).
inline Rational rational_pow(const Rational& base, long e) {
    if (e < 0) {
        if (base == 0) throw std::invalid_argument("rational_pow: zero base with negative exponent");
        return 1 / rational_pow(base, -e);
    }
    Rational acc = 1, b = base;
    for (unsigned long k = static_cast<unsigned long>(e); k; k >>= 1) {
        if (k & 1) acc *= b;
        if (k > 1) b *= b;
    }
    return acc;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// "3/4" for non-integers, "7" for integers.
inline std::string fraction_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

/// Accepts "123", "-7", "3/4", "0.25", "-1.5e-3" (decimal exponents allowed).
/// Offsets in errors are relative to the start of `s`.
Rational parse_rational(std::string_view s);

/// Nearest integer, ties to even.
BigInt round_half_even(const Rational& r);

/// Floor of a rational as BigInt.
inline BigInt rational_floor(const Rational& r) {
    BigInt q = numerator(r) / denominator(r);
    if (r < 0 && q * denominator(r) != numerator(r)) --q;
    return q;
}

/// Uniform compile-time facts about the two weight scalar kinds.
template <class S> struct scalar_traits;

template <> struct scalar_traits<double> {
    static constexpr bool exact = false;
    static double sum_tolerance() { return 0x1p-40; }
    static double from_rational(const Rational& r) { return to_double(r); }
    static double from_int(long v) { return static_cast<double>(v); }
    static double abs(double v) { return std::fabs(v); }
};

template <> struct scalar_traits<Rational> {
    static constexpr bool exact = true;
    static Rational sum_tolerance() { return 0; }
    static Rational from_rational(const Rational& r) { return r; }
    static Rational from_int(long v) { return Rational(v); }
    static Rational abs(const Rational& v) { return v < 0 ? Rational(-v) : v; }
};

} // namespace cyclemass
