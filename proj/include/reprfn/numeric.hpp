#pragma once

// Exact integer and rational arithmetic shared by every module. Nothing in
// this library touches floating point except the advisory decimal renderings.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace reprfn {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Raised when an input violates a documented precondition or invariant.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Int pow_int(const Int& base, std::size_t exponent) {
    Int result = 1;
    Int b = base;
    while (exponent != 0) {
        if (exponent & 1u) result *= b;
        exponent >>= 1;
        if (exponent != 0) b *= b;
    }
    return result;
}

// k^e for a signed exponent; negative exponents give 1/k^|e|.
inline Rational pow_rational(const Int& base, std::int64_t exponent) {
    if (exponent >= 0) return Rational(pow_int(base, static_cast<std::size_t>(exponent)));
    return Rational(Int(1), pow_int(base, static_cast<std::size_t>(-exponent)));
}

// Floor and ceiling division for any signs (divisor != 0).
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;  // truncates toward zero
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
    return q;
}

inline Int floor(const Rational& x) {
    return floor_div(boost::multiprecision::numerator(x), boost::multiprecision::denominator(x));
}

inline Int ceil(const Rational& x) {
    return ceil_div(boost::multiprecision::numerator(x), boost::multiprecision::denominator(x));
}

inline Int gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = std::move(b);
        b = std::move(t);
    }
    return a;
}

inline std::string to_string(const Int& x) { return x.str(); }

// "p/q" in lowest terms, or just "p" for integers.
inline std::string to_fraction_string(const Rational& x) {
    const Int& den = boost::multiprecision::denominator(x);
    if (den == 1) return boost::multiprecision::numerator(x).str();
    return boost::multiprecision::numerator(x).str() + "/" + den.str();
}

// Decimal rendering with a fixed number of fractional digits, truncated
// toward negative infinity. Display only.
std::string to_decimal_string(const Rational& x, unsigned digits = 6);

// Parse a decimal integer (optional leading '-'); throws DomainError.
Int parse_int(const std::string& text);

}  // namespace reprfn
