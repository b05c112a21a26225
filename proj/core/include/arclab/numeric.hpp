#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace arclab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
// 50 decimal digits (~166 bits of mantissa); used for report-only real quantities.
using Real = boost::multiprecision::cpp_bin_float_50;

inline constexpr const char* kVersion = ARCLAB_VERSION;

BigInt binomial(std::uint64_t n, std::uint64_t k);
BigInt factorial(std::uint64_t n);

std::string to_string(const BigInt& value);
// "numerator/denominator" in lowest terms; integers print as "n/1".
std::string to_string(const Rational& value);
// Fixed number of significant digits, no locale.
std::string to_string(const Real& value, int digits = 20);

Rational parse_rational(const std::string& text);

// floor(x), treating values within 1e-30 of the next integer as that integer
// so that exact powers such as 81^{0.75} = 27 are not lost to rounding.
BigInt floor_to_int(const Real& x);

Real real_pow(const Real& base, const Real& exponent);
Real to_real(const Rational& value);

}  // namespace arclab
