#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "moebius/errors.hpp"

namespace moebius {

// Exact arithmetic backbone. Summatory accumulators grow like x * (log x)^r,
// so every public sum is carried as an arbitrary-precision integer; rational
// values stay in canonical form (gcd(num, den) = 1, den >= 1) at all times.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline Rational rat_invert(const Rational& r) {
  if (r == 0) throw ArithmeticError("cannot invert zero");
  return Rational(denominator(r), numerator(r));
}

// base^e for integer e of either sign (negative e inverts).
inline Rational rat_pow(const Rational& base, long long e) {
  if (e == 0) return Rational(1);  // 0^0 == 1 by the empty-product convention
  Rational b = base;
  unsigned long long k = static_cast<unsigned long long>(e < 0 ? -e : e);
  if (e < 0) b = rat_invert(b);
  Rational acc(1);
  while (k > 0) {
    if (k & 1) acc *= b;
    b *= b;
    k >>= 1;
  }
  return acc;
}

inline BigInt int_pow(BigInt base, std::uint64_t e) {
  BigInt acc(1);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

inline BigInt factorial(std::uint64_t n) {
  BigInt acc(1);
  for (std::uint64_t i = 2; i <= n; ++i) acc *= i;
  return acc;
}

inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return BigInt(0);
  if (k > n - k) k = n - k;
  BigInt acc(1);
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc *= (n - k + i);
    acc /= i;  // exact: acc is always a binomial coefficient
  }
  return acc;
}

inline double to_double(const BigInt& v) { return v.convert_to<double>(); }
inline double to_double(const Rational& v) { return v.convert_to<double>(); }

inline std::string to_string(const BigInt& v) { return v.str(); }

// "a/b", or just "a" when the value is an integer.
inline std::string to_string(const Rational& v) {
  if (is_integer(v)) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

}  // namespace moebius
