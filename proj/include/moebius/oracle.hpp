#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "moebius/errors.hpp"
#include "moebius/multiplicative.hpp"
#include "moebius/numeric.hpp"
#include "moebius/sieve.hpp"

// Deliberately naive reference implementations used as ground truth for the
// fast paths: trial division, full divisor enumeration, unpruned grid loops.
// Nothing here touches SieveTable machinery, so a bug in the fast code cannot
// mask itself.

namespace moebius::oracle {

inline Factorization naive_factorize(std::uint64_t n) {
  if (n == 0) throw RangeError("naive_factorize requires n >= 1");
  Factorization fac;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    std::uint32_t a = 0;
    while (n % p == 0) {
      n /= p;
      ++a;
    }
    fac.push_back({p, a});
  }
  if (n > 1) fac.push_back({n, 1});
  return fac;
}

inline int naive_mobius(std::uint64_t n) {
  int sign = 1;
  for (const auto& [p, a] : naive_factorize(n)) {
    if (a >= 2) return 0;
    sign = -sign;
  }
  return sign;
}

inline std::uint32_t naive_omega(std::uint64_t n) {
  return static_cast<std::uint32_t>(naive_factorize(n).size());
}

inline std::uint64_t naive_kernel(std::uint64_t n) {
  std::uint64_t k = 1;
  for (const auto& [p, a] : naive_factorize(n)) k *= p;
  return k;
}

inline std::vector<std::uint64_t> naive_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
  return small;
}

enum class GridWeight { mobius_product, mobius_square_product, additive_f };

// Literal r-fold nested loop over [1, x]^r with no pruning whatsoever.
// Guarded at x^r <= 10^8; the oracle exists for tiny instances only.
inline BigInt naive_grid_sum(GridWeight weight, std::uint32_t r,
                             std::uint64_t x,
                             const MultiplicativeFn* f = nullptr) {
  if (r < 1 || x < 1) throw ParameterError("naive_grid_sum needs r, x >= 1");
  double cost = std::pow(static_cast<double>(x), static_cast<double>(r));
  if (cost > 1e8)
    throw CapacityError("naive_grid_sum guard: x^r exceeds 10^8");
  if (weight == GridWeight::additive_f && f == nullptr)
    throw ParameterError("additive weight requires f");

  std::vector<std::uint64_t> tuple(r, 1);
  BigInt total = 0;
  Rational rational_total = 0;
  // Odometer over the full hypercube.
  while (true) {
    std::uint64_t product = 1;
    for (std::uint64_t v : tuple) product *= v;
    std::uint64_t floor_term = x / product;
    switch (weight) {
      case GridWeight::mobius_product:
        total += BigInt(naive_mobius(product)) * floor_term;
        break;
      case GridWeight::mobius_square_product: {
        int m = naive_mobius(product);
        total += BigInt(m * m) * floor_term;
        break;
      }
      case GridWeight::additive_f: {
        Rational w = 0;
        for (std::uint64_t v : tuple) w += f->eval(naive_factorize(v));
        rational_total += w * Rational(floor_term);
        break;
      }
    }
    std::uint32_t i = 0;
    while (i < r && tuple[i] == x) tuple[i++] = 1;
    if (i == r) break;
    ++tuple[i];
  }
  if (weight == GridWeight::additive_f) {
    if (!is_integer(rational_total))
      throw TypeError("additive grid sum is not an integer: " +
                      to_string(rational_total));
    return numerator(rational_total);
  }
  return total;
}

// Direct floating-point evaluation of sum_{d|n} mu(d)^e f(d) ln d.
inline double naive_divisor_log_sum_float(std::uint64_t n, std::uint32_t e,
                                          const MultiplicativeFn& f) {
  if (e != 1 && e != 2) throw ParameterError("e must be 1 or 2");
  double acc = 0.0;
  for (std::uint64_t d : naive_divisors(n)) {
    int m = naive_mobius(d);
    int me = (e == 1) ? m : m * m;
    if (me == 0) continue;
    double fd = to_double(f.eval(naive_factorize(d)));
    acc += me * fd * std::log(static_cast<double>(d));
  }
  return acc;
}

// Dirichlet convolution by direct divisor-pair enumeration.
inline Rational naive_convolve(const std::function<Rational(std::uint64_t)>& f,
                               const std::function<Rational(std::uint64_t)>& g,
                               std::uint64_t n) {
  Rational acc = 0;
  for (std::uint64_t d : naive_divisors(n)) acc += f(d) * g(n / d);
  return acc;
}

// tau_k via repeated self-convolution of the constant-1 function:
// tau_1 = 1, tau_k(n) = sum_{d|n} tau_{k-1}(d).
inline BigInt naive_tau_k(std::uint64_t n, std::uint32_t k) {
  if (k < 1) throw ParameterError("naive_tau_k requires k >= 1");
  if (k == 1) return 1;
  BigInt acc = 0;
  for (std::uint64_t d : naive_divisors(n)) acc += naive_tau_k(d, k - 1);
  return acc;
}

}  // namespace moebius::oracle
