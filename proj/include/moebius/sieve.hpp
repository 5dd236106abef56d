#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "moebius/errors.hpp"

namespace moebius {

struct PrimePower {
  std::uint64_t prime = 0;
  std::uint32_t exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Canonical factorization: primes strictly increasing, exponents >= 1.
// n = 1 is the empty list.
using Factorization = std::vector<PrimePower>;

inline std::uint64_t unfactorize(const Factorization& fac) {
  std::uint64_t n = 1;
  for (const auto& [p, a] : fac)
    for (std::uint32_t i = 0; i < a; ++i) n *= p;
  return n;
}

// Smallest-prime-factor table filled by a linear (Euler) sieve, with mu and
// omega caches filled in the same O(limit) pass. Immutable after construction;
// all queries are pure reads, so a table can be shared across threads.
class SieveTable {
 public:
  static constexpr std::uint64_t kDefaultLimitCap = 100'000'000;

  explicit SieveTable(std::uint64_t limit, std::uint64_t cap = kDefaultLimitCap)
      : limit_(limit) {
    if (limit == 0) throw CapacityError("sieve limit must be positive");
    if (limit > cap)
      throw CapacityError("sieve limit " + std::to_string(limit) +
                          " exceeds cap " + std::to_string(cap));
    spf_.assign(limit + 1, 0);
    mu_.assign(limit + 1, 0);
    omega_.assign(limit + 1, 0);
    spf_[1] = 1;
    mu_[1] = 1;
    for (std::uint64_t i = 2; i <= limit; ++i) {
      if (spf_[i] == 0) {
        spf_[i] = static_cast<std::uint32_t>(i);
        mu_[i] = -1;
        omega_[i] = 1;
        primes_.push_back(i);
      }
      for (std::uint64_t p : primes_) {
        if (p > spf_[i] || p > limit / i) break;
        std::uint64_t m = i * p;
        spf_[m] = static_cast<std::uint32_t>(p);
        if (p == spf_[i]) {
          mu_[m] = 0;  // p^2 | m
          omega_[m] = omega_[i];
        } else {
          mu_[m] = static_cast<std::int8_t>(-mu_[i]);
          omega_[m] = static_cast<std::uint8_t>(omega_[i] + 1);
        }
      }
    }
  }

  std::uint64_t limit() const { return limit_; }
  const std::vector<std::uint64_t>& primes() const { return primes_; }

  std::uint64_t smallest_prime_factor(std::uint64_t n) const {
    check_range(n);
    return spf_[n];
  }

  // mu(n): +-1 for squarefree n by parity of omega(n), 0 otherwise.
  int mobius(std::uint64_t n) const {
    check_range(n);
    return mu_[n];
  }

  // Number of distinct prime divisors.
  std::uint32_t omega(std::uint64_t n) const {
    check_range(n);
    return omega_[n];
  }

  // Squarefree kernel: product of the distinct primes dividing n; kernel(1) = 1.
  std::uint64_t kernel(std::uint64_t n) const {
    check_range(n);
    std::uint64_t k = 1;
    while (n > 1) {
      std::uint64_t p = spf_[n];
      k *= p;
      while (n % p == 0) n /= p;
    }
    return k;
  }

  bool is_squarefree(std::uint64_t n) const { return mobius(n) != 0; }

  bool is_prime(std::uint64_t n) const {
    check_range(n);
    return n >= 2 && spf_[n] == n;
  }

  Factorization factorize(std::uint64_t n) const {
    check_range(n);
    Factorization fac;
    while (n > 1) {
      std::uint64_t p = spf_[n];
      std::uint32_t a = 0;
      while (n % p == 0) {
        n /= p;
        ++a;
      }
      fac.push_back({p, a});
    }
    return fac;
  }

  // Appends the distinct primes of n to out (ascending). Allocation-free
  // helper for the grid enumerators.
  void distinct_primes(std::uint64_t n, std::vector<std::uint64_t>& out) const {
    check_range(n);
    while (n > 1) {
      std::uint64_t p = spf_[n];
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }

  void check_range(std::uint64_t n) const {
    if (n == 0 || n > limit_)
      throw RangeError("argument " + std::to_string(n) +
                       " outside sieve range [1, " + std::to_string(limit_) +
                       "]");
  }

 private:
  std::uint64_t limit_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::int8_t> mu_;
  std::vector<std::uint8_t> omega_;
  std::vector<std::uint64_t> primes_;
};

inline SieveTable build_sieve(std::uint64_t limit) { return SieveTable(limit); }

}  // namespace moebius
