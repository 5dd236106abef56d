#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "moebius/numeric.hpp"
#include "moebius/sieve.hpp"

namespace moebius {

// A multiplicative function given by its (rational) value on prime powers.
// f(1) = 1 as the empty product; f(n) is the product of the rule over the
// factorization of n. Copies share the memo cache, so passing by value is
// cheap and thread-safe.
class MultiplicativeFn {
 public:
  using PrimePowerRule =
      std::function<Rational(std::uint64_t p, std::uint32_t a)>;

  MultiplicativeFn(std::string name, PrimePowerRule rule)
      : name_(std::move(name)),
        rule_(std::move(rule)),
        memo_(std::make_shared<Memo>()) {}

  const std::string& name() const { return name_; }

  Rational at_prime_power(std::uint64_t p, std::uint32_t a) const {
    std::lock_guard<std::mutex> lock(memo_->mutex);
    auto key = std::make_pair(p, a);
    auto it = memo_->values.find(key);
    if (it != memo_->values.end()) return it->second;
    Rational v = rule_(p, a);
    memo_->values.emplace(key, v);
    return v;
  }

  Rational eval(const Factorization& fac) const {
    Rational acc(1);
    for (const auto& [p, a] : fac) acc *= at_prime_power(p, a);
    return acc;
  }

  Rational eval(std::uint64_t n, const SieveTable& sieve) const {
    return eval(sieve.factorize(n));
  }

 private:
  struct Memo {
    std::mutex mutex;
    std::map<std::pair<std::uint64_t, std::uint32_t>, Rational> values;
  };

  std::string name_;
  PrimePowerRule rule_;
  std::shared_ptr<Memo> memo_;
};

enum class ClassicalKind { tau_k, jordan_k, psi_k, phi, sigma };

// tau_k(p^a) = C(a+k-1, k-1), J_k(p^a) = p^{ak} - p^{(a-1)k},
// Psi_k(p^a) = p^{ak} + p^{(a-1)k}, sigma(p^a) = (p^{a+1}-1)/(p-1).
inline MultiplicativeFn classical_fn(ClassicalKind kind, std::uint32_t k = 1) {
  if (k < 1) throw ParameterError("classical_fn requires k >= 1");
  switch (kind) {
    case ClassicalKind::tau_k:
      return MultiplicativeFn(
          "tau_" + std::to_string(k),
          [k](std::uint64_t, std::uint32_t a) {
            return Rational(binomial(a + k - 1, k - 1));
          });
    case ClassicalKind::jordan_k:
      return MultiplicativeFn(
          "jordan_" + std::to_string(k),
          [k](std::uint64_t p, std::uint32_t a) {
            return Rational(int_pow(BigInt(p), std::uint64_t(a) * k) -
                            int_pow(BigInt(p), std::uint64_t(a - 1) * k));
          });
    case ClassicalKind::psi_k:
      return MultiplicativeFn(
          "psi_" + std::to_string(k),
          [k](std::uint64_t p, std::uint32_t a) {
            return Rational(int_pow(BigInt(p), std::uint64_t(a) * k) +
                            int_pow(BigInt(p), std::uint64_t(a - 1) * k));
          });
    case ClassicalKind::phi:
      return MultiplicativeFn("phi", [](std::uint64_t p, std::uint32_t a) {
        return Rational(int_pow(BigInt(p), a) - int_pow(BigInt(p), a - 1));
      });
    case ClassicalKind::sigma:
      return MultiplicativeFn("sigma", [](std::uint64_t p, std::uint32_t a) {
        return Rational((int_pow(BigInt(p), std::uint64_t(a) + 1) - 1) /
                        (BigInt(p) - 1));
      });
  }
  throw ParameterError("unknown classical function kind");
}

inline MultiplicativeFn mobius_fn() {
  return MultiplicativeFn("mu", [](std::uint64_t, std::uint32_t a) {
    return Rational(a == 1 ? -1 : 0);
  });
}

inline MultiplicativeFn one_fn() {
  return MultiplicativeFn("one",
                          [](std::uint64_t, std::uint32_t) { return Rational(1); });
}

inline MultiplicativeFn id_fn() {
  return MultiplicativeFn("id", [](std::uint64_t p, std::uint32_t a) {
    return Rational(int_pow(BigInt(p), a));
  });
}

// Named-function registry shared by the CLI, the verification dispatcher and
// the tests. k is consulted only by the *_k entries.
inline MultiplicativeFn fn_from_name(std::string_view name,
                                     std::optional<std::uint32_t> k = {}) {
  auto need_k = [&](std::string_view who) -> std::uint32_t {
    if (!k || *k < 1)
      throw ParameterError(std::string(who) + " requires a parameter k >= 1");
    return *k;
  };
  if (name == "mu") return mobius_fn();
  if (name == "one") return one_fn();
  if (name == "id") return id_fn();
  if (name == "inv_id")
    return MultiplicativeFn("inv_id", [](std::uint64_t p, std::uint32_t a) {
      return Rational(1, int_pow(BigInt(p), a));
    });
  if (name == "inv_id_k") {
    std::uint32_t kk = need_k("inv_id_k");
    return MultiplicativeFn(
        "inv_id_" + std::to_string(kk),
        [kk](std::uint64_t p, std::uint32_t a) {
          return Rational(1, int_pow(BigInt(p), std::uint64_t(a) * kk));
        });
  }
  if (name == "inv_phi")
    return MultiplicativeFn("inv_phi", [](std::uint64_t p, std::uint32_t a) {
      return Rational(1, int_pow(BigInt(p), a) - int_pow(BigInt(p), a - 1));
    });
  if (name == "inv_tau")
    return MultiplicativeFn("inv_tau", [](std::uint64_t, std::uint32_t a) {
      return Rational(1, a + 1);
    });
  if (name == "tau_k") return classical_fn(ClassicalKind::tau_k, need_k("tau_k"));
  if (name == "sigma") return classical_fn(ClassicalKind::sigma);
  // Convenience spellings "tau_2", "jordan_3", "psi_2", "phi" used by the
  // table subcommand.
  if (name == "phi") return classical_fn(ClassicalKind::phi);
  if (name.starts_with("tau_"))
    return classical_fn(ClassicalKind::tau_k,
                        static_cast<std::uint32_t>(
                            std::stoul(std::string(name.substr(4)))));
  if (name.starts_with("jordan_"))
    return classical_fn(ClassicalKind::jordan_k,
                        static_cast<std::uint32_t>(
                            std::stoul(std::string(name.substr(7)))));
  if (name.starts_with("psi_"))
    return classical_fn(ClassicalKind::psi_k,
                        static_cast<std::uint32_t>(
                            std::stoul(std::string(name.substr(4)))));
  throw ParameterError("unknown function name: " + std::string(name));
}

}  // namespace moebius
