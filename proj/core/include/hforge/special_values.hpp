#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "hforge/ratfunc.hpp"
#include "hforge/rational.hpp"

namespace hforge::special {

/// Append-only table of H_n and H_n^(2).
///
/// Reads take a shared lock; growing the table is serialized. Entry n of each
/// table is the exact partial sum, with H_0 = 0.
class HarmonicCache {
 public:
  HarmonicCache();
  /// H_n^(order) for order in {1, 2}.
  Rational get(std::int64_t n, int order) const;
  std::int64_t high_water_mark() const;

 private:
  void extend_to(std::int64_t n) const;
  mutable std::shared_mutex mutex_;
  mutable std::vector<Rational> h1_;
  mutable std::vector<Rational> h2_;
};

/// Exact constructors for harmonic numbers, binomials and digamma differences.
///
/// With memoize = false nothing is cached and every value is recomputed from
/// its defining sum or product.
class SpecialValues {
 public:
  explicit SpecialValues(bool memoize = true) : memoize_(memoize) {}
  SpecialValues(const SpecialValues&) = delete;
  SpecialValues& operator=(const SpecialValues&) = delete;

  /// Process-wide memoizing instance.
  static const SpecialValues& shared();

  bool memoize() const { return memoize_; }

  /// sum_{k=1}^{n} 1/k; requires n >= 0.
  Rational harmonic(std::int64_t n) const;
  /// sum_{k=1}^{n} 1/k^order; requires n >= 0, order >= 1.
  Rational harmonic_gen(std::int64_t n, std::int64_t order) const;
  /// binom(n, k) for n >= 0; zero when k < 0 or k > n.
  Rational binom_int(std::int64_t n, std::int64_t k) const;
  /// binom(s + a, k) = prod_{j=1}^{k} (s + a - k + j) / j, a degree-k polynomial in s.
  RatFunc binom_shift(std::int64_t a, std::int64_t k) const;
  /// psi(s + a) - psi(s + b) = sum_{j=b}^{a-1} 1/(s + j); requires a >= b >= 0.
  RatFunc psi_diff(std::int64_t a, std::int64_t b) const;
  /// psi'(s + a) - psi'(s + b) = -sum_{j=b}^{a-1} 1/(s + j)^2; requires a >= b >= 0.
  RatFunc psi1_diff(std::int64_t a, std::int64_t b) const;

 private:
  using Key = std::pair<std::int64_t, std::int64_t>;
  template <typename Build>
  RatFunc cached(std::map<Key, RatFunc>& table, Key key, Build build) const;

  bool memoize_;
  HarmonicCache harmonic_;
  mutable std::shared_mutex table_mutex_;
  mutable std::map<Key, RatFunc> binom_shift_;
  mutable std::map<Key, RatFunc> psi_diff_;
  mutable std::map<Key, RatFunc> psi1_diff_;
};

Rational harmonic(std::int64_t n);
Rational harmonic_gen(std::int64_t n, std::int64_t order);
Rational binom_int(std::int64_t n, std::int64_t k);
RatFunc binom_shift(std::int64_t a, std::int64_t k);
RatFunc psi_diff(std::int64_t a, std::int64_t b);
RatFunc psi1_diff(std::int64_t a, std::int64_t b);

/// binom(-3/2, n) = (-1)^n (2n+1)/4^n binom(2n, n), from the closed form.
Rational binom_neg3half(std::int64_t n);

}  // namespace hforge::special
