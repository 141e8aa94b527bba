#include "hforge/special_values.hpp"

#include <string>

#include "hforge/errors.hpp"

namespace hforge::special {
namespace {

void require_nonneg(std::int64_t v, const char* what) {
  if (v < 0) throw DomainError(std::string(what) + " must be nonnegative, got " + std::to_string(v));
}

void require_oriented(std::int64_t a, std::int64_t b) {
  require_nonneg(b, "psi difference lower shift");
  if (a < b) {
    throw DomainError("psi difference needs a >= b, got a=" + std::to_string(a) + ", b=" + std::to_string(b));
  }
}

Rational direct_harmonic(std::int64_t n, std::int64_t order) {
  Rational acc;
  for (std::int64_t k = 1; k <= n; ++k) acc += Rational(k).pow(order).inverse();
  return acc;
}

RatFunc build_binom_shift(std::int64_t a, std::int64_t k) {
  Poly p(Rational(1));
  for (std::int64_t j = 1; j <= k; ++j) {
    p = p * Poly::linear(Rational(a - k + j));
    p *= Rational(1, j);
  }
  return RatFunc(std::move(p));
}

// sum_{j=b}^{a-1} sign/(s+j)^power with the numerator assembled from prefix and
// suffix products, so no gcd is needed: the factors are distinct.
RatFunc build_reciprocal_sum(std::int64_t a, std::int64_t b, std::uint32_t power, const Rational& sign) {
  if (a == b) return {};
  const auto count = static_cast<std::size_t>(a - b);
  std::vector<Poly> factor(count);
  for (std::size_t i = 0; i < count; ++i) {
    factor[i] = Poly::linear(Rational(b + static_cast<std::int64_t>(i))).pow(power);
  }
  std::vector<Poly> prefix(count + 1, Poly(Rational(1)));
  std::vector<Poly> suffix(count + 1, Poly(Rational(1)));
  for (std::size_t i = 0; i < count; ++i) prefix[i + 1] = prefix[i] * factor[i];
  for (std::size_t i = count; i-- > 0;) suffix[i] = suffix[i + 1] * factor[i];
  Poly num;
  for (std::size_t i = 0; i < count; ++i) num += prefix[i] * suffix[i + 1];
  return RatFunc::normalize(num * sign, prefix[count]);
}

}  // namespace

HarmonicCache::HarmonicCache() : h1_{Rational()}, h2_{Rational()} {}

std::int64_t HarmonicCache::high_water_mark() const {
  std::shared_lock lock(mutex_);
  return static_cast<std::int64_t>(h1_.size()) - 1;
}

void HarmonicCache::extend_to(std::int64_t n) const {
  std::unique_lock lock(mutex_);
  while (static_cast<std::int64_t>(h1_.size()) <= n) {
    const auto k = static_cast<std::int64_t>(h1_.size());
    h1_.push_back(h1_.back() + Rational(1, k));
    h2_.push_back(h2_.back() + Rational(1, k * k));
  }
}

Rational HarmonicCache::get(std::int64_t n, int order) const {
  {
    std::shared_lock lock(mutex_);
    if (n < static_cast<std::int64_t>(h1_.size())) return order == 1 ? h1_[n] : h2_[n];
  }
  extend_to(n);
  std::shared_lock lock(mutex_);
  return order == 1 ? h1_[n] : h2_[n];
}

const SpecialValues& SpecialValues::shared() {
  static const SpecialValues instance(true);
  return instance;
}

Rational SpecialValues::harmonic(std::int64_t n) const { return harmonic_gen(n, 1); }

Rational SpecialValues::harmonic_gen(std::int64_t n, std::int64_t order) const {
  require_nonneg(n, "harmonic index");
  if (order < 1) throw DomainError("harmonic order must be >= 1, got " + std::to_string(order));
  if (memoize_ && order <= 2) return harmonic_.get(n, static_cast<int>(order));
  return direct_harmonic(n, order);
}

Rational SpecialValues::binom_int(std::int64_t n, std::int64_t k) const {
  require_nonneg(n, "binomial upper index");
  if (k < 0 || k > n) return {};
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(mpq_class(r));
}

template <typename Build>
RatFunc SpecialValues::cached(std::map<Key, RatFunc>& table, Key key, Build build) const {
  if (!memoize_) return build();
  {
    std::shared_lock lock(table_mutex_);
    if (auto it = table.find(key); it != table.end()) return it->second;
  }
  RatFunc value = build();
  std::unique_lock lock(table_mutex_);
  return table.try_emplace(key, std::move(value)).first->second;
}

RatFunc SpecialValues::binom_shift(std::int64_t a, std::int64_t k) const {
  require_nonneg(k, "shifted binomial lower index");
  return cached(binom_shift_, {a, k}, [&] { return build_binom_shift(a, k); });
}

RatFunc SpecialValues::psi_diff(std::int64_t a, std::int64_t b) const {
  require_oriented(a, b);
  return cached(psi_diff_, {a, b}, [&] { return build_reciprocal_sum(a, b, 1, Rational(1)); });
}

RatFunc SpecialValues::psi1_diff(std::int64_t a, std::int64_t b) const {
  require_oriented(a, b);
  return cached(psi1_diff_, {a, b}, [&] { return build_reciprocal_sum(a, b, 2, Rational(-1)); });
}

Rational harmonic(std::int64_t n) { return SpecialValues::shared().harmonic(n); }
Rational harmonic_gen(std::int64_t n, std::int64_t order) { return SpecialValues::shared().harmonic_gen(n, order); }
Rational binom_int(std::int64_t n, std::int64_t k) { return SpecialValues::shared().binom_int(n, k); }
RatFunc binom_shift(std::int64_t a, std::int64_t k) { return SpecialValues::shared().binom_shift(a, k); }
RatFunc psi_diff(std::int64_t a, std::int64_t b) { return SpecialValues::shared().psi_diff(a, b); }
RatFunc psi1_diff(std::int64_t a, std::int64_t b) { return SpecialValues::shared().psi1_diff(a, b); }

Rational binom_neg3half(std::int64_t n) {
  require_nonneg(n, "index");
  const Rational sign = (n % 2 == 0) ? Rational(1) : Rational(-1);
  return sign * Rational(2 * n + 1) / Rational(4).pow(n) * binom_int(2 * n, n);
}

}  // namespace hforge::special
