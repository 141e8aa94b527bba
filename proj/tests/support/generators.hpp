#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hforge/bifrac.hpp"
#include "hforge/bipoly.hpp"
#include "hforge/poly.hpp"
#include "hforge/ratfunc.hpp"
#include "hforge/rational.hpp"

namespace hforge::testing {

// Small random operands. Sizes are kept low so 1000+ cases run in well under
// a second even for the fraction types.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  Rational rational(std::int64_t mag = 12) {
    if (coin(0.1)) return Rational(0);
    return Rational(integer(-mag, mag), integer(1, mag));
  }
  Rational nonzero_rational(std::int64_t mag = 12) {
    for (;;) {
      Rational q = rational(mag);
      if (!q.is_zero()) return q;
    }
  }

  Poly poly(int max_degree = 3) {
    const int d = static_cast<int>(integer(-1, max_degree));
    std::vector<Rational> c;
    for (int i = 0; i <= d; ++i) c.push_back(rational(6));
    return Poly(std::move(c));
  }
  Poly nonzero_poly(int max_degree = 3) {
    for (;;) {
      Poly p = poly(max_degree);
      if (!p.is_zero()) return p;
    }
  }
  // Products of linear factors (s + j) with small integer j, so gcds are nontrivial.
  Poly factored_poly(int max_factors = 3) {
    Poly p = Poly(nonzero_rational(5));
    const auto count = integer(0, max_factors);
    for (std::int64_t i = 0; i < count; ++i) p = p * Poly::linear(Rational(integer(-3, 3)));
    return p;
  }

  RatFunc ratfunc(int max_degree = 2) {
    Poly num = coin() ? poly(max_degree) : factored_poly();
    Poly den = coin() ? nonzero_poly(max_degree) : factored_poly();
    return RatFunc::normalize(std::move(num), std::move(den));
  }
  RatFunc nonzero_ratfunc(int max_degree = 2) {
    for (;;) {
      RatFunc f = ratfunc(max_degree);
      if (!f.is_zero()) return f;
    }
  }

  BiPoly bipoly(std::uint32_t max_deg = 2, int max_terms = 4) {
    std::vector<BiPoly::Term> terms;
    const auto count = integer(0, max_terms);
    for (std::int64_t i = 0; i < count; ++i) {
      terms.push_back({static_cast<std::uint32_t>(integer(0, max_deg)),
                       static_cast<std::uint32_t>(integer(0, max_deg)), rational(6)});
    }
    return BiPoly::from_terms(std::move(terms));
  }
  BiPoly nonzero_bipoly(std::uint32_t max_deg = 2, int max_terms = 4) {
    for (;;) {
      BiPoly p = bipoly(max_deg, max_terms);
      if (!p.is_zero()) return p;
    }
  }

  BiFrac bifrac() { return BiFrac::make(bipoly(), nonzero_bipoly()); }
  BiFrac nonzero_bifrac() { return BiFrac::make(nonzero_bipoly(), nonzero_bipoly()); }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace hforge::testing
