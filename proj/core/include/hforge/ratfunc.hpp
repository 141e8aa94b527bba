#pragma once

#include <cstdint>
#include <string>

#include "hforge/errors.hpp"
#include "hforge/poly.hpp"
#include "hforge/rational.hpp"

namespace hforge {

/// Raised when a rational function is evaluated at a root of its denominator.
class PoleError : public Error {
 public:
  explicit PoleError(Rational point);
  const Rational& point() const { return point_; }

 private:
  Rational point_;
};

/// Reduced quotient num/den of polynomials in s.
///
/// The denominator is monic and coprime to the numerator, so two RatFuncs
/// are equal exactly when their representations are.
class RatFunc {
 public:
  RatFunc() : den_(Rational(1)) {}
  RatFunc(Rational constant) : num_(std::move(constant)), den_(Rational(1)) {}  // NOLINT(implicit)
  RatFunc(Poly polynomial) : num_(std::move(polynomial)), den_(Rational(1)) {}  // NOLINT(implicit)

  /// Reduces num/den to the canonical representative. Throws DivisionByZero if den = 0.
  static RatFunc normalize(Poly num, Poly den);
  /// The variable s.
  static RatFunc s();

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return den_.is_one() && num_.is_constant(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& rhs) { return *this = *this + rhs; }
  RatFunc& operator-=(const RatFunc& rhs) { return *this = *this - rhs; }
  RatFunc& operator*=(const RatFunc& rhs) { return *this = *this * rhs; }
  RatFunc& operator/=(const RatFunc& rhs) { return *this = *this / rhs; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) = default;

  RatFunc pow(std::int64_t exponent) const;
  RatFunc derivative() const;
  /// Exact value at s = at; throws PoleError when at is a root of den.
  Rational eval(const Rational& at) const;

  std::string to_string() const;

 private:
  RatFunc(Poly num, Poly den, int /*already_reduced*/) : num_(std::move(num)), den_(std::move(den)) {}
  Poly num_;
  Poly den_;
};

inline RatFunc ratfunc_normalize(Poly num, Poly den) {
  return RatFunc::normalize(std::move(num), std::move(den));
}

inline Rational eval_ratfunc(const RatFunc& f, const Rational& s0) { return f.eval(s0); }

}  // namespace hforge
