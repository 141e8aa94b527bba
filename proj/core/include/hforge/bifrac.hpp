#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "hforge/bipoly.hpp"
#include "hforge/ratfunc.hpp"
#include "hforge/rational.hpp"

namespace hforge {

/// Quotient num/den of polynomials in (s, x); the value domain of identity sides.
///
/// Not reduced by a bivariate gcd. After every operation the common monomial
/// factor is stripped, the denominator is scaled to leading coefficient 1, and
/// exact-division cancellation is tried where it is cheap (equal or dividing
/// denominators, numerator/denominator pairs in products). Equality is by
/// cross-multiplication.
class BiFrac {
 public:
  BiFrac() : den_(Rational(1)) {}
  BiFrac(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT(implicit)
  BiFrac(const RatFunc& f);                                  // NOLINT(implicit)
  explicit BiFrac(BiPoly polynomial) : num_(std::move(polynomial)), den_(Rational(1)) {}

  /// Throws DivisionByZero if den = 0.
  static BiFrac make(BiPoly num, BiPoly den);
  static BiFrac x() { return BiFrac(BiPoly::x()); }
  static BiFrac s() { return BiFrac(BiPoly::s()); }

  const BiPoly& num() const { return num_; }
  const BiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  /// True when neither num nor den mentions x.
  bool is_free_of_x() const { return num_.degree_x() <= 0 && den_.degree_x() <= 0; }
  bool is_free_of_s() const { return num_.degree_s() <= 0 && den_.degree_s() <= 0; }

  BiFrac operator-() const;
  friend BiFrac operator+(const BiFrac& a, const BiFrac& b);
  friend BiFrac operator-(const BiFrac& a, const BiFrac& b);
  friend BiFrac operator*(const BiFrac& a, const BiFrac& b);
  friend BiFrac operator/(const BiFrac& a, const BiFrac& b);
  BiFrac& operator+=(const BiFrac& rhs) { return *this = *this + rhs; }
  BiFrac& operator-=(const BiFrac& rhs) { return *this = *this - rhs; }
  BiFrac& operator*=(const BiFrac& rhs) { return *this = *this * rhs; }
  BiFrac& operator/=(const BiFrac& rhs) { return *this = *this / rhs; }

  /// Value equality (cross-multiplication).
  friend bool operator==(const BiFrac& a, const BiFrac& b);

  /// Negative exponents require a nonzero base.
  BiFrac pow(std::int64_t exponent) const;
  /// Formal d/ds by the quotient rule.
  BiFrac derivative_s() const;

  /// Specializes x (resp. s) to a constant. Common factors (x - value) are
  /// cancelled first, so removable singularities get their limiting value;
  /// a genuine pole throws PoleError.
  BiFrac substitute_x(const Rational& value) const;
  BiFrac substitute_s(const Rational& value) const;
  /// Exact value at (s0, x0); throws PoleError at a pole.
  Rational eval(const Rational& s0, const Rational& x0) const;

  /// num/den as a polynomial when den divides num exactly.
  std::optional<BiPoly> as_polynomial() const;
  /// Reduced rational function in s when x does not occur.
  std::optional<RatFunc> as_ratfunc() const;
  std::optional<Rational> as_rational() const;

  std::string to_string() const;

 private:
  BiFrac(BiPoly num, BiPoly den, int /*tidy*/);
  void tidy();
  BiPoly num_;
  BiPoly den_;
};

/// a.num * b.den == b.num * a.den.
bool bifrac_eq(const BiFrac& a, const BiFrac& b);

/// a.num * b.den - b.num * a.den; zero exactly when the fractions are equal.
BiPoly cross_difference(const BiFrac& a, const BiFrac& b);

}  // namespace hforge
