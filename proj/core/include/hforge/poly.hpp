#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "hforge/rational.hpp"

namespace hforge {

/// Dense univariate polynomial in s over the rationals.
///
/// coefficients()[i] is the coefficient of s^i. The zero polynomial is the
/// empty coefficient vector and has degree -1; every other polynomial has a
/// nonzero leading coefficient.
class Poly {
 public:
  Poly() = default;
  Poly(Rational constant);  // NOLINT(implicit)
  Poly(std::initializer_list<Rational> coeffs);
  explicit Poly(std::vector<Rational> coeffs);

  static Poly monomial(Rational coeff, std::size_t degree);
  /// The polynomial s + shift.
  static Poly linear(const Rational& shift);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
  /// Coefficient of s^i (zero beyond the degree).
  Rational coeff(std::size_t i) const;
  /// Leading coefficient; zero for the zero polynomial.
  Rational leading() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

  friend bool operator==(const Poly& a, const Poly& b) = default;

  Poly pow(std::uint32_t exponent) const;
  /// Scaled so the leading coefficient is 1; zero stays zero.
  Poly monic() const;
  Poly derivative() const;
  Rational eval(const Rational& at) const;

  /// Euclidean division: a = q*b + r with deg r < deg b. Throws DivisionByZero for b = 0.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

  /// e.g. "s^2 - 1", "1/2*s + 3", "0".
  std::string to_string(std::string_view var = "s") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic gcd; gcd(p, 0) = monic(p) and gcd(0, 0) = 0 (the zero polynomial).
Poly poly_gcd(const Poly& p, const Poly& q);

}  // namespace hforge
