#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hforge/poly.hpp"
#include "hforge/rational.hpp"

namespace hforge {

/// Sparse polynomial in (x, s) over the rationals.
///
/// Terms are kept sorted in descending lex order with x > s, so terms().front()
/// is the leading term; no stored coefficient is zero.
class BiPoly {
 public:
  struct Term {
    std::uint32_t deg_x = 0;
    std::uint32_t deg_s = 0;
    Rational coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  BiPoly() = default;
  BiPoly(const Rational& constant);  // NOLINT(implicit)
  /// Embeds a polynomial in s (x-degree 0).
  explicit BiPoly(const Poly& in_s);

  static BiPoly monomial(const Rational& coeff, std::uint32_t deg_x, std::uint32_t deg_s);
  static BiPoly x() { return monomial(Rational(1), 1, 0); }
  static BiPoly s() { return monomial(Rational(1), 0, 1); }
  /// Builds from unsorted terms, merging duplicates and dropping zeros.
  static BiPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  /// -1 for zero.
  int degree_x() const;
  int degree_s() const;
  const Term& leading_term() const { return terms_.front(); }

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& rhs);
  BiPoly& operator-=(const BiPoly& rhs);
  BiPoly& operator*=(const Rational& c);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const Rational& c) { return a *= c; }
  friend bool operator==(const BiPoly& a, const BiPoly& b) = default;

  BiPoly pow(std::uint32_t exponent) const;
  /// Multiplies by x^dx s^ds.
  BiPoly shifted(std::uint32_t dx, std::uint32_t ds) const;
  /// Divides by x^dx s^ds; every term must have at least those degrees.
  BiPoly unshifted(std::uint32_t dx, std::uint32_t ds) const;
  /// Smallest x- and s-degree over all terms (the common monomial factor).
  std::pair<std::uint32_t, std::uint32_t> min_degrees() const;

  BiPoly derivative_s() const;
  /// Replaces x by a rational constant; the result has x-degree <= 0.
  BiPoly substitute_x(const Rational& value) const;
  BiPoly substitute_s(const Rational& value) const;
  Rational eval(const Rational& s0, const Rational& x0) const;

  /// q with *this == q * divisor, or nullopt when divisor does not divide exactly.
  /// Throws DivisionByZero for a zero divisor.
  std::optional<BiPoly> divide_exact(const BiPoly& divisor) const;

  /// The s-polynomial when the x-degree is <= 0.
  std::optional<Poly> to_poly_s() const;

  /// Descending lex order, e.g. "x^2*s + 3/2*x - s^2 + 1".
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

}  // namespace hforge
