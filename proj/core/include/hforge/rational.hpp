#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace hforge {

/// Exact fraction num/den with den > 0 and gcd(|num|, den) = 1; zero is 0/1.
///
/// Backed by GMP's mpq_t, which keeps the canonical form after every
/// operation. All operations that could divide by zero throw DivisionByZero.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : value_(static_cast<long>(value)) {}  // NOLINT(implicit)
  Rational(std::int64_t num, std::int64_t den);
  /// Takes a GMP rational; canonicalizes it (throws DivisionByZero on a zero denominator).
  explicit Rational(mpq_class value);

  /// Builds from decimal strings of the numerator and denominator.
  static Rational from_strings(std::string_view num, std::string_view den = "1");
  /// Accepts "p", "-p", "p/q", "-p/q" (no whitespace).
  static Rational parse(std::string_view text);

  const mpz_class& numerator() const { return value_.get_num(); }
  const mpz_class& denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// Exact value when integral and within int64; throws OverflowError / DomainError otherwise.
  std::int64_t to_int64() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  /// Integer power by repeated squaring; negative exponents invert (a must be nonzero).
  Rational pow(std::int64_t exponent) const;
  Rational inverse() const;
  Rational abs() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace hforge
