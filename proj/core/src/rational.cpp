#include "hforge/rational.hpp"

#include <limits>
#include <utility>

#include "hforge/errors.hpp"

namespace hforge {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DivisionByZero();
  value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) throw DivisionByZero();
  value_.canonicalize();
}

Rational Rational::from_strings(std::string_view num, std::string_view den) {
  Rational r;
  mpz_class n;
  mpz_class d;
  if (n.set_str(std::string(num), 10) != 0 || d.set_str(std::string(den), 10) != 0) {
    throw DomainError("malformed integer literal");
  }
  if (d == 0) throw DivisionByZero();
  r.value_ = mpq_class(n, d);
  r.value_.canonicalize();
  return r;
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return from_strings(text);
  return from_strings(text.substr(0, slash), text.substr(slash + 1));
}

std::int64_t Rational::to_int64() const {
  if (!is_integer()) throw DomainError("value " + to_string() + " is not an integer");
  const mpz_class& n = value_.get_num();
  if (!n.fits_slong_p()) throw OverflowError("integer " + to_string() + " exceeds machine range");
  return n.get_si();
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DivisionByZero();
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Rational r;
  mpq_inv(r.value_.get_mpq_t(), value_.get_mpq_t());
  return r;
}

Rational Rational::abs() const {
  Rational r;
  r.value_ = ::abs(value_);
  return r;
}

Rational Rational::pow(std::int64_t exponent) const {
  if (exponent == std::numeric_limits<std::int64_t>::min()) {
    throw OverflowError("exponent out of range");
  }
  if (exponent < 0) {
    if (is_zero()) throw DivisionByZero("zero raised to a negative power");
    return inverse().pow(-exponent);
  }
  Rational r;
  const auto e = static_cast<unsigned long>(exponent);
  mpz_pow_ui(r.value_.get_num_mpz_t(), value_.get_num_mpz_t(), e);
  mpz_pow_ui(r.value_.get_den_mpz_t(), value_.get_den_mpz_t(), e);
  return r;
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

}  // namespace hforge
