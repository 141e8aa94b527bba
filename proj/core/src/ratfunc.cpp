#include "hforge/ratfunc.hpp"

#include <algorithm>
#include <limits>

namespace hforge {

PoleError::PoleError(Rational point)
    : Error("evaluation at a pole: s = " + point.to_string()), point_(std::move(point)) {}

RatFunc RatFunc::normalize(Poly num, Poly den) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num.is_zero()) return {};
  if (!den.is_constant()) {
    const Poly g = poly_gcd(num, den);
    if (!g.is_one()) {
      num = Poly::divmod(num, g).first;
      den = Poly::divmod(den, g).first;
    }
  }
  const Rational lead = den.leading();
  if (!lead.is_one()) {
    const Rational inv = lead.inverse();
    num *= inv;
    den *= inv;
  }
  return RatFunc(std::move(num), std::move(den), 0);
}

RatFunc RatFunc::s() { return RatFunc(Poly{Rational(0), Rational(1)}); }

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, 0); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (a.den_.is_one()) return RatFunc(a.num_ + b.num_);
    return RatFunc::normalize(a.num_ + b.num_, a.den_);
  }
  if (a.den_.is_one()) return RatFunc(a.num_ * b.den_ + b.num_, b.den_, 0);
  if (b.den_.is_one()) return RatFunc(a.num_ + b.num_ * a.den_, a.den_, 0);
  // With g = gcd(da, db): a/b sum = (na*(db/g) + nb*(da/g)) / (da*db/g); only g can
  // still share factors with the new numerator.
  const Poly g = poly_gcd(a.den_, b.den_);
  if (g.is_one()) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, 0);
  }
  const Poly da = Poly::divmod(a.den_, g).first;
  const Poly db = Poly::divmod(b.den_, g).first;
  Poly num = a.num_ * db + b.num_ * da;
  Poly den = da * b.den_;
  return RatFunc::normalize(std::move(num), std::move(den));
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ * b.num_);
  // Cross-cancel: gcd(na, db) and gcd(nb, da); the factors are coprime afterwards.
  Poly na = a.num_;
  Poly nb = b.num_;
  Poly da = a.den_;
  Poly db = b.den_;
  if (!db.is_one()) {
    const Poly g = poly_gcd(na, db);
    if (!g.is_one()) {
      na = Poly::divmod(na, g).first;
      db = Poly::divmod(db, g).first;
    }
  }
  if (!da.is_one()) {
    const Poly g = poly_gcd(nb, da);
    if (!g.is_one()) {
      nb = Poly::divmod(nb, g).first;
      da = Poly::divmod(da, g).first;
    }
  }
  Poly num = na * nb;
  Poly den = da * db;
  const Rational lead = den.leading();
  if (!lead.is_one()) {
    const Rational inv = lead.inverse();
    num *= inv;
    den *= inv;
  }
  return RatFunc(std::move(num), std::move(den), 0);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw DivisionByZero("rational function division by zero");
  return a * RatFunc::normalize(b.den_, b.num_);
}

RatFunc RatFunc::pow(std::int64_t exponent) const {
  if (exponent == std::numeric_limits<std::int64_t>::min()) throw OverflowError("exponent out of range");
  if (exponent < 0) {
    if (is_zero()) throw DivisionByZero("zero raised to a negative power");
    return RatFunc::normalize(den_, num_).pow(-exponent);
  }
  if (exponent > std::numeric_limits<std::uint32_t>::max()) throw OverflowError("exponent out of range");
  const auto e = static_cast<std::uint32_t>(exponent);
  // Powers of coprime polynomials stay coprime and monic stays monic.
  return RatFunc(num_.pow(e), den_.pow(e), 0);
}

RatFunc RatFunc::derivative() const {
  if (den_.is_one()) return RatFunc(num_.derivative());
  return normalize(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Rational RatFunc::eval(const Rational& at) const {
  const Rational d = den_.eval(at);
  if (d.is_zero()) throw PoleError(at);
  return num_.eval(at) / d;
}

std::string RatFunc::to_string() const {
  if (den_.is_one()) return num_.to_string();
  std::string n = num_.to_string();
  if (num_.coefficients().size() > 1 &&
      std::count_if(num_.coefficients().begin(), num_.coefficients().end(),
                    [](const Rational& c) { return !c.is_zero(); }) > 1) {
    n = "(" + n + ")";
  }
  std::string d = den_.to_string();
  if (den_.degree() >= 1 &&
      std::count_if(den_.coefficients().begin(), den_.coefficients().end(),
                    [](const Rational& c) { return !c.is_zero(); }) > 1) {
    d = "(" + d + ")";
  }
  return n + "/" + d;
}

}  // namespace hforge
