#include "hforge/bifrac.hpp"

#include <limits>

#include "hforge/errors.hpp"

namespace hforge {
namespace {

// Cancels a common factor of p (a numerator) and q (a denominator) when q
// divides p exactly. Only attempted for non-constant q.
void cancel_if_divides(BiPoly& p, BiPoly& q) {
  if (q.is_constant() || p.is_zero()) return;
  if (auto quot = p.divide_exact(q)) {
    p = std::move(*quot);
    q = BiPoly(Rational(1));
  }
}

}  // namespace

BiFrac::BiFrac(const RatFunc& f) : num_(f.num()), den_(f.den()) {}

BiFrac::BiFrac(BiPoly num, BiPoly den, int /*tidy*/) : num_(std::move(num)), den_(std::move(den)) {
  tidy();
}

BiFrac BiFrac::make(BiPoly num, BiPoly den) {
  if (den.is_zero()) throw DivisionByZero("fraction with zero denominator");
  return BiFrac(std::move(num), std::move(den), 0);
}

void BiFrac::tidy() {
  if (num_.is_zero()) {
    den_ = BiPoly(Rational(1));
    return;
  }
  auto [nx, ns] = num_.min_degrees();
  auto [dx, ds] = den_.min_degrees();
  const std::uint32_t cx = std::min(nx, dx);
  const std::uint32_t cs = std::min(ns, ds);
  if (cx > 0 || cs > 0) {
    num_ = num_.unshifted(cx, cs);
    den_ = den_.unshifted(cx, cs);
  }
  if (den_.is_constant()) {
    if (!den_.is_one()) {
      num_ *= den_.leading_term().coeff.inverse();
      den_ = BiPoly(Rational(1));
    }
    return;
  }
  const Rational lead = den_.leading_term().coeff;
  if (!lead.is_one()) {
    const Rational inv = lead.inverse();
    num_ *= inv;
    den_ *= inv;
  }
  if (den_.size() <= num_.size() * 4 + 4) {
    if (auto quot = num_.divide_exact(den_)) {
      num_ = std::move(*quot);
      den_ = BiPoly(Rational(1));
    }
  }
}

BiFrac BiFrac::operator-() const {
  BiFrac r = *this;
  r.num_ = -r.num_;
  return r;
}

BiFrac operator+(const BiFrac& a, const BiFrac& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return BiFrac(a.num_ + b.num_, a.den_, 0);
  if (a.den_.is_one()) return BiFrac(a.num_ * b.den_ + b.num_, b.den_, 0);
  if (b.den_.is_one()) return BiFrac(a.num_ + b.num_ * a.den_, a.den_, 0);
  // One denominator dividing the other keeps the sum's denominator from growing.
  if (a.den_.size() <= b.den_.size()) {
    if (auto q = b.den_.divide_exact(a.den_)) return BiFrac(a.num_ * *q + b.num_, b.den_, 0);
  }
  if (auto q = a.den_.divide_exact(b.den_)) return BiFrac(a.num_ + b.num_ * *q, a.den_, 0);
  if (b.den_.size() < a.den_.size()) {
    if (auto q = b.den_.divide_exact(a.den_)) return BiFrac(a.num_ * *q + b.num_, b.den_, 0);
  }
  return BiFrac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, 0);
}

BiFrac operator-(const BiFrac& a, const BiFrac& b) { return a + (-b); }

BiFrac operator*(const BiFrac& a, const BiFrac& b) {
  if (a.is_zero() || b.is_zero()) return {};
  BiPoly na = a.num_;
  BiPoly nb = b.num_;
  BiPoly da = a.den_;
  BiPoly db = b.den_;
  cancel_if_divides(na, db);
  cancel_if_divides(nb, da);
  if (na.is_one() && da.is_one()) return BiFrac(std::move(nb), std::move(db), 0);
  if (nb.is_one() && db.is_one()) return BiFrac(std::move(na), std::move(da), 0);
  return BiFrac(na * nb, da * db, 0);
}

BiFrac operator/(const BiFrac& a, const BiFrac& b) {
  if (b.is_zero()) throw DivisionByZero("fraction division by zero");
  return a * BiFrac(b.den_, b.num_, 0);
}

bool bifrac_eq(const BiFrac& a, const BiFrac& b) {
  if (a.den() == b.den()) return a.num() == b.num();
  return a.num() * b.den() == b.num() * a.den();
}

bool operator==(const BiFrac& a, const BiFrac& b) { return bifrac_eq(a, b); }

BiPoly cross_difference(const BiFrac& a, const BiFrac& b) { return a.num() * b.den() - b.num() * a.den(); }

BiFrac BiFrac::pow(std::int64_t exponent) const {
  if (exponent == std::numeric_limits<std::int64_t>::min()) throw OverflowError("exponent out of range");
  if (exponent < 0) {
    if (is_zero()) throw DivisionByZero("zero raised to a negative power");
    return BiFrac(den_, num_, 0).pow(-exponent);
  }
  if (exponent > std::numeric_limits<std::uint32_t>::max()) throw OverflowError("exponent out of range");
  const auto e = static_cast<std::uint32_t>(exponent);
  return BiFrac(num_.pow(e), den_.pow(e), 0);
}

BiFrac BiFrac::derivative_s() const {
  const BiPoly dden = den_.derivative_s();
  if (dden.is_zero()) return BiFrac(num_.derivative_s(), den_, 0);
  return BiFrac(num_.derivative_s() * den_ - num_ * dden, den_ * den_, 0);
}

namespace {

// Removes every common factor (var - value) of num and den, then substitutes.
template <typename Subst>
BiFrac specialize(BiPoly num, BiPoly den, const BiPoly& linear, const Rational& value, Subst subst) {
  BiPoly n0 = subst(num);
  BiPoly d0 = subst(den);
  while (d0.is_zero()) {
    if (!n0.is_zero()) throw PoleError(value);
    auto qn = num.divide_exact(linear);
    auto qd = den.divide_exact(linear);
    if (!qn || !qd) throw Error("internal: vanishing polynomial not divisible by its linear factor");
    num = std::move(*qn);
    den = std::move(*qd);
    n0 = subst(num);
    d0 = subst(den);
  }
  return BiFrac::make(std::move(n0), std::move(d0));
}

}  // namespace

BiFrac BiFrac::substitute_x(const Rational& value) const {
  const BiPoly linear = BiPoly::x() - BiPoly(value);
  return specialize(num_, den_, linear, value, [&](const BiPoly& p) { return p.substitute_x(value); });
}

BiFrac BiFrac::substitute_s(const Rational& value) const {
  const BiPoly linear = BiPoly::s() - BiPoly(value);
  return specialize(num_, den_, linear, value, [&](const BiPoly& p) { return p.substitute_s(value); });
}

Rational BiFrac::eval(const Rational& s0, const Rational& x0) const {
  const Rational d = den_.eval(s0, x0);
  if (d.is_zero()) throw PoleError(s0);
  return num_.eval(s0, x0) / d;
}

std::optional<BiPoly> BiFrac::as_polynomial() const {
  if (den_.is_one()) return num_;
  return num_.divide_exact(den_);
}

std::optional<RatFunc> BiFrac::as_ratfunc() const {
  auto n = num_.to_poly_s();
  auto d = den_.to_poly_s();
  if (!n || !d) return std::nullopt;
  return RatFunc::normalize(std::move(*n), std::move(*d));
}

std::optional<Rational> BiFrac::as_rational() const {
  if (!num_.is_constant() || !den_.is_constant()) return std::nullopt;
  const Rational n = num_.is_zero() ? Rational() : num_.leading_term().coeff;
  return n / den_.leading_term().coeff;
}

std::string BiFrac::to_string() const {
  if (auto q = as_rational()) return q->to_string();
  if (auto f = as_ratfunc()) return f->to_string();
  std::string n = num_.to_string();
  if (den_.is_one()) return n;
  if (num_.size() > 1) n = "(" + n + ")";
  std::string d = den_.to_string();
  if (den_.size() > 1 || !den_.leading_term().coeff.is_one()) d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace hforge
