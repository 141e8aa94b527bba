#include "hforge/poly.hpp"

#include <algorithm>
#include <sstream>

#include "hforge/errors.hpp"

namespace hforge {

Poly::Poly(Rational constant) {
  if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(Rational coeff, std::size_t degree) {
  Poly p;
  if (coeff.is_zero()) return p;
  p.coeffs_.resize(degree + 1);
  p.coeffs_[degree] = std::move(coeff);
  return p;
}

Poly Poly::linear(const Rational& shift) { return Poly{shift, Rational(1)}; }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(); }

Rational Poly::leading() const { return coeffs_.empty() ? Rational() : coeffs_.back(); }

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_constant()) return b * a.coeffs_[0];
  if (b.is_constant()) return a * b.coeffs_[0];
  std::vector<mpq_class> acc(a.coeffs_.size() + b.coeffs_.size() - 1);
  mpq_class tmp;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpq_mul(tmp.get_mpq_t(), a.coeffs_[i].raw().get_mpq_t(), b.coeffs_[j].raw().get_mpq_t());
      acc[i + j] += tmp;
    }
  }
  std::vector<Rational> out;
  out.reserve(acc.size());
  for (auto& q : acc) out.emplace_back(std::move(q));
  return Poly(std::move(out));
}

Poly Poly::pow(std::uint32_t exponent) const {
  Poly result(Rational(1));
  Poly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Poly Poly::monic() const {
  if (is_zero() || leading().is_one()) return *this;
  return *this * leading().inverse();
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out[i - 1] = coeffs_[i] * Rational(static_cast<std::int64_t>(i));
  }
  return Poly(std::move(out));
}

Rational Poly::eval(const Rational& at) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rational> rem = a.coeffs_;
  std::vector<Rational> quot(a.coeffs_.size() - b.coeffs_.size() + 1);
  const Rational inv_lead = b.leading().inverse();
  const std::size_t db = b.coeffs_.size() - 1;
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i].is_zero()) continue;
    const Rational q = rem[i] * inv_lead;
    const std::size_t shift = i - db;
    for (std::size_t j = 0; j <= db; ++j) rem[shift + j] -= q * b.coeffs_[j];
    quot[shift] = q;
  }
  rem.resize(db);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

std::string Poly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    const Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (!mag.is_one()) os << mag << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

Poly poly_gcd(const Poly& p, const Poly& q) {
  Poly a = p.monic();
  Poly b = q.monic();
  while (!b.is_zero()) {
    Poly r = Poly::divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a;
}

}  // namespace hforge
