#include "hforge/bipoly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "hforge/errors.hpp"

namespace hforge {
namespace {

using Key = std::uint64_t;

Key key_of(std::uint32_t dx, std::uint32_t ds) { return (static_cast<Key>(dx) << 32U) | ds; }
std::uint32_t key_x(Key k) { return static_cast<std::uint32_t>(k >> 32U); }
std::uint32_t key_s(Key k) { return static_cast<std::uint32_t>(k & 0xffffffffU); }

bool term_before(const BiPoly::Term& a, const BiPoly::Term& b) {
  return key_of(a.deg_x, a.deg_s) > key_of(b.deg_x, b.deg_s);
}

std::vector<Rational> powers(const Rational& base, std::uint32_t max_exp) {
  std::vector<Rational> out;
  out.reserve(max_exp + 1);
  out.emplace_back(1);
  for (std::uint32_t i = 1; i <= max_exp; ++i) out.push_back(out.back() * base);
  return out;
}

}  // namespace

BiPoly::BiPoly(const Rational& constant) {
  if (!constant.is_zero()) terms_.push_back({0, 0, constant});
}

BiPoly::BiPoly(const Poly& in_s) {
  const auto& c = in_s.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (!c[i].is_zero()) terms_.push_back({0, static_cast<std::uint32_t>(i), c[i]});
  }
}

BiPoly BiPoly::monomial(const Rational& coeff, std::uint32_t deg_x, std::uint32_t deg_s) {
  BiPoly p;
  if (!coeff.is_zero()) p.terms_.push_back({deg_x, deg_s, coeff});
  return p;
}

BiPoly BiPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_before);
  BiPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().deg_x == t.deg_x && p.terms_.back().deg_s == t.deg_s) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool BiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].deg_x == 0 && terms_[0].deg_s == 0);
}

bool BiPoly::is_one() const { return is_constant() && !terms_.empty() && terms_[0].coeff.is_one(); }

int BiPoly::degree_x() const { return terms_.empty() ? -1 : static_cast<int>(terms_.front().deg_x); }

int BiPoly::degree_s() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.deg_s));
  return d;
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

template <typename Combine>
std::vector<BiPoly::Term> merge(const std::vector<BiPoly::Term>& a, const std::vector<BiPoly::Term>& b,
                                Combine combine_b) {
  std::vector<BiPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && term_before(a[i], b[j]))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || term_before(b[j], a[i])) {
      out.push_back({b[j].deg_x, b[j].deg_s, combine_b(Rational(), b[j].coeff)});
      ++j;
    } else {
      Rational c = combine_b(a[i].coeff, b[j].coeff);
      if (!c.is_zero()) out.push_back({a[i].deg_x, a[i].deg_s, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
  if (rhs.terms_.empty()) return *this;
  if (terms_.empty()) return *this = rhs;
  terms_ = merge(terms_, rhs.terms_, [](const Rational& a, const Rational& b) { return a + b; });
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) {
  if (rhs.terms_.empty()) return *this;
  terms_ = merge(terms_, rhs.terms_, [](const Rational& a, const Rational& b) { return a - b; });
  return *this;
}

BiPoly& BiPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (c.is_one()) return *this;
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.terms_.size() == 1 && a.terms_.size() > 1) return b * a;
  if (a.terms_.size() == 1) {
    const auto& m = a.terms_[0];
    BiPoly r;
    r.terms_.reserve(b.terms_.size());
    for (const auto& t : b.terms_) r.terms_.push_back({t.deg_x + m.deg_x, t.deg_s + m.deg_s, t.coeff * m.coeff});
    return r;
  }
  // Dense accumulation over the bounding box of the product.
  const auto max_x = static_cast<std::size_t>(a.degree_x() + b.degree_x());
  const auto max_s = static_cast<std::size_t>(a.degree_s() + b.degree_s());
  const std::size_t stride = max_s + 1;
  std::vector<mpq_class> box((max_x + 1) * stride);
  std::vector<char> used(box.size(), 0);
  mpq_class tmp;
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      const std::size_t idx = (ta.deg_x + tb.deg_x) * stride + (ta.deg_s + tb.deg_s);
      mpq_mul(tmp.get_mpq_t(), ta.coeff.raw().get_mpq_t(), tb.coeff.raw().get_mpq_t());
      box[idx] += tmp;
      used[idx] = 1;
    }
  }
  BiPoly r;
  for (std::size_t idx = box.size(); idx-- > 0;) {
    if (!used[idx] || sgn(box[idx]) == 0) continue;
    r.terms_.push_back({static_cast<std::uint32_t>(idx / stride), static_cast<std::uint32_t>(idx % stride),
                        Rational(std::move(box[idx]))});
  }
  return r;
}

BiPoly BiPoly::pow(std::uint32_t exponent) const {
  BiPoly result(Rational(1));
  BiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

BiPoly BiPoly::shifted(std::uint32_t dx, std::uint32_t ds) const {
  BiPoly r = *this;
  for (auto& t : r.terms_) {
    t.deg_x += dx;
    t.deg_s += ds;
  }
  return r;
}

BiPoly BiPoly::unshifted(std::uint32_t dx, std::uint32_t ds) const {
  BiPoly r = *this;
  for (auto& t : r.terms_) {
    if (t.deg_x < dx || t.deg_s < ds) throw DomainError("monomial does not divide polynomial");
    t.deg_x -= dx;
    t.deg_s -= ds;
  }
  return r;
}

std::pair<std::uint32_t, std::uint32_t> BiPoly::min_degrees() const {
  if (terms_.empty()) return {0, 0};
  std::uint32_t mx = terms_.front().deg_x;
  std::uint32_t ms = terms_.front().deg_s;
  for (const auto& t : terms_) {
    mx = std::min(mx, t.deg_x);
    ms = std::min(ms, t.deg_s);
  }
  return {mx, ms};
}

BiPoly BiPoly::derivative_s() const {
  BiPoly r;
  for (const auto& t : terms_) {
    if (t.deg_s == 0) continue;
    r.terms_.push_back({t.deg_x, t.deg_s - 1, t.coeff * Rational(static_cast<std::int64_t>(t.deg_s))});
  }
  return r;
}

BiPoly BiPoly::substitute_x(const Rational& value) const {
  if (terms_.empty()) return {};
  const auto pw = powers(value, terms_.front().deg_x);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({0, t.deg_s, t.coeff * pw[t.deg_x]});
  return from_terms(std::move(out));
}

BiPoly BiPoly::substitute_s(const Rational& value) const {
  if (terms_.empty()) return {};
  const auto pw = powers(value, static_cast<std::uint32_t>(degree_s()));
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.deg_x, 0, t.coeff * pw[t.deg_s]});
  return from_terms(std::move(out));
}

Rational BiPoly::eval(const Rational& s0, const Rational& x0) const {
  if (terms_.empty()) return {};
  const auto px = powers(x0, terms_.front().deg_x);
  const auto ps = powers(s0, static_cast<std::uint32_t>(degree_s()));
  Rational acc;
  for (const auto& t : terms_) acc += t.coeff * px[t.deg_x] * ps[t.deg_s];
  return acc;
}

std::optional<BiPoly> BiPoly::divide_exact(const BiPoly& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (is_zero()) return BiPoly();
  if (divisor.is_constant()) return *this * divisor.terms_[0].coeff.inverse();
  const Term& lead = divisor.terms_.front();
  if (divisor.terms_.size() == 1) {
    auto [mx, ms] = min_degrees();
    if (mx < lead.deg_x || ms < lead.deg_s) return std::nullopt;
    return unshifted(lead.deg_x, lead.deg_s) * lead.coeff.inverse();
  }
  if (degree_x() < divisor.degree_x() || degree_s() < divisor.degree_s()) return std::nullopt;
  const Rational inv_lead = lead.coeff.inverse();
  std::map<Key, mpq_class, std::greater<>> rem;
  for (const auto& t : terms_) rem.emplace(key_of(t.deg_x, t.deg_s), t.coeff.raw());
  std::vector<Term> quotient;
  mpq_class tmp;
  // Single-divisor lex division: the remainder is zero iff the divisor divides,
  // so the first leading term not divisible by lead(divisor) settles it.
  while (!rem.empty()) {
    auto top = rem.begin();
    const Key k = top->first;
    if (key_x(k) < lead.deg_x || key_s(k) < lead.deg_s) return std::nullopt;
    const std::uint32_t qx = key_x(k) - lead.deg_x;
    const std::uint32_t qs = key_s(k) - lead.deg_s;
    const mpq_class q = top->second * inv_lead.raw();
    rem.erase(top);
    for (std::size_t i = 1; i < divisor.terms_.size(); ++i) {
      const Term& d = divisor.terms_[i];
      const Key dk = key_of(d.deg_x + qx, d.deg_s + qs);
      mpq_mul(tmp.get_mpq_t(), q.get_mpq_t(), d.coeff.raw().get_mpq_t());
      auto [it, inserted] = rem.try_emplace(dk);
      it->second -= tmp;
      if (sgn(it->second) == 0) rem.erase(it);
    }
    quotient.push_back({qx, qs, Rational(q)});
  }
  BiPoly out;
  out.terms_ = std::move(quotient);
  return out;
}

std::optional<Poly> BiPoly::to_poly_s() const {
  if (degree_x() > 0) return std::nullopt;
  std::vector<Rational> c(static_cast<std::size_t>(degree_s() + 1));
  for (const auto& t : terms_) c[t.deg_s] = t.coeff;
  return Poly(std::move(c));
}

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    const Rational mag = t.coeff.abs();
    if (first) {
      if (t.coeff.sign() < 0) os << "-";
    } else {
      os << (t.coeff.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool has_var = t.deg_x > 0 || t.deg_s > 0;
    if (!has_var) {
      os << mag;
      continue;
    }
    bool need_star = false;
    if (!mag.is_one()) {
      os << mag;
      need_star = true;
    }
    if (t.deg_x > 0) {
      os << (need_star ? "*" : "") << "x";
      if (t.deg_x > 1) os << "^" << t.deg_x;
      need_star = true;
    }
    if (t.deg_s > 0) {
      os << (need_star ? "*" : "") << "s";
      if (t.deg_s > 1) os << "^" << t.deg_s;
    }
  }
  return os.str();
}

}  // namespace hforge
