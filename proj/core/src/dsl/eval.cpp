#include "hforge/dsl/eval.hpp"

#include <chrono>

#include "hforge/parallel.hpp"

namespace hforge::dsl {

BiFrac to_bifrac(const Value& v) {
  return std::visit([](const auto& x) { return BiFrac(x); }, v);
}

std::string to_string(const Value& v) {
  if (const auto* r = std::get_if<Rational>(&v)) return r->to_string();
  if (const auto* f = std::get_if<RatFunc>(&v)) return f->is_polynomial() ? f->num().to_string() : f->to_string();
  const auto& b = std::get<BiFrac>(v);
  if (auto r = b.as_rational()) return r->to_string();
  if (auto f = b.as_ratfunc()) return to_string(Value(*f));
  return b.to_string();
}

namespace {

using I = std::int64_t;

Value promote(const Value& v, std::size_t level) {
  if (v.index() >= level) return v;
  if (level == 1) return RatFunc(std::get<Rational>(v));
  return to_bifrac(v);
}

template <typename Op>
Value combine(const Value& a, const Value& b, Op op) {
  const std::size_t level = std::max(a.index(), b.index());
  const Value pa = promote(a, level);
  const Value pb = promote(b, level);
  switch (level) {
    case 0: return Value(op(std::get<Rational>(pa), std::get<Rational>(pb)));
    case 1: return Value(op(std::get<RatFunc>(pa), std::get<RatFunc>(pb)));
    default: return Value(op(std::get<BiFrac>(pa), std::get<BiFrac>(pb)));
  }
}

bool is_zero(const Value& v) {
  return std::visit([](const auto& x) { return x.is_zero(); }, v);
}

class Evaluator {
 public:
  Evaluator(I n, const Bindings& b, const special::SpecialValues& v) : bindings_(b), values_(v) {
    env_.emplace_back("n", n);
  }

  Value value(const Expr& e) {
    if (e.domain == ValueDomain::Integer) return Rational(integer(e));
    try {
      return compute(e);
    } catch (const EvalError&) {
      throw;
    } catch (const Error& err) {
      throw EvalError(err.what(), e.span);
    }
  }

 private:
  const Bindings& bindings_;
  const special::SpecialValues& values_;
  std::vector<std::pair<std::string_view, I>> env_;

  I lookup(const Expr& e) const {
    for (auto it = env_.rbegin(); it != env_.rend(); ++it) {
      if (it->first == e.name) return it->second;
    }
    throw EvalError("unbound variable '" + e.name + "'", e.span);
  }

  [[noreturn]] static void overflow(const Expr& e) { throw EvalError("integer overflow", e.span); }

  I integer(const Expr& e) {
    I out = 0;
    switch (e.kind) {
      case Kind::IntLit:
        if (!e.literal.numerator().fits_slong_p()) overflow(e);
        return e.literal.numerator().get_si();
      case Kind::Var:
        return lookup(e);
      case Kind::Neg:
        if (__builtin_sub_overflow(I{0}, integer(*e.kids[0]), &out)) overflow(e);
        return out;
      case Kind::Add:
        if (__builtin_add_overflow(integer(*e.kids[0]), integer(*e.kids[1]), &out)) overflow(e);
        return out;
      case Kind::Sub:
        if (__builtin_sub_overflow(integer(*e.kids[0]), integer(*e.kids[1]), &out)) overflow(e);
        return out;
      case Kind::Mul:
        if (__builtin_mul_overflow(integer(*e.kids[0]), integer(*e.kids[1]), &out)) overflow(e);
        return out;
      case Kind::Sum: {
        const I lo = integer(*e.kids[0]);
        const I hi = integer(*e.kids[1]);
        env_.emplace_back(e.name, 0);
        for (I j = lo; j <= hi; ++j) {
          env_.back().second = j;
          if (__builtin_add_overflow(out, integer(*e.kids[2]), &out)) overflow(e);
        }
        env_.pop_back();
        return out;
      }
      default:
        throw EvalError("internal: node is not integer-valued", e.span);
    }
  }

  Value compute(const Expr& e) {
    switch (e.kind) {
      case Kind::IntLit:
      case Kind::RatLit:
        return e.literal;
      case Kind::Var:
        if (e.name == "s") return bindings_.s ? Value(*bindings_.s) : Value(RatFunc::s());
        if (e.name == "x") return bindings_.x ? Value(*bindings_.x) : Value(BiFrac::x());
        return Rational(lookup(e));
      case Kind::Neg:
        return std::visit([](const auto& x) { return Value(-x); }, value(*e.kids[0]));
      case Kind::Add:
        return combine(value(*e.kids[0]), value(*e.kids[1]), [](const auto& a, const auto& b) { return a + b; });
      case Kind::Sub:
        return combine(value(*e.kids[0]), value(*e.kids[1]), [](const auto& a, const auto& b) { return a - b; });
      case Kind::Mul:
        return combine(value(*e.kids[0]), value(*e.kids[1]), [](const auto& a, const auto& b) { return a * b; });
      case Kind::Div: {
        Value num = value(*e.kids[0]);
        Value den = value(*e.kids[1]);
        if (is_zero(den)) throw EvalError("division by zero", e.kids[1]->span);
        return combine(num, den, [](const auto& a, const auto& b) { return a / b; });
      }
      case Kind::Pow: {
        Value base = value(*e.kids[0]);
        const I k = integer(*e.kids[1]);
        if (k < 0 && is_zero(base)) throw EvalError("negative power of zero", e.span);
        return std::visit([k](const auto& x) { return Value(x.pow(k)); }, base);
      }
      case Kind::Sum: {
        const I lo = integer(*e.kids[0]);
        const I hi = integer(*e.kids[1]);
        Value acc = Rational(0);
        env_.emplace_back(e.name, 0);
        for (I j = lo; j <= hi; ++j) {
          env_.back().second = j;
          acc = combine(acc, value(*e.kids[2]), [](const auto& a, const auto& b) { return a + b; });
        }
        env_.pop_back();
        return acc;
      }
      case Kind::Call:
        return call(e);
    }
    throw EvalError("internal: unknown node", e.span);
  }

  Value ratfunc_value(const RatFunc& f, const Expr& e) {
    if (!bindings_.s) return f;
    try {
      return f.eval(*bindings_.s);
    } catch (const PoleError&) {
      throw EvalError(e.name + " has a pole at s = " + bindings_.s->to_string(), e.span);
    }
  }

  Value call(const Expr& e) {
    std::vector<I> a;
    for (const auto& k : e.kids) a.push_back(integer(*k));
    auto bad = [&e](const std::string& why) { throw EvalError(e.name + ": " + why, e.span); };
    if (e.name == "H") {
      if (a[0] < 0) bad("argument must be >= 0, got " + std::to_string(a[0]));
      return values_.harmonic(a[0]);
    }
    if (e.name == "Hr") {
      if (a[0] < 0) bad("argument must be >= 0, got " + std::to_string(a[0]));
      if (a[1] < 1) bad("order must be >= 1, got " + std::to_string(a[1]));
      return values_.harmonic_gen(a[0], a[1]);
    }
    if (e.name == "C") {
      if (a[0] < 0) bad("upper index must be >= 0, got " + std::to_string(a[0]));
      return values_.binom_int(a[0], a[1]);
    }
    if (e.name == "CS") {
      if (a[1] < 0) bad("lower index must be >= 0, got " + std::to_string(a[1]));
      return ratfunc_value(values_.binom_shift(a[0], a[1]), e);
    }
    if (e.name == "PSID" || e.name == "PSI1D") {
      if (a[0] < a[1] || a[1] < 0) {
        bad("needs a >= b >= 0, got (" + std::to_string(a[0]) + ", " + std::to_string(a[1]) + ")");
      }
      return ratfunc_value(e.name == "PSID" ? values_.psi_diff(a[0], a[1]) : values_.psi1_diff(a[0], a[1]), e);
    }
    throw EvalError("unknown builtin '" + e.name + "'", e.span);
  }
};

}  // namespace

Value eval_value(const CheckedExpr& e, std::int64_t n, const Bindings& bindings,
                 const special::SpecialValues& values) {
  Evaluator ev(n, bindings, values);
  return ev.value(e.root());
}

BiFrac eval(const CheckedExpr& e, std::int64_t n, const Bindings& bindings, const special::SpecialValues& values) {
  return to_bifrac(eval_value(e, n, bindings, values));
}

Report check_identity(const CheckedExpr& lhs, const CheckedExpr& rhs, std::int64_t n_lo, std::int64_t n_hi,
                      const CheckIdentityOptions& options) {
  const special::SpecialValues& values = options.values ? *options.values : special::SpecialValues::shared();
  Report report;
  if (n_hi < n_lo) return report;
  report.rows.resize(static_cast<std::size_t>(n_hi - n_lo + 1));
  parallel_for(report.rows.size(), options.workers, [&](std::size_t i) {
    ReportRow& row = report.rows[i];
    row.id = options.name;
    row.n = n_lo + static_cast<std::int64_t>(i);
    row.expected_fail = options.expected_fail;
    const auto start = std::chrono::steady_clock::now();
    try {
      const BiFrac l = eval(lhs, row.n, {}, values);
      const BiFrac r = eval(rhs, row.n, {}, values);
      row.passed = bifrac_eq(l, r);
      if (!row.passed) row.witness = make_witness(l, r);
    } catch (const EvalError& err) {
      row.error = std::string(err.what()) + " [" + std::to_string(err.span().begin) + "," +
                  std::to_string(err.span().end) + ")";
    }
    if (options.keep_timing) row.elapsed = std::chrono::steady_clock::now() - start;
  });
  return report;
}

}  // namespace hforge::dsl
