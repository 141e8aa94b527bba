#include "hforge/dsl/checker.hpp"

#include <algorithm>
#include <array>

#include "hforge/dsl/parser.hpp"

namespace hforge::dsl {
namespace {

struct Builtin {
  std::string_view name;
  int arity;
  ValueDomain result;
};

constexpr std::array<Builtin, 6> kBuiltins{{
    {"H", 1, ValueDomain::Rational},
    {"Hr", 2, ValueDomain::Rational},
    {"C", 2, ValueDomain::Rational},
    {"CS", 2, ValueDomain::RatFunc},
    {"PSID", 2, ValueDomain::RatFunc},
    {"PSI1D", 2, ValueDomain::RatFunc},
}};

const Builtin* find_builtin(std::string_view name) {
  for (const auto& b : kBuiltins) {
    if (b.name == name) return &b;
  }
  return nullptr;
}

class Checker {
 public:
  std::vector<Diagnostic> diags;
  std::set<std::string> free;

  ValueDomain visit(Expr& e) {
    e.domain = compute(e);
    return e.domain;
  }

 private:
  std::vector<std::string> scope_;

  void error(std::string message, Span span, std::optional<std::string> hint = std::nullopt) {
    diags.push_back(Diagnostic{Severity::Error, std::move(message), span, std::move(hint)});
  }

  void require_integer(Expr& e, const std::string& message) {
    if (visit(e) != ValueDomain::Integer) {
      error(message, e.span, "only integer literals, n, summation variables, +, - and * are integer-valued");
    }
  }

  ValueDomain compute(Expr& e) {
    switch (e.kind) {
      case Kind::IntLit:
        return ValueDomain::Integer;
      case Kind::RatLit:
        return ValueDomain::Rational;
      case Kind::Var:
        return variable(e);
      case Kind::Neg:
        return visit(*e.kids[0]);
      case Kind::Add:
      case Kind::Sub:
      case Kind::Mul:
        return std::max(visit(*e.kids[0]), visit(*e.kids[1]));
      case Kind::Div:
        return std::max({visit(*e.kids[0]), visit(*e.kids[1]), ValueDomain::Rational});
      case Kind::Pow: {
        const ValueDomain base = visit(*e.kids[0]);
        require_integer(*e.kids[1], "exponent must be an integer-valued expression");
        return std::max(base, ValueDomain::Rational);
      }
      case Kind::Sum: {
        require_integer(*e.kids[0], "summation bounds must be integer-valued");
        require_integer(*e.kids[1], "summation bounds must be integer-valued");
        scope_.push_back(e.name);
        const ValueDomain body = visit(*e.kids[2]);
        scope_.pop_back();
        return body;
      }
      case Kind::Call:
        return call(e);
    }
    return ValueDomain::Rational;
  }

  ValueDomain variable(const Expr& e) {
    if (std::find(scope_.rbegin(), scope_.rend(), e.name) != scope_.rend()) return ValueDomain::Integer;
    if (e.name == "n" || e.name == "s" || e.name == "x") free.insert(e.name);
    if (e.name == "n") return ValueDomain::Integer;
    if (e.name == "s") return ValueDomain::RatFunc;
    if (e.name == "x") return ValueDomain::BiFrac;
    if (find_builtin(e.name)) {
      error("'" + e.name + "' is a builtin and needs arguments", e.span, e.name + "(...)");
    } else {
      error("unbound variable '" + e.name + "'", e.span, "free symbols are n, s and x; bind others with sum(" +
                                                             e.name + "=lo..hi, ...)");
    }
    // Already reported; integer keeps enclosing integer contexts quiet.
    return ValueDomain::Integer;
  }

  ValueDomain call(Expr& e) {
    const Builtin* b = find_builtin(e.name);
    if (!b) {
      error("unknown builtin '" + e.name + "'", e.span, "builtins are H, Hr, C, CS, PSID, PSI1D");
      for (auto& k : e.kids) visit(*k);
      return ValueDomain::Rational;
    }
    if (static_cast<int>(e.kids.size()) != b->arity) {
      error(e.name + " expects " + std::to_string(b->arity) + " argument" + (b->arity == 1 ? "" : "s") + ", got " +
                std::to_string(e.kids.size()),
            e.span);
    }
    for (auto& k : e.kids) require_integer(*k, e.name + " requires integer-valued arguments");
    return b->result;
  }
};

}  // namespace

int builtin_arity(std::string_view name) {
  const Builtin* b = find_builtin(name);
  return b ? b->arity : -1;
}

Result<CheckedExpr> check(ExprPtr ast) {
  Result<CheckedExpr> out;
  Checker c;
  c.visit(*ast);
  out.diagnostics = std::move(c.diags);
  if (out.diagnostics.empty()) {
    CheckedExpr ce;
    ce.root_ = std::shared_ptr<const Expr>(std::move(ast));
    ce.free_ = std::move(c.free);
    out.value = std::move(ce);
  }
  return out;
}

Result<CheckedIdentity> check(Identity id) {
  Result<CheckedIdentity> out;
  auto l = check(std::move(id.lhs));
  auto r = check(std::move(id.rhs));
  out.diagnostics = std::move(l.diagnostics);
  out.diagnostics.insert(out.diagnostics.end(), r.diagnostics.begin(), r.diagnostics.end());
  if (l && r) out.value = CheckedIdentity{std::move(*l.value), std::move(*r.value)};
  return out;
}

Result<CheckedExpr> compile_expr(std::string_view source) {
  auto parsed = parse_expr(source);
  if (!parsed) return {std::nullopt, std::move(parsed.diagnostics)};
  return check(std::move(*parsed.value));
}

Result<CheckedIdentity> compile_identity(std::string_view source, std::size_t begin, std::size_t end) {
  auto parsed = parse_identity(source, begin, end);
  if (!parsed) return {std::nullopt, std::move(parsed.diagnostics)};
  return check(std::move(*parsed.value));
}

}  // namespace hforge::dsl
