#include "hforge/dsl/ast.hpp"

namespace hforge::dsl {

std::string_view to_string(Kind k) {
  switch (k) {
    case Kind::IntLit: return "IntLit";
    case Kind::RatLit: return "RatLit";
    case Kind::Var: return "Var";
    case Kind::Neg: return "Neg";
    case Kind::Add: return "Add";
    case Kind::Sub: return "Sub";
    case Kind::Mul: return "Mul";
    case Kind::Div: return "Div";
    case Kind::Pow: return "Pow";
    case Kind::Sum: return "Sum";
    case Kind::Call: return "Call";
  }
  return "?";
}

std::string_view to_string(ValueDomain d) {
  switch (d) {
    case ValueDomain::Unchecked: return "unchecked";
    case ValueDomain::Integer: return "integer";
    case ValueDomain::Rational: return "rational";
    case ValueDomain::RatFunc: return "ratfunc-in-s";
    case ValueDomain::BiFrac: return "bifrac";
  }
  return "?";
}

ExprPtr Expr::clone() const {
  auto out = std::make_unique<Expr>();
  out->kind = kind;
  out->span = span;
  out->name = name;
  out->literal = literal;
  out->domain = domain;
  out->kids.reserve(kids.size());
  for (const auto& k : kids) out->kids.push_back(k->clone());
  return out;
}

ExprPtr make_literal(Kind kind, Rational value, Span span) {
  auto e = std::make_unique<Expr>();
  e->kind = kind;
  e->literal = std::move(value);
  e->span = span;
  return e;
}

ExprPtr make_var(std::string name, Span span) {
  auto e = std::make_unique<Expr>();
  e->kind = Kind::Var;
  e->name = std::move(name);
  e->span = span;
  return e;
}

ExprPtr make_node(Kind kind, Span span, std::vector<ExprPtr> kids, std::string name) {
  auto e = std::make_unique<Expr>();
  e->kind = kind;
  e->span = span;
  e->kids = std::move(kids);
  e->name = std::move(name);
  return e;
}

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.name != b.name || a.kids.size() != b.kids.size()) return false;
  if ((a.kind == Kind::IntLit || a.kind == Kind::RatLit) && a.literal != b.literal) return false;
  for (std::size_t i = 0; i < a.kids.size(); ++i) {
    if (!structurally_equal(*a.kids[i], *b.kids[i])) return false;
  }
  return true;
}

}  // namespace hforge::dsl
