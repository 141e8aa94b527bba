#include "hforge/dsl/parser.hpp"

namespace hforge::dsl {
namespace {

int precedence(const Expr& e) {
  switch (e.kind) {
    case Kind::Add:
    case Kind::Sub:
      return 1;
    case Kind::Mul:
    case Kind::Div:
    case Kind::RatLit:  // "p/q" reads as a literal only where a term starts
      return 2;
    case Kind::Neg:
      return 3;
    case Kind::Pow:
      return 4;
    default:
      return 5;
  }
}

std::string render(const Expr& e);

std::string at(const Expr& e, int min_prec) {
  std::string s = render(e);
  return precedence(e) < min_prec ? "(" + s + ")" : s;
}

bool is_int_lit(const Expr& e) { return e.kind == Kind::IntLit; }

std::string render(const Expr& e) {
  switch (e.kind) {
    case Kind::IntLit:
      return e.literal.to_string();
    case Kind::RatLit:
      return e.literal.numerator().get_str() + "/" + e.literal.denominator().get_str();
    case Kind::Var:
      return e.name;
    case Kind::Neg:
      return "-" + at(*e.kids[0], 4);
    case Kind::Add:
      return at(*e.kids[0], 1) + " + " + at(*e.kids[1], 2);
    case Kind::Sub:
      return at(*e.kids[0], 1) + " - " + at(*e.kids[1], 2);
    case Kind::Mul:
      return at(*e.kids[0], 2) + "*" + at(*e.kids[1], 3);
    case Kind::Div: {
      const Expr& l = *e.kids[0];
      const Expr& r = *e.kids[1];
      // Keep INT/INT from being re-read as one literal.
      const bool guard = is_int_lit(r) && (is_int_lit(l) || (l.kind == Kind::Neg && is_int_lit(*l.kids[0])));
      return at(l, 2) + "/" + (guard ? "(" + render(r) + ")" : at(r, 3));
    }
    case Kind::Pow:
      return at(*e.kids[0], 5) + "^" + at(*e.kids[1], 5);
    case Kind::Sum:
      return "sum(" + e.name + "=" + render(*e.kids[0]) + ".." + render(*e.kids[1]) + ", " + render(*e.kids[2]) +
             ")";
    case Kind::Call: {
      std::string out = e.name + "(";
      for (std::size_t i = 0; i < e.kids.size(); ++i) out += (i ? ", " : "") + render(*e.kids[i]);
      return out + ")";
    }
  }
  return "?";
}

}  // namespace

std::string pretty(const Expr& e) { return render(e); }

std::string pretty(const Identity& id) { return render(*id.lhs) + " == " + render(*id.rhs); }

}  // namespace hforge::dsl
