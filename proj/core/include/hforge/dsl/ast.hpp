#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "hforge/rational.hpp"

namespace hforge::dsl {

/// Half-open byte range [begin, end) into the source text.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
  friend bool operator==(const Span&, const Span&) = default;
};

enum class Kind { IntLit, RatLit, Var, Neg, Add, Sub, Mul, Div, Pow, Sum, Call };

/// Filled in by the checker; ordered so that max() is the join.
enum class ValueDomain { Unchecked, Integer, Rational, RatFunc, BiFrac };

std::string_view to_string(Kind k);
std::string_view to_string(ValueDomain d);

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct Expr {
  Kind kind = Kind::IntLit;
  Span span;
  /// Var: the name. Sum: the binder. Call: the builtin.
  std::string name;
  /// IntLit / RatLit value.
  Rational literal;
  /// Neg: [x]. Binary: [lhs, rhs]. Pow: [base, exponent]. Sum: [lo, hi, body]. Call: args.
  std::vector<ExprPtr> kids;
  ValueDomain domain = ValueDomain::Unchecked;

  ExprPtr clone() const;
};

ExprPtr make_literal(Kind kind, Rational value, Span span);
ExprPtr make_var(std::string name, Span span);
ExprPtr make_node(Kind kind, Span span, std::vector<ExprPtr> kids, std::string name = {});

/// Same shape, names and literals; spans and domains are ignored.
bool structurally_equal(const Expr& a, const Expr& b);

struct Identity {
  ExprPtr lhs;
  ExprPtr rhs;
};

}  // namespace hforge::dsl
