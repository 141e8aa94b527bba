#pragma once

#include <memory>
#include <set>
#include <string>

#include "hforge/dsl/ast.hpp"
#include "hforge/dsl/diagnostic.hpp"

namespace hforge::dsl {

/// An expression that passed check(); immutable and cheap to copy.
class CheckedExpr {
 public:
  const Expr& root() const { return *root_; }
  ValueDomain domain() const { return root_->domain; }
  /// Free symbols that occur (subset of {n, s, x}).
  const std::set<std::string>& free_symbols() const { return free_; }
  bool uses(const std::string& symbol) const { return free_.count(symbol) != 0; }

 private:
  friend Result<CheckedExpr> check(ExprPtr ast);
  std::shared_ptr<const Expr> root_;
  std::set<std::string> free_;
};

struct CheckedIdentity {
  CheckedExpr lhs;
  CheckedExpr rhs;
};

/// Free-variable discipline, builtin names and arities, integer contexts
/// (sum bounds, builtin arguments, exponents); annotates every node's domain.
Result<CheckedExpr> check(ExprPtr ast);
Result<CheckedIdentity> check(Identity id);

/// Parse and check in one step.
Result<CheckedExpr> compile_expr(std::string_view source);
Result<CheckedIdentity> compile_identity(std::string_view source, std::size_t begin = 0,
                                         std::size_t end = std::string_view::npos);

/// Builtin table: name -> arity.
int builtin_arity(std::string_view name);

}  // namespace hforge::dsl
