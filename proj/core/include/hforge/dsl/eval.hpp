#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "hforge/bifrac.hpp"
#include "hforge/dsl/checker.hpp"
#include "hforge/ratfunc.hpp"
#include "hforge/rational.hpp"
#include "hforge/report.hpp"
#include "hforge/special_values.hpp"

namespace hforge::dsl {

/// Result of evaluation in the smallest field that holds it.
using Value = std::variant<Rational, RatFunc, BiFrac>;

BiFrac to_bifrac(const Value& v);
/// "49/20", "s + 2", "(x)/(x + 1)".
std::string to_string(const Value& v);

struct Bindings {
  /// When set, s (resp. x) is this number instead of a symbol.
  std::optional<Rational> s;
  std::optional<Rational> x;
};

/// Evaluates at a concrete n. Throws EvalError (with the node's span) on a
/// pole, a zero denominator, or a builtin argument outside its domain.
Value eval_value(const CheckedExpr& e, std::int64_t n, const Bindings& bindings = {},
                 const special::SpecialValues& values = special::SpecialValues::shared());
BiFrac eval(const CheckedExpr& e, std::int64_t n, const Bindings& bindings = {},
            const special::SpecialValues& values = special::SpecialValues::shared());

struct CheckIdentityOptions {
  /// Row id in the report.
  std::string name = "dsl";
  bool expected_fail = false;
  std::size_t workers = 1;
  bool keep_timing = true;
  const special::SpecialValues* values = nullptr;
};

/// One row per n in [n_lo, n_hi]; evaluation errors become failing rows.
Report check_identity(const CheckedExpr& lhs, const CheckedExpr& rhs, std::int64_t n_lo, std::int64_t n_hi,
                      const CheckIdentityOptions& options = {});

}  // namespace hforge::dsl
