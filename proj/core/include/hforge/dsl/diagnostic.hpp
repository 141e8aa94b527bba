#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hforge/dsl/ast.hpp"
#include "hforge/errors.hpp"

namespace hforge::dsl {

enum class Severity { Error, Warning };

struct Diagnostic {
  Severity severity = Severity::Error;
  std::string message;
  Span span;
  std::optional<std::string> hint;
};

/// 1-based line and column (in bytes) of a byte offset.
struct Location {
  std::size_t line = 1;
  std::size_t column = 1;
};
Location locate(std::string_view source, std::size_t offset);

/// "origin:line:col: error: message [b,e)" followed by the source line, a caret
/// marker under the span and the hint, each on its own line.
std::string format_diagnostic(std::string_view source, const Diagnostic& d, std::string_view origin = "<input>");
std::string format_diagnostics(std::string_view source, const std::vector<Diagnostic>& ds,
                               std::string_view origin = "<input>");

/// Value or diagnostics; `value` is empty iff some diagnostic is an error.
template <typename T>
struct Result {
  std::optional<T> value;
  std::vector<Diagnostic> diagnostics;
  explicit operator bool() const { return value.has_value(); }
};

/// Raised by the evaluator (poles, zero division, bad runtime arguments).
class EvalError : public Error {
 public:
  EvalError(const std::string& message, Span span) : Error(message), span_(span) {}
  Span span() const { return span_; }
  Diagnostic diagnostic() const { return Diagnostic{Severity::Error, what(), span_, std::nullopt}; }

 private:
  Span span_;
};

}  // namespace hforge::dsl
