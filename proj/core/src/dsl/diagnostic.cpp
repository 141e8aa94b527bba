#include "hforge/dsl/diagnostic.hpp"

#include <algorithm>
#include <sstream>

namespace hforge::dsl {

Location locate(std::string_view source, std::size_t offset) {
  offset = std::min(offset, source.size());
  Location loc;
  for (std::size_t i = 0; i < offset; ++i) {
    if (source[i] == '\n') {
      ++loc.line;
      loc.column = 1;
    } else {
      ++loc.column;
    }
  }
  return loc;
}

std::string format_diagnostic(std::string_view source, const Diagnostic& d, std::string_view origin) {
  const Location loc = locate(source, d.span.begin);
  std::ostringstream os;
  os << origin << ':' << loc.line << ':' << loc.column << ": "
     << (d.severity == Severity::Error ? "error" : "warning") << ": " << d.message << " [" << d.span.begin << ','
     << d.span.end << ")\n";

  const std::size_t begin = std::min(d.span.begin, source.size());
  std::size_t line_start = 0;
  if (begin > 0) {
    const std::size_t nl = source.rfind('\n', begin - 1);
    if (nl != std::string_view::npos) line_start = nl + 1;
  }
  std::size_t line_end = source.find('\n', begin);
  if (line_end == std::string_view::npos) line_end = source.size();
  std::string_view line = source.substr(line_start, line_end - line_start);
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

  // Carets cover the span clipped to this line; empty spans get one caret.
  const std::size_t col = begin - line_start;
  const std::size_t stop = std::min(std::max(d.span.end, begin + 1), line_start + line.size() + 1);
  os << "  " << line << "\n  " << std::string(col, ' ') << std::string(std::max<std::size_t>(1, stop - begin), '^')
     << '\n';
  if (d.hint) os << "  hint: " << *d.hint << '\n';
  return os.str();
}

std::string format_diagnostics(std::string_view source, const std::vector<Diagnostic>& ds, std::string_view origin) {
  std::string out;
  for (const auto& d : ds) out += format_diagnostic(source, d, origin);
  return out;
}

}  // namespace hforge::dsl
