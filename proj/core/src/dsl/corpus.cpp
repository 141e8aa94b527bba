#include "hforge/dsl/corpus.hpp"

#include <cctype>
#include <charconv>
#include <map>

namespace hforge::dsl {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::size_t skip_space(std::string_view s, std::size_t i, std::size_t end) {
  while (i < end && is_space(s[i])) ++i;
  return i;
}

std::size_t trim_end(std::string_view s, std::size_t begin, std::size_t end) {
  while (end > begin && is_space(s[end - 1])) --end;
  return end;
}

constexpr std::string_view kXfail = "@xfail";

}  // namespace

Result<std::vector<CorpusLine>> split_corpus(std::string_view content) {
  Result<std::vector<CorpusLine>> out;
  std::vector<CorpusLine> lines;
  std::map<std::string, std::size_t> seen;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < content.size()) {
    ++line_no;
    std::size_t eol = content.find('\n', pos);
    if (eol == std::string_view::npos) eol = content.size();
    const std::size_t line_begin = pos;
    pos = eol + 1;

    std::size_t i = skip_space(content, line_begin, eol);
    const std::size_t end = trim_end(content, i, eol);
    if (i == end || content[i] == '#') continue;

    CorpusLine cl;
    cl.line = line_no;
    if (content.substr(i, kXfail.size()) == kXfail) {
      const std::size_t after = i + kXfail.size();
      if (after < end && !is_space(content[after])) {
        out.diagnostics.push_back({Severity::Error, "unknown directive", Span{i, after + 1}, "the only directive is @xfail"});
        continue;
      }
      cl.expected_fail = true;
      i = skip_space(content, after, end);
    }
    const std::size_t colon = content.substr(0, end).find(':', i);
    if (colon == std::string_view::npos) {
      out.diagnostics.push_back(
          {Severity::Error, "expected 'NAME : LHS == RHS'", Span{i, end}, "every identity line needs a name and ':'"});
      continue;
    }
    const std::size_t name_end = trim_end(content, i, colon);
    if (name_end == i) {
      out.diagnostics.push_back({Severity::Error, "empty identity name", Span{i, colon + 1}, std::nullopt});
      continue;
    }
    cl.name = std::string(content.substr(i, name_end - i));
    for (std::size_t j = i; j < name_end; ++j) {
      if (is_space(content[j])) {
        out.diagnostics.push_back({Severity::Error, "identity names cannot contain spaces", Span{i, name_end}, std::nullopt});
        break;
      }
    }
    if (auto [it, fresh] = seen.emplace(cl.name, line_no); !fresh) {
      out.diagnostics.push_back({Severity::Error, "duplicate identity name '" + cl.name + "'", Span{i, name_end},
                                 "first defined on line " + std::to_string(it->second)});
    }
    cl.begin = colon + 1;
    cl.end = end;
    lines.push_back(std::move(cl));
  }
  if (out.diagnostics.empty()) out.value = std::move(lines);
  return out;
}

Result<std::vector<CorpusEntry>> load_corpus(std::string_view content) {
  auto split = split_corpus(content);
  if (!split) return {std::nullopt, std::move(split.diagnostics)};
  Result<std::vector<CorpusEntry>> out;
  std::vector<CorpusEntry> entries;
  for (const auto& line : *split.value) {
    auto compiled = compile_identity(content, line.begin, line.end);
    if (!compiled) {
      out.diagnostics.insert(out.diagnostics.end(), compiled.diagnostics.begin(), compiled.diagnostics.end());
      continue;
    }
    entries.push_back(CorpusEntry{line, std::move(*compiled.value)});
  }
  if (out.diagnostics.empty()) out.value = std::move(entries);
  return out;
}

RowKey parse_row_key(std::string_view name) {
  RowKey key;
  const std::size_t open = name.find('[');
  if (open == std::string_view::npos || name.back() != ']') {
    key.id = std::string(name);
    return key;
  }
  key.id = std::string(name.substr(0, open));
  std::string_view inner = name.substr(open + 1, name.size() - open - 2);
  while (!inner.empty()) {
    const std::size_t comma = inner.find(',');
    std::string_view item = inner.substr(0, comma);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) {
      key.variant = std::string(item);
    } else {
      std::int64_t v = 0;
      const auto digits = item.substr(eq + 1);
      std::from_chars(digits.data(), digits.data() + digits.size(), v);
      key.params[std::string(item.substr(0, eq))] = v;
    }
    if (comma == std::string_view::npos) break;
    inner.remove_prefix(comma + 1);
  }
  return key;
}

std::string format_row_key(std::string_view id, const Params& params, std::string_view variant) {
  std::string inner = hforge::to_string(params);
  if (!variant.empty()) inner += (inner.empty() ? "" : ",") + std::string(variant);
  return inner.empty() ? std::string(id) : std::string(id) + "[" + inner + "]";
}

}  // namespace hforge::dsl
