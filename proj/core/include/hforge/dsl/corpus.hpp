#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hforge/catalog.hpp"
#include "hforge/dsl/checker.hpp"
#include "hforge/dsl/diagnostic.hpp"

namespace hforge::dsl {

// Corpus files: one identity per line, "NAME : LHS == RHS". "#" starts a
// comment line, blank lines are skipped. A leading "@xfail" marks an identity
// that is kept on record but expected to fail.

struct CorpusLine {
  std::string name;
  bool expected_fail = false;
  /// 1-based line number.
  std::size_t line = 0;
  /// Byte range of "LHS == RHS" in the file.
  std::size_t begin = 0;
  std::size_t end = 0;
};

struct CorpusEntry {
  CorpusLine where;
  CheckedIdentity identity;
};

/// Splits a corpus into lines; structural problems (no ':', empty name,
/// duplicate names) are diagnostics with spans into `content`.
Result<std::vector<CorpusLine>> split_corpus(std::string_view content);

/// split_corpus + parse + check. All diagnostics of all lines are collected.
Result<std::vector<CorpusEntry>> load_corpus(std::string_view content);

/// "ID-14[m=3,printed]" -> {"ID-14", {m:3}, "printed"}. Names without brackets
/// map to themselves with no params and no variant.
struct RowKey {
  std::string id;
  Params params;
  std::string variant;
};
RowKey parse_row_key(std::string_view name);
/// Inverse of parse_row_key: "ID-14[m=3,printed]", or the bare id.
std::string format_row_key(std::string_view id, const Params& params, std::string_view variant);

}  // namespace hforge::dsl
