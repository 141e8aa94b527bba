#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hforge/bipoly.hpp"
#include "hforge/catalog.hpp"
#include "hforge/rational.hpp"

namespace hforge {

/// Evidence attached to a failing row.
struct Witness {
  /// lhs.num * rhs.den - rhs.num * lhs.den.
  BiPoly difference;
  /// Both sides at the triage point (s = 1, x = 2); empty when that point is a pole.
  std::optional<Rational> lhs_at_point;
  std::optional<Rational> rhs_at_point;
};

struct ReportRow {
  std::string id;
  std::string variant;
  std::int64_t n = 0;
  Params params;
  bool passed = false;
  bool expected_fail = false;
  std::optional<Witness> witness;
  /// Set when evaluating a side raised an error; such rows never pass.
  std::optional<std::string> error;
  std::chrono::nanoseconds elapsed{0};
  std::optional<bool> sampling_agrees;
  std::optional<bool> integer_s_agrees;
};

struct Summary {
  std::size_t total = 0;
  std::size_t passed = 0;
  /// Failing rows that were not expected to fail.
  std::size_t failed = 0;
  std::size_t expected_failed = 0;
  /// Rows whose oracle verdict disagreed with the symbolic one.
  std::size_t oracle_disagreements = 0;
};

struct Report {
  std::vector<ReportRow> rows;

  Summary summary() const;
  /// No unexpected failures and no oracle disagreements.
  bool ok() const;
  void append(Report other);
};

/// The triage point used in witnesses.
inline const Rational& witness_s() {
  static const Rational v(1);
  return v;
}
inline const Rational& witness_x() {
  static const Rational v(2);
  return v;
}

/// Witness for lhs != rhs.
Witness make_witness(const BiFrac& lhs, const BiFrac& rhs);

}  // namespace hforge
