#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hforge/catalog.hpp"
#include "hforge/report.hpp"

namespace hforge {

struct VerifyOptions {
  std::size_t workers = 1;
  /// Restrict to one variant of entries that have several; empty runs all.
  std::string variant;
  /// Parameter grid override (e.g. m values); empty uses each entry's default grid.
  std::vector<std::int64_t> m_grid;
  /// Values source; nullptr uses the shared memoizing instance.
  const special::SpecialValues* values = nullptr;
  /// Called inside the worker after the symbolic verdict, e.g. to attach oracle results.
  std::function<void(const IdentityEntry&, ReportRow&)> augment;
  bool keep_timing = true;
};

/// One row per (n, params, variant) with n in [n_lo, n_hi], in that order.
/// Evaluation errors become failing rows; nothing is thrown for a failed identity.
Report verify(const IdentityEntry& entry, std::int64_t n_lo, std::int64_t n_hi,
              const std::vector<Params>& params_range = {}, const VerifyOptions& options = {});

/// verify over every catalog entry for n in [1, n_max], in catalog order.
Report verify_all(std::int64_t n_max, const VerifyOptions& options = {});

/// verify over the given entries; cells of all entries share one worker pool.
Report verify_entries(const std::vector<const IdentityEntry*>& entries, std::int64_t n_lo, std::int64_t n_hi,
                      const VerifyOptions& options = {});

}  // namespace hforge
