#include "hforge/verify.hpp"

#include <algorithm>
#include <chrono>

#include "hforge/errors.hpp"
#include "hforge/parallel.hpp"
#include "hforge/ratfunc.hpp"

namespace hforge {
namespace {

struct Cell {
  const IdentityEntry* entry;
  std::int64_t n;
  Params params;
  const Variant* variant;
};

std::vector<Params> params_for(const IdentityEntry& entry, const std::vector<Params>& explicit_range,
                               const VerifyOptions& options) {
  if (!explicit_range.empty()) return explicit_range;
  auto m_spec = std::find_if(entry.params.begin(), entry.params.end(), [](const ParamSpec& p) { return p.name == "m"; });
  if (options.m_grid.empty() || m_spec == entry.params.end()) return entry.default_param_grid();
  std::vector<Params> grid;
  for (auto m : options.m_grid) {
    // Entries that only state particular m (ID-14) silently skip the others.
    if (!m_spec->allowed.empty() && std::find(m_spec->allowed.begin(), m_spec->allowed.end(), m) == m_spec->allowed.end()) {
      continue;
    }
    grid.push_back(Params{{"m", m}});
  }
  return grid;
}

std::vector<const Variant*> variants_for(const IdentityEntry& entry, const VerifyOptions& options) {
  if (entry.has_variants() && !options.variant.empty()) return {&entry.variant(options.variant)};
  std::vector<const Variant*> out;
  for (const auto& v : entry.variants) out.push_back(&v);
  return out;
}

void append_cells(std::vector<Cell>& cells, const IdentityEntry& entry, std::int64_t n_lo, std::int64_t n_hi,
                  const std::vector<Params>& params_range, const VerifyOptions& options) {
  const auto grid = params_for(entry, params_range, options);
  const auto variants = variants_for(entry, options);
  for (auto n = n_lo; n <= n_hi; ++n) {
    for (const auto& p : grid) {
      for (const Variant* v : variants) cells.push_back(Cell{&entry, n, p, v});
    }
  }
}

ReportRow run_cell(const Cell& cell, const VerifyOptions& options) {
  const special::SpecialValues& values = options.values ? *options.values : special::SpecialValues::shared();
  ReportRow row;
  row.id = cell.entry->id;
  row.variant = cell.variant->name;
  row.n = cell.n;
  row.params = cell.params;
  row.expected_fail = cell.variant->expected_fail(cell.params);
  const auto start = std::chrono::steady_clock::now();
  try {
    cell.entry->validate(cell.n, cell.params);
    const BiFrac lhs = cell.entry->lhs(values, cell.n, cell.params);
    const BiFrac rhs = cell.variant->rhs(values, cell.n, cell.params);
    row.passed = bifrac_eq(lhs, rhs);
    if (!row.passed) row.witness = make_witness(lhs, rhs);
  } catch (const std::exception& e) {
    row.passed = false;
    row.error = e.what();
  }
  if (options.keep_timing) row.elapsed = std::chrono::steady_clock::now() - start;
  if (options.augment) options.augment(*cell.entry, row);
  return row;
}

Report run_cells(const std::vector<Cell>& cells, const VerifyOptions& options) {
  Report report;
  report.rows.resize(cells.size());
  parallel_for(cells.size(), options.workers, [&](std::size_t i) { report.rows[i] = run_cell(cells[i], options); });
  return report;
}

}  // namespace

Report verify(const IdentityEntry& entry, std::int64_t n_lo, std::int64_t n_hi, const std::vector<Params>& params_range,
              const VerifyOptions& options) {
  std::vector<Cell> cells;
  append_cells(cells, entry, n_lo, n_hi, params_range, options);
  return run_cells(cells, options);
}

Report verify_entries(const std::vector<const IdentityEntry*>& entries, std::int64_t n_lo, std::int64_t n_hi,
                      const VerifyOptions& options) {
  std::vector<Cell> cells;
  for (const auto* e : entries) append_cells(cells, *e, n_lo, n_hi, {}, options);
  return run_cells(cells, options);
}

Report verify_all(std::int64_t n_max, const VerifyOptions& options) {
  std::vector<const IdentityEntry*> entries;
  for (const auto& e : catalog()) entries.push_back(&e);
  return verify_entries(entries, 1, n_max, options);
}

}  // namespace hforge
