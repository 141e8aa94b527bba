#include "hforge/report.hpp"

#include "hforge/ratfunc.hpp"

namespace hforge {

Summary Report::summary() const {
  Summary s;
  s.total = rows.size();
  for (const auto& r : rows) {
    if (r.passed) {
      ++s.passed;
    } else if (r.expected_fail) {
      ++s.expected_failed;
    } else {
      ++s.failed;
    }
    const bool disagree = (r.sampling_agrees && !*r.sampling_agrees) || (r.integer_s_agrees && !*r.integer_s_agrees);
    if (disagree) ++s.oracle_disagreements;
  }
  return s;
}

bool Report::ok() const {
  const Summary s = summary();
  return s.failed == 0 && s.oracle_disagreements == 0;
}

void Report::append(Report other) {
  rows.insert(rows.end(), std::make_move_iterator(other.rows.begin()), std::make_move_iterator(other.rows.end()));
}

namespace {
std::optional<Rational> try_eval(const BiFrac& f) {
  try {
    return f.eval(witness_s(), witness_x());
  } catch (const PoleError&) {
    return std::nullopt;
  }
}
}  // namespace

Witness make_witness(const BiFrac& lhs, const BiFrac& rhs) {
  Witness w;
  w.difference = cross_difference(lhs, rhs);
  w.lhs_at_point = try_eval(lhs);
  w.rhs_at_point = try_eval(rhs);
  return w;
}

}  // namespace hforge
