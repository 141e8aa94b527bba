#include "output.hpp"

#include <sstream>

#include "hforge/catalog.hpp"
#include "hforge/dsl/corpus.hpp"
#include "hforge/version.hpp"

namespace hforge::cli {

std::string row_label(const ReportRow& row) { return dsl::format_row_key(row.id, row.params, row.variant); }

Json row_json(const ReportRow& row, bool timing) {
  Json j;
  j["id"] = row.id;
  if (is_known_id(row.id)) j["anchor"] = lookup(row.id).anchor;
  if (!row.variant.empty()) j["variant"] = row.variant;
  j["n"] = row.n;
  Json params = Json::object();
  for (const auto& [k, v] : row.params) params[k] = v;
  j["params"] = params;
  j["passed"] = row.passed;
  j["expected_fail"] = row.expected_fail;
  if (row.witness) {
    Json w;
    w["difference"] = row.witness->difference.to_string();
    w["point"] = Json{{"s", witness_s().to_string()}, {"x", witness_x().to_string()}};
    w["lhs"] = row.witness->lhs_at_point ? Json(row.witness->lhs_at_point->to_string()) : Json(nullptr);
    w["rhs"] = row.witness->rhs_at_point ? Json(row.witness->rhs_at_point->to_string()) : Json(nullptr);
    j["witness"] = w;
  }
  if (row.error) j["error"] = *row.error;
  if (row.sampling_agrees || row.integer_s_agrees) {
    Json o = Json::object();
    if (row.sampling_agrees) o["sampling_agrees"] = *row.sampling_agrees;
    if (row.integer_s_agrees) o["integer_s_agrees"] = *row.integer_s_agrees;
    j["oracle"] = o;
  }
  if (timing) j["elapsed_ns"] = row.elapsed.count();
  return j;
}

Json summary_json(const Summary& s) {
  return Json{{"total", s.total},
              {"passed", s.passed},
              {"failed", s.failed},
              {"expected_failed", s.expected_failed},
              {"oracle_disagreements", s.oracle_disagreements}};
}

Json report_json(const Report& report, Json config, bool timing) {
  Json j;
  j["tool_version"] = kVersion;
  j["config"] = std::move(config);
  Json rows = Json::array();
  for (const auto& r : report.rows) rows.push_back(row_json(r, timing));
  j["rows"] = std::move(rows);
  j["summary"] = summary_json(report.summary());
  return j;
}

namespace {
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string status(const ReportRow& r) {
  if (r.passed) return "PASS";
  return r.expected_fail ? "XFAIL" : "FAIL";
}
}  // namespace

std::string report_csv(const Report& report, bool timing) {
  std::ostringstream os;
  os << "id,variant,n,params,passed,expected_fail" << (timing ? ",elapsed_ns" : "") << '\n';
  for (const auto& r : report.rows) {
    os << csv_field(r.id) << ',' << csv_field(r.variant) << ',' << r.n << ',' << csv_field(to_string(r.params)) << ','
       << (r.passed ? "true" : "false") << ',' << (r.expected_fail ? "true" : "false");
    if (timing) os << ',' << r.elapsed.count();
    os << '\n';
  }
  return os.str();
}

std::string report_text(const Report& report, bool strict) {
  std::ostringstream os;
  std::size_t i = 0;
  while (i < report.rows.size()) {
    // Group consecutive rows of the same id.
    const std::string& id = report.rows[i].id;
    std::size_t j = i;
    std::int64_t lo = report.rows[i].n, hi = lo;
    std::size_t passed = 0, xfail = 0, failed = 0;
    std::vector<const ReportRow*> bad;
    for (; j < report.rows.size() && report.rows[j].id == id; ++j) {
      const ReportRow& r = report.rows[j];
      lo = std::min(lo, r.n);
      hi = std::max(hi, r.n);
      if (r.passed) {
        ++passed;
      } else {
        (r.expected_fail ? xfail : failed) += 1;
        bad.push_back(&r);
      }
    }
    os << (failed || (strict && xfail) ? "FAIL " : "ok   ") << id << "  n=" << lo << ".." << hi << "  " << passed << "/" << (j - i)
       << " passed";
    if (xfail) os << ", " << xfail << " expected failure" << (xfail == 1 ? "" : "s");
    if (failed) os << ", " << failed << " FAILED";
    os << '\n';
    for (const ReportRow* r : bad) {
      os << "  " << status(*r) << ' ' << row_label(*r) << " n=" << r->n;
      if (r->error) os << ": error: " << *r->error;
      if (r->witness) {
        const auto show = [](const std::optional<Rational>& v) { return v ? v->to_string() : std::string("pole"); };
        os << ": LHS " << show(r->witness->lhs_at_point) << " vs RHS " << show(r->witness->rhs_at_point)
           << " at s=" << witness_s().to_string() << ", x=" << witness_x().to_string();
      }
      os << '\n';
    }
    for (std::size_t k = i; k < j; ++k) {
      const ReportRow& r = report.rows[k];
      const bool disagree = (r.sampling_agrees && !*r.sampling_agrees) || (r.integer_s_agrees && !*r.integer_s_agrees);
      if (disagree) os << "  ORACLE DISAGREES " << row_label(r) << " n=" << r.n << '\n';
    }
    i = j;
  }
  const Summary s = report.summary();
  os << s.total << " rows: " << s.passed << " passed, " << s.failed << " failed, " << s.expected_failed
     << " expected failures";
  if (s.oracle_disagreements) os << ", " << s.oracle_disagreements << " oracle disagreements";
  os << '\n';
  return os.str();
}

}  // namespace hforge::cli
