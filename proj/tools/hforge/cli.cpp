#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hforge/catalog.hpp"
#include "hforge/dsl/corpus.hpp"
#include "hforge/dsl/eval.hpp"
#include "hforge/oracle.hpp"
#include "hforge/verify.hpp"
#include "hforge/version.hpp"
#include "output.hpp"

namespace hforge::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::int64_t n_min = 1;
  std::int64_t n_max = 10;
  std::string format = "text";
  std::string output;
  std::size_t workers = 1;
  bool no_timing = false;
};

std::size_t default_workers() {
  const char* env = std::getenv("HFORGE_WORKERS");
  if (!env || !*env) return 1;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1) throw UsageError(std::string("HFORGE_WORKERS must be a positive integer, got '") + env + "'");
  return static_cast<std::size_t>(v);
}

void add_range(CLI::App* cmd, Common& c) {
  cmd->add_option("--n-min", c.n_min, "smallest n")->capture_default_str();
  cmd->add_option("--n-max", c.n_max, "largest n")->capture_default_str();
}

void add_output(CLI::App* cmd, Common& c, std::vector<std::string> formats) {
  cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember(std::move(formats)))->capture_default_str();
  cmd->add_option("-o,--output", c.output, "write the report to this file");
}

void add_workers(CLI::App* cmd, Common& c) {
  cmd->add_option("-j,--workers", c.workers, "parallel workers (default: $HFORGE_WORKERS or 1)")
      ->check(CLI::PositiveNumber);
}

void validate_range(const Common& c) {
  if (c.n_min < 1) throw UsageError("--n-min must be >= 1");
  if (c.n_min > c.n_max) throw UsageError("--n-min must not exceed --n-max");
}

void emit(const std::string& text, const Common& c, std::ostream& out) {
  if (c.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.output, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + c.output + "'");
  f << text;
}

std::string render(const Report& report, const Common& c, Json config, bool strict = false) {
  if (c.format == "json") return report_json(report, std::move(config), !c.no_timing).dump(2) + "\n";
  if (c.format == "csv") return report_csv(report, !c.no_timing);
  return report_text(report, strict);
}

std::vector<const IdentityEntry*> select_entries(const std::vector<std::string>& ids, bool all) {
  std::vector<const IdentityEntry*> out;
  if (all) {
    for (const auto& e : catalog()) out.push_back(&e);
    return out;
  }
  for (const auto& id : ids) {
    if (!is_known_id(id)) throw UsageError("unknown identity '" + id + "' (see `hforge list`)");
    out.push_back(&lookup(id));
  }
  return out;
}

// ---- list -----------------------------------------------------------------------

struct ListArgs {
  std::vector<std::string> ids;
  std::string format = "text";
};

std::string params_text(const IdentityEntry& e) {
  std::string out;
  for (const auto& p : e.params) {
    out += p.name;
    if (!p.allowed.empty()) {
      out += " in {";
      for (std::size_t i = 0; i < p.allowed.size(); ++i) out += (i ? "," : "") + std::to_string(p.allowed[i]);
      out += "}";
    } else {
      out += ">=" + std::to_string(p.min);
    }
  }
  return out.empty() ? "-" : out;
}

int cmd_list(const ListArgs& a, std::ostream& out) {
  const auto entries = select_entries(a.ids, a.ids.empty());
  if (a.format == "json") {
    Json arr = Json::array();
    for (const auto* e : entries) {
      Json j;
      j["id"] = e->id;
      j["anchor"] = e->anchor;
      j["domain"] = std::string(to_string(e->domain));
      j["n_min"] = e->n_min;
      Json ps = Json::array();
      for (const auto& p : e->params) {
        ps.push_back(Json{{"name", p.name}, {"min", p.min}, {"allowed", p.allowed}, {"default_grid", p.default_grid}});
      }
      j["params"] = ps;
      Json vs = Json::array();
      if (e->has_variants()) {
        for (const auto& v : e->variants) vs.push_back(Json{{"name", v.name}, {"note", v.note}});
      }
      j["variants"] = vs;
      arr.push_back(j);
    }
    out << arr.dump(2) << '\n';
    return kOk;
  }
  for (const auto* e : entries) {
    out << std::left << std::setw(9) << e->id << ' ' << std::setw(7) << to_string(e->domain) << " n>=" << e->n_min
        << "  params: " << std::setw(10) << params_text(*e) << "  " << e->anchor;
    if (e->has_variants()) {
      out << "  [variants:";
      for (const auto& v : e->variants) out << ' ' << v.name;
      out << ']';
    }
    out << '\n';
  }
  return kOk;
}

// ---- verify ---------------------------------------------------------------------

struct VerifyArgs {
  Common c;
  bool all = false;
  std::vector<std::string> ids;
  std::vector<std::int64_t> m;
  std::string variant;
  std::string oracle = "off";
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  validate_range(a.c);
  if (!a.all && a.ids.empty()) throw UsageError("verify needs --all or --id");
  for (auto m : a.m) {
    if (m < 2) throw UsageError("--m values must be >= 2");
  }
  const auto entries = select_entries(a.ids, a.all);
  if (!a.variant.empty() &&
      std::none_of(entries.begin(), entries.end(), [](const IdentityEntry* e) { return e->has_variants(); })) {
    throw UsageError("--variant applies only to entries with printed/corrected forms (INTRO-2, ID-14)");
  }

  VerifyOptions opt;
  opt.workers = a.c.workers;
  opt.variant = a.variant;
  opt.m_grid = a.m;
  opt.keep_timing = !a.c.no_timing;
  const bool sampling = a.oracle == "sampling" || a.oracle == "both";
  const bool integer_s = a.oracle == "integer-s" || a.oracle == "both";
  if (sampling || integer_s) {
    opt.augment = [sampling, integer_s](const IdentityEntry& e, ReportRow& row) {
      if (row.error) return;
      if (sampling) row.sampling_agrees = oracle::sampling_verify(e, row.n, row.params, row.variant).all_equal == row.passed;
      if (integer_s && domain_has_s(e.domain)) {
        bool agrees = true;
        for (std::int64_t s0 : {0, 1, 2, 5}) {
          agrees = agrees && oracle::integer_s_check(e, row.n, s0, row.params, row.variant) == row.passed;
        }
        row.integer_s_agrees = agrees;
      }
    };
  }
  const Report report = verify_entries(entries, a.c.n_min, a.c.n_max, opt);

  Json config;
  config["command"] = "verify";
  config["n_min"] = a.c.n_min;
  config["n_max"] = a.c.n_max;
  if (a.all) {
    config["ids"] = "all";
  } else {
    config["ids"] = a.ids;
  }
  config["m"] = a.m;
  config["variant"] = a.variant;
  config["oracle"] = a.oracle;
  config["workers"] = a.c.workers;
  emit(render(report, a.c, config, !a.variant.empty()), a.c, out);
  // Naming a variant asks for that printed form to be judged as stated, so its
  // expected failures count.
  if (!a.variant.empty()) {
    const bool any_failed = std::any_of(report.rows.begin(), report.rows.end(), [](const ReportRow& r) { return !r.passed; });
    if (any_failed) return kIdentityFailure;
  }
  return report.ok() ? kOk : kIdentityFailure;
}

// ---- dsl ------------------------------------------------------------------------

struct DslArgs {
  Common c;
  std::string path;
};

int cmd_dsl(const DslArgs& a, std::ostream& out, std::ostream& err) {
  validate_range(a.c);
  std::ifstream in(a.path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + a.path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string content = buf.str();

  auto loaded = dsl::load_corpus(content);
  if (!loaded) {
    err << dsl::format_diagnostics(content, loaded.diagnostics, a.path);
    return kUsage;
  }
  Report report;
  for (const auto& entry : *loaded.value) {
    dsl::CheckIdentityOptions opt;
    opt.name = entry.where.name;
    opt.expected_fail = entry.where.expected_fail;
    opt.workers = a.c.workers;
    opt.keep_timing = !a.c.no_timing;
    report.append(dsl::check_identity(entry.identity.lhs, entry.identity.rhs, a.c.n_min, a.c.n_max, opt));
  }
  Json config;
  config["command"] = "dsl";
  config["path"] = a.path;
  config["n_min"] = a.c.n_min;
  config["n_max"] = a.c.n_max;
  config["workers"] = a.c.workers;
  emit(render(report, a.c, config), a.c, out);
  return report.ok() ? kOk : kIdentityFailure;
}

// ---- eval -----------------------------------------------------------------------

struct EvalArgs {
  std::string expr;
  std::optional<std::int64_t> n;
  std::optional<std::string> s;
  std::optional<std::string> x;
};

Rational parse_number(const std::string& flag, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::exception&) {
    throw UsageError(flag + " expects an integer or p/q, got '" + text + "'");
  }
}

int cmd_eval(const EvalArgs& a, std::ostream& out, std::ostream& err) {
  auto compiled = dsl::compile_expr(a.expr);
  if (!compiled) {
    err << dsl::format_diagnostics(a.expr, compiled.diagnostics, "<expr>");
    return kUsage;
  }
  if (compiled.value->uses("n") && !a.n) throw UsageError("the expression uses n; pass --n");
  const std::int64_t n = a.n.value_or(1);
  if (n < 1) throw UsageError("--n must be >= 1");
  dsl::Bindings b;
  if (a.s) b.s = parse_number("--s", *a.s);
  if (a.x) b.x = parse_number("--x", *a.x);
  try {
    out << dsl::to_string(dsl::eval_value(*compiled.value, n, b)) << '\n';
  } catch (const dsl::EvalError& e) {
    err << dsl::format_diagnostic(a.expr, e.diagnostic(), "<expr>");
    return kUsage;
  }
  return kOk;
}

// ---- bench ----------------------------------------------------------------------

struct BenchArgs {
  Common c;
  std::vector<std::string> ids;
  std::vector<std::size_t> workers;
  std::string memo = "on";
};

int cmd_bench(const BenchArgs& a, std::ostream& out) {
  validate_range(a.c);
  const auto entries = select_entries(a.ids.empty() ? std::vector<std::string>{"THM-2.1"} : a.ids, false);
  std::vector<std::size_t> pools = a.workers.empty() ? std::vector<std::size_t>{a.c.workers} : a.workers;
  std::vector<bool> memos;
  if (a.memo != "off") memos.push_back(true);
  if (a.memo != "on") memos.push_back(false);

  struct Row {
    std::string id;
    std::int64_t n;
    std::size_t workers;
    bool memo;
    std::int64_t nanos;
  };
  std::vector<Row> rows;
  for (const auto* e : entries) {
    for (auto w : pools) {
      for (bool memo : memos) {
        // One value source per sweep: with memo on, caches carry across n as in a verify run.
        special::SpecialValues values(memo);
        VerifyOptions opt;
        opt.workers = w;
        opt.values = &values;
        opt.keep_timing = false;
        for (auto n = a.c.n_min; n <= a.c.n_max; ++n) {
          const auto t0 = std::chrono::steady_clock::now();
          const Report r = verify(*e, n, n, {}, opt);
          const auto dt = std::chrono::steady_clock::now() - t0;
          rows.push_back(Row{e->id, n, w, memo, std::chrono::duration_cast<std::chrono::nanoseconds>(dt).count()});
          if (!r.ok()) throw std::runtime_error("bench: " + e->id + " failed at n=" + std::to_string(n));
        }
      }
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const Row& l, const Row& r) {
    return std::tie(l.id, l.n, l.workers) < std::tie(r.id, r.n, r.workers);
  });
  std::ostringstream os;
  if (a.c.format == "csv") {
    os << "id,n,workers,memo,nanos\n";
    for (const auto& r : rows) {
      os << r.id << ',' << r.n << ',' << r.workers << ',' << (r.memo ? "on" : "off") << ',' << r.nanos << '\n';
    }
  } else {
    os << std::left << std::setw(10) << "id" << std::right << std::setw(5) << "n" << std::setw(9) << "workers"
       << std::setw(6) << "memo" << std::setw(14) << "ms" << '\n';
    for (const auto& r : rows) {
      os << std::left << std::setw(10) << r.id << std::right << std::setw(5) << r.n << std::setw(9) << r.workers
         << std::setw(6) << (r.memo ? "on" : "off") << std::setw(14) << std::fixed << std::setprecision(3)
         << static_cast<double>(r.nanos) / 1e6 << '\n';
    }
  }
  emit(os.str(), a.c, out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of harmonic-number and binomial identities", "hforge"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  std::size_t env_workers = 1;
  try {
    env_workers = default_workers();
  } catch (const UsageError& e) {
    err << "hforge: " << e.what() << '\n';
    return kUsage;
  }

  ListArgs list;
  auto* list_cmd = app.add_subcommand("list", "list catalog identities");
  list_cmd->add_option("--id", list.ids, "restrict to these ids")->delimiter(',');
  list_cmd->add_option("--format", list.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  VerifyArgs ver;
  ver.c.workers = env_workers;
  auto* ver_cmd = app.add_subcommand("verify", "verify catalog identities over a range of n");
  ver_cmd->add_flag("--all", ver.all, "every catalog entry");
  ver_cmd->add_option("--id", ver.ids, "identity ids")->delimiter(',');
  ver_cmd->add_option("--m", ver.m, "m grid for ID-13/ID-14")->delimiter(',');
  ver_cmd->add_option("--variant", ver.variant, "printed or corrected form of INTRO-2 / ID-14")
      ->check(CLI::IsMember({"printed", "corrected"}));
  ver_cmd->add_option("--oracle", ver.oracle, "cross-check with the independent oracles")
      ->check(CLI::IsMember({"off", "sampling", "integer-s", "both"}))
      ->capture_default_str();
  add_range(ver_cmd, ver.c);
  add_output(ver_cmd, ver.c, {"text", "json", "csv"});
  add_workers(ver_cmd, ver.c);
  ver_cmd->add_flag("--no-timing", ver.c.no_timing, "omit elapsed times (stable output)");

  DslArgs dsl_args;
  dsl_args.c.workers = env_workers;
  auto* dsl_cmd = app.add_subcommand("dsl", "check every identity in a corpus file");
  dsl_cmd->add_option("path", dsl_args.path, "corpus file")->required();
  add_range(dsl_cmd, dsl_args.c);
  add_output(dsl_cmd, dsl_args.c, {"text", "json", "csv"});
  add_workers(dsl_cmd, dsl_args.c);
  dsl_cmd->add_flag("--no-timing", dsl_args.c.no_timing, "omit elapsed times (stable output)");

  EvalArgs ev;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate one DSL expression");
  eval_cmd->add_option("expr", ev.expr, "expression")->required();
  eval_cmd->add_option("--n", ev.n, "value of n");
  eval_cmd->add_option("--s", ev.s, "bind s to a number (integer or p/q)");
  eval_cmd->add_option("--x", ev.x, "bind x to a number (integer or p/q)");

  BenchArgs bench;
  bench.c.workers = env_workers;
  auto* bench_cmd = app.add_subcommand("bench", "time the symbolic verifier per identity and n");
  bench_cmd->add_option("--id", bench.ids, "identity ids (default THM-2.1)")->delimiter(',');
  bench_cmd->add_option("--workers", bench.workers, "worker counts to sweep")->delimiter(',')->check(CLI::PositiveNumber);
  bench_cmd->add_option("--memo", bench.memo, "memoization of special values")
      ->check(CLI::IsMember({"on", "off", "both"}))
      ->capture_default_str();
  add_range(bench_cmd, bench.c);
  add_output(bench_cmd, bench.c, {"text", "csv"});

  std::vector<const char*> argv{"hforge"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "hforge: " << e.what() << '\n';
    for (auto* sub : app.get_subcommands()) {
      err << "run `hforge " << sub->get_name() << " --help` for usage\n";
    }
    return kUsage;
  }

  try {
    if (*list_cmd) return cmd_list(list, out);
    if (*ver_cmd) return cmd_verify(ver, out);
    if (*dsl_cmd) return cmd_dsl(dsl_args, out, err);
    if (*eval_cmd) return cmd_eval(ev, out, err);
    if (*bench_cmd) return cmd_bench(bench, out);
  } catch (const UsageError& e) {
    err << "hforge: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace hforge::cli
