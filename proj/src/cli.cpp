#include "rtage/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <random>

#include "rtage/criterion.hpp"
#include "rtage/oracle.hpp"
#include "rtage/report.hpp"

namespace rtage {
namespace {

struct Options {
  std::optional<int> h, r, g;
  bool interior = false;
  std::int64_t order_divides = 12;
  std::string mode = "integral-both";
  std::string threshold = "canonical";
  std::string out_path;
  std::string format = "json";
  unsigned jobs = 1;
  std::optional<std::int64_t> samples;
  std::uint64_t seed = 1;
  std::int64_t max_degree = 8;
};

class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

unsigned default_jobs() {
  if (const char* env = std::getenv("RTAGE_JOBS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

void add_output_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--out", o.out_path, "Write the report to PATH instead of stdout");
  cmd->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "csv", "text"}));
}

void add_sweep_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--order-divides", o.order_divides, "Order bound N")->check(CLI::Range(1, int{kMaxDenominator}));
  cmd->add_option("--mode", o.mode, "Validity filters")
      ->check(CLI::IsMember({"integral-both", "integral-lambda-only", "unconstrained"}));
  cmd->add_option("--threshold", o.threshold, "Exceptions are age_v < 1 (canonical) or <= 1 (terminal)")
      ->check(CLI::IsMember({"canonical", "terminal"}));
  cmd->add_option("--jobs", o.jobs, "Worker threads (default $RTAGE_JOBS or 1)")->check(CLI::Range(1, 256));
  add_output_flags(cmd, o);
}

ReportConfig echo(const std::string& command, const Options& o) {
  ReportConfig c;
  c.command = command;
  c.h = o.h;
  c.r = o.r;
  c.g = o.g;
  c.interior = o.interior;
  c.order_divides = o.order_divides;
  c.mode = o.mode;
  c.threshold = o.threshold;
  return c;
}

Report run_sweep(const Options& o) {
  Report rep;
  rep.config = echo("sweep", o);
  const auto mode = parse_constraint_mode(o.mode);
  const auto threshold = parse_threshold(o.threshold);
  if (o.interior) {
    if (!o.g || o.h || o.r) throw UsageError("--interior needs --g and excludes --h/--r");
    if (*o.g < 1) throw UsageError("--g must be at least 1");
    rep.add(interior_verdict(*o.g, o.order_divides, o.jobs));
  } else if (o.h) {
    if (o.g) throw UsageError("--h and --g are exclusive");
    const int r = o.r.value_or(0);
    if (*o.h == 0) rep.add(torus_sweep(r, o.order_divides, mode));
    else rep.add(sweep_v({*o.h, r, o.order_divides, mode}, threshold, o.jobs));
  } else if (o.g) {
    if (o.r) throw UsageError("--r needs --h");
    if (*o.g < 1) throw UsageError("--g must be at least 1");
    rep.add(torus_sweep(*o.g, o.order_divides, mode));
    for (int h = 1; h <= *o.g; ++h) rep.add(sweep_v({h, *o.g - h, o.order_divides, mode}, threshold, o.jobs));
  } else {
    throw UsageError("sweep needs --h [--r], --g, or --interior --g");
  }
  return rep;
}

Report run_exceptions(const Options& o) {
  Report rep;
  rep.config = echo("exceptions", o);
  if (!o.g || *o.g < 1) throw UsageError("exceptions needs --g >= 1");
  for (const auto& sweep :
       exception_catalog(*o.g, o.order_divides, parse_constraint_mode(o.mode), parse_threshold(o.threshold), o.jobs))
    rep.add(sweep);
  return rep;
}

OracleRow oracle_case(const OrbitSignature& a, const OrbitSignature& b) {
  OracleRow row{a.str(), b.str(), false, ""};
  try {
    row.pass = oracle::crosscheck_functor(a, b, 1e-9);
    if (!row.pass) row.detail = "angle mismatch";
  } catch (const oracle::OracleFailure& e) {
    row.detail = e.what();
  }
  return row;
}

Report run_oracle(const Options& o) {
  Report rep;
  rep.config.command = "oracle";
  rep.config.order_divides = o.order_divides;
  rep.config.samples = o.samples;
  rep.config.max_degree = o.max_degree;
  if (o.max_degree < 1) throw UsageError("--max-degree must be at least 1");
  if (o.samples) {
    if (*o.samples < 0) throw UsageError("--samples must be non-negative");
    rep.config.seed = o.seed;
    std::mt19937_64 rng(o.seed);
    for (std::int64_t i = 0; i < *o.samples; ++i) {
      const auto a = oracle::sample_signature(rng, o.max_degree, o.order_divides);
      const auto b = oracle::sample_signature(rng, o.max_degree, o.order_divides);
      rep.oracle.push_back(oracle_case(a, b));
    }
  } else {
    for (std::int64_t d = 1; d <= o.max_degree; ++d)
      for (const auto& sig : cyclotomic_signatures(d, o.order_divides)) rep.oracle.push_back(oracle_case(sig, sig));
  }
  return rep;
}

std::string render(const Report& rep, const std::string& format) {
  if (format == "csv") return render_csv(rep);
  if (format == "text") return render_text(rep);
  return render_json(rep);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  o.jobs = default_jobs();
  Options oracle_opts = o;
  oracle_opts.order_divides = 36;

  CLI::App app{"Exact age (Reid-Tai) sweeps over boundary strata of the perfect-cone compactification of A_g"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "Print this help message and exit");

  auto* sweep = app.add_subcommand("sweep", "Minimum ages and exceptional classes");
  sweep->add_option("--h", o.h, "Dimension of the abelian part W")->check(CLI::NonNegativeNumber);
  sweep->add_option("--r", o.r, "Rank of the lattice Lambda")->check(CLI::NonNegativeNumber);
  sweep->add_option("--g", o.g, "Genus g = h + r")->check(CLI::NonNegativeNumber);
  sweep->add_flag("--interior", o.interior, "Classify the interior A_g (h = g)");
  sweep->set_help_flag("--help", "Print this help message and exit");
  add_sweep_flags(sweep, o);

  auto* exceptions = app.add_subcommand("exceptions", "Catalog of classes with age_v < 1 at genus g");
  exceptions->set_help_flag("--help", "Print this help message and exit");
  exceptions->add_option("--g", o.g, "Genus")->required()->check(CLI::NonNegativeNumber);
  add_sweep_flags(exceptions, o);

  auto* oracle = app.add_subcommand("oracle", "Numeric cross-check of exact spectra");
  oracle->set_help_flag("--help", "Print this help message and exit");
  oracle->add_option("--samples", oracle_opts.samples, "Random signature pairs (omit for exhaustive run)");
  oracle->add_option("--seed", oracle_opts.seed, "RNG seed");
  oracle->add_option("--max-degree", oracle_opts.max_degree, "Largest signature degree")->check(CLI::Range(1, 12));
  oracle->add_option("--order-divides", oracle_opts.order_divides, "Order bound N")
      ->check(CLI::Range(1, int{kMaxDenominator}));
  add_output_flags(oracle, oracle_opts);

  // CLI11 consumes a reversed argument vector without the program name.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  const bool is_oracle = oracle->parsed();
  const Options& active = is_oracle ? oracle_opts : o;
  const auto start = std::chrono::steady_clock::now();
  Report rep;
  int code = kExitOk;
  try {
    if (sweep->parsed()) rep = run_sweep(o);
    else if (exceptions->parsed()) rep = run_exceptions(o);
    else rep = run_oracle(oracle_opts);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PropositionViolation& v) {
    rep.config = echo(sweep->parsed() ? "sweep" : "exceptions", o);
    rep.add(v);
    err << "violation: " << v.what() << "\n";
    code = kExitViolation;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (is_oracle && std::any_of(rep.oracle.begin(), rep.oracle.end(), [](const auto& row) { return !row.pass; }))
    code = kExitOracle;
  rep.sort_rows();

  const std::string text = render(rep, active.format);
  if (active.out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(active.out_path, std::ios::binary);
    if (!f) {
      err << "cannot open " << active.out_path << " for writing\n";
      return kExitUsage;
    }
    f << text;
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  err << "elapsed " << elapsed.count() << " s\n";
  return code;
}

}  // namespace rtage
