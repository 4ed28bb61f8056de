// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rtage/cli.hpp"
#include "rtage/criterion.hpp"
#include "rtage/oracle.hpp"

using namespace rtage;
using nlohmann::json;

namespace {

const RotationNumber kZero{};
const RotationNumber kHalf(1, 2);

struct CliRun {
  int code;
  std::string out;
};

CliRun cli(std::vector<std::string> args) {
  args.insert(args.begin(), "rtage");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str()};
}

Spectrum repeat(const RotationNumber& x, int times) {
  return Spectrum(std::vector<RotationNumber>(static_cast<std::size_t>(times), x));
}

Spectrum exceptional_lambda(int r) {
  auto e = repeat(kHalf, r - 1).entries();
  e.push_back(kZero);
  return Spectrum(e);
}

// Collects failed checks with a short reason; a criterion passes when none fail.
class Checker {
public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  const std::vector<std::string>& failures() const { return failures_; }

private:
  std::vector<std::string> failures_;
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<void(Checker&)> body;
};

void exception_catalog_criterion(Checker& c) {
  for (int g : {5, 6}) {
    const auto run = cli({"exceptions", "--g", std::to_string(g), "--order-divides", "12"});
    c.expect(run.code == kExitOk, "exceptions --g " + std::to_string(g) + " exit code");
    if (run.code != kExitOk) continue;
    const auto rows = json::parse(run.out)["exceptions"];
    c.expect(rows.size() == 1, "g=" + std::to_string(g) + ": exactly one exception row");
    if (rows.size() != 1) continue;
    const auto& row = rows[0];
    c.expect(row["h"] == 1 && row["r"] == g - 1, "exception at h=1, r=g-1");
    c.expect(Spectrum::from_strings(row["w_spec"].get<std::vector<std::string>>()) == Spectrum{kHalf}, "w_spec = {1/2}");
    c.expect(Spectrum::from_strings(row["lambda_spec"].get<std::vector<std::string>>()) == exceptional_lambda(g - 1),
             "lambda_spec = one 0 and r-1 halves");
    c.expect(Rational::parse(row["age_v"].get<std::string>()) == Rational(1, 2), "age_v = 1/2");
    c.expect(row["matches_iii"] == true, "matches_iii flag");

    // Independent census straight from the class stream.
    std::size_t below = 0;
    for (int h = 1; h <= g; ++h)
      for_each_class({h, g - h, 12}, [&](const ElementClass& cls) {
        if (!cls.kernel_on_v && age(v_spectrum(cls.w_spec, cls.lambda_spec)) < Rational(1)) ++below;
      });
    c.expect(below == 1, "direct census finds exactly one class with age_v < 1");
  }
}

void order_two_criterion(Checker& c) {
  for (int g : {5, 6}) {
    std::size_t checked = 0;
    for (int h = 1; h <= g; ++h)
      for_each_class({h, g - h, 12}, [&](const ElementClass& cls) {
        if (cls.kernel_on_v) return;
        const Spectrum v = v_spectrum(cls.w_spec, cls.lambda_spec);
        ++checked;
        if (element_order(v) != 2)
          c.expect(age(v) >= Rational(1), "order != 2 on V with age_v < 1 at h=" + std::to_string(h));
      });
    c.expect(checked > 0, "nonempty sweep");
    try {
      (void)exception_catalog(g, 12);
    } catch (const PropositionViolation& v) {
      c.expect(false, std::string("exception_catalog raised ") + v.what());
    }
    c.expect(cli({"sweep", "--g", std::to_string(g)}).code == kExitOk, "sweep --g exits 0");
  }
  // The assertion is live: dropping the integrality filters makes it fire.
  c.expect(cli({"sweep", "--h", "1", "--r", "4", "--mode", "unconstrained"}).code == kExitViolation,
           "unconstrained sweep exits 3");
}

void sym2_criterion(Checker& c) {
  const auto h5 = sweep_sym2(5, 12);
  const auto h6 = sweep_sym2(6, 12);
  c.expect(h5.value && *h5.value >= Rational(1), "h=5 minimum >= 1");
  c.expect(h6.value && *h6.value > Rational(1), "h=6 minimum > 1");
  c.expect(h5.value == Rational(1), "h=5 golden minimum 1");
  c.expect(h6.value == Rational(7, 6), "h=6 golden minimum 7/6");
  for (int h : {5, 6}) {
    const auto& m = h == 5 ? h5 : h6;
    auto lo = repeat(kZero, h - 1).entries();
    lo.push_back(RotationNumber(1, 6));
    auto hi = repeat(kHalf, h - 1).entries();
    hi.push_back(RotationNumber(2, 3));
    std::vector<Spectrum> expect{Spectrum(lo), Spectrum(hi)};
    std::sort(expect.begin(), expect.end());
    c.expect(m.witnesses == expect, "h=" + std::to_string(h) + " golden minimizers");
  }
}

void interior_criterion(Checker& c) {
  const std::vector<std::pair<int, std::string>> expect = {
      {3, "not-canonical"}, {5, "canonical-not-terminal"}, {6, "terminal"}, {7, "terminal"}};
  for (const auto& [g, verdict] : expect) {
    const auto run = cli({"sweep", "--interior", "--g", std::to_string(g)});
    c.expect(run.code == kExitOk, "sweep --interior exit code");
    if (run.code != kExitOk) continue;
    const auto rows = json::parse(run.out)["verdicts"];
    c.expect(rows.size() == 1 && rows[0]["verdict"] == verdict, "g=" + std::to_string(g) + " verdict " + verdict);
  }
}

void boundary_criterion(Checker& c) {
  for (int r = 4; r <= 8; ++r) {
    const ElementClass cls = canonical_class(Spectrum{kHalf}, exceptional_lambda(r), 12);
    c.expect(matches_exceptional_shape(cls), "exceptional shape at r=" + std::to_string(r));
    c.expect(age(v_spectrum(cls.w_spec, cls.lambda_spec)) == Rational(1, 2), "age_v = 1/2");
    const auto moved = boundary_moved_count(cls.lambda_spec);
    c.expect(moved == static_cast<std::size_t>(r - 1), "moved count r-1 at r=" + std::to_string(r));
    c.expect(moved > 2, "moved count exceeds 2");
  }
}

void kernel_criterion(Checker& c) {
  for (int h = 1; h <= 6; ++h)
    for (int r = 0; h + r <= 6; ++r) {
      std::size_t trivial = 0;
      for (const auto& a : ppav_classes(h, 12))
        for (const auto& b : lattice_classes(r, 12)) {
          if (!v_spectrum(a, b).is_trivial()) continue;
          ++trivial;
          const bool plus = a.is_constant(kZero) && b.is_constant(kZero);
          const bool minus = a.is_constant(kHalf) && b.is_constant(kHalf);
          c.expect(plus || minus, "kernel element other than +-1 at h=" + std::to_string(h));
        }
      c.expect(trivial == 2, "exactly two kernel pairs at h=" + std::to_string(h) + ", r=" + std::to_string(r));
    }
}

void reduction_criterion(Checker& c) {
  std::vector<std::string> base;
  for (std::int64_t n : {12, 24, 36}) {
    const auto run = cli({"exceptions", "--g", "5", "--order-divides", std::to_string(n)});
    c.expect(run.code == kExitOk, "exceptions --g 5 at N=" + std::to_string(n));
    const auto j = json::parse(run.out);
    json minima = json::array();
    for (const auto& m : j["minima"]) minima.push_back({m["h"], m["r"], m["min_age"], m["witnesses"]});
    const std::vector<std::string> digest = {j["exceptions"].dump(), minima.dump()};
    if (base.empty()) base = digest;
    c.expect(digest == base, "catalog and minima at N=" + std::to_string(n) + " match N=12");
    const auto interior = sweep_sym2(5, n);
    c.expect(interior.value == Rational(1), "interior minimum at g=5 unchanged");
  }
  std::size_t orders = 0;
  for (std::int64_t n = 3; n <= 400; ++n) {
    if (12 % n == 0 || totient(n) > 12) continue;
    ++orders;
    const auto s = reduction_support(n, 6);
    c.expect(s.min_age >= Rational(1), "single-orbit sym2 age >= 1 at n=" + std::to_string(n));
  }
  c.expect(orders == 20, "twenty orders n not dividing 12 with phi(n) <= 12");
}

void oracle_criterion(Checker& c) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 100; ++i) {
    const auto a = oracle::sample_signature(rng, 8, 36);
    const auto b = oracle::sample_signature(rng, 8, 36);
    bool ok = false;
    try {
      ok = oracle::crosscheck_functor(a, b, 1e-9);
    } catch (const oracle::OracleFailure&) {
    }
    c.expect(ok, "crosscheck " + a.str() + " x " + b.str());
  }
  const auto run = cli({"oracle", "--samples", "100", "--seed", "7"});
  c.expect(run.code == kExitOk, "oracle --samples 100 exits 0");
  if (run.code == kExitOk) {
    const auto rows = json::parse(run.out)["oracle"];
    c.expect(rows.size() == 100, "100 oracle rows");
    for (const auto& row : rows) c.expect(row["pass"] == true, "oracle row passes");
  }
}

void rst_criterion(Checker& c) {
  c.expect(rst_verdict(Spectrum{kHalf, kHalf}).kind == VerdictKind::canonical_not_terminal, "1/2(1,1)");
  const auto third = rst_verdict(Spectrum{RotationNumber(1, 3), RotationNumber(1, 3)});
  c.expect(third.kind == VerdictKind::not_canonical && third.witness_age == Rational(2, 3), "1/3(1,1)");
  const auto three = rst_verdict(Spectrum{kHalf, kHalf, kHalf});
  c.expect(three.kind == VerdictKind::terminal && three.witness_age == Rational(3, 2), "1/2(1,1,1)");
}

void determinism_criterion(Checker& c) {
  const std::vector<std::vector<std::string>> commands = {
      {"sweep", "--h", "1", "--r", "4"},
      {"sweep", "--g", "6"},
      {"sweep", "--interior", "--g", "7", "--format", "text"},
      {"exceptions", "--g", "6", "--format", "csv"},
      {"exceptions", "--g", "5", "--threshold", "terminal"},
      {"oracle", "--samples", "50", "--seed", "3"},
      {"oracle", "--max-degree", "6"},
      {"sweep", "--h", "1", "--r", "4", "--mode", "unconstrained"}};
  for (const auto& args : commands) {
    const auto a = cli(args);
    const auto b = cli(args);
    c.expect(a.code == b.code && a.out == b.out, "repeat run of " + args[0] + " " + args[1]);
    auto parallel = args;
    if (args[0] != "oracle") {
      parallel.insert(parallel.end(), {"--jobs", "3"});
      c.expect(cli(parallel).out == a.out, "jobs=3 output of " + args[0] + " " + args[1]);
    }
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "exception catalog at g=5,6", 60, exception_catalog_criterion},
      {2, "order-two statement over the same sweeps", 60, order_two_criterion},
      {3, "Sym^2 minima at h=5,6", 60, sym2_criterion},
      {4, "interior verdicts at g=3,5,6,7", 120, interior_criterion},
      {5, "boundary moved count for r=4..8", 1, boundary_criterion},
      {6, "kernel is +-1 for h+r<=6", 60, kernel_criterion},
      {7, "stability in N and single-orbit reduction", 600, reduction_criterion},
      {8, "numeric oracle agreement", 60, oracle_criterion},
      {9, "classical quotient germs", 1, rst_criterion},
      {10, "byte-identical repeat runs", 600, determinism_criterion},
  };

  int failed = 0;
  for (const auto& crit : criteria) {
    Checker checker;
    const auto start = std::chrono::steady_clock::now();
    try {
      crit.body(checker);
    } catch (const std::exception& e) {
      checker.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    checker.expect(seconds < crit.budget_seconds, "time budget exceeded");
    const bool ok = checker.failures().empty();
    failed += !ok;
    std::printf("[%s] criterion %2d: %s (%.2f s)\n", ok ? "PASS" : "FAIL", crit.id, crit.title.c_str(), seconds);
    for (const auto& f : checker.failures()) std::printf("         %s\n", f.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
