#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rtage/criterion.hpp"

namespace rtage {

struct ReportConfig {
  std::string command;
  std::optional<int> h;
  std::optional<int> r;
  std::optional<int> g;
  bool interior = false;
  std::int64_t order_divides = 12;
  std::string mode = "integral-both";
  std::string threshold = "canonical";
  std::optional<std::int64_t> samples;
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> max_degree;

  bool operator==(const ReportConfig&) const = default;
};

struct ClassRef {
  Spectrum w_spec;
  Spectrum lambda_spec;
  bool operator==(const ClassRef&) const = default;
};

struct MinimumRow {
  int h = 0;
  int r = 0;
  std::optional<Rational> min_age;
  std::vector<ClassRef> witnesses;
  std::size_t classes = 0;
  bool operator==(const MinimumRow&) const = default;
};

struct ExceptionRow {
  int h = 0;
  int r = 0;
  Spectrum w_spec;
  Spectrum lambda_spec;
  Rational age_sym2;
  Rational age_tensor;
  Rational age_v;
  bool matches_iii = false;
  bool operator==(const ExceptionRow&) const = default;
};

/// Interior classification at genus g (h = g, r = 0).
struct VerdictRow {
  int g = 0;
  std::string verdict;
  std::optional<Rational> min_age;
  std::vector<Spectrum> witnesses;
  std::size_t classes = 0;
  bool operator==(const VerdictRow&) const = default;
};

/// Pure-torus stratum (h = 0): age of the induced action on B(Lambda).
struct TorusRow {
  int r = 0;
  std::optional<Rational> min_forms_age;
  std::vector<Spectrum> witnesses;
  std::size_t classes = 0;
  bool operator==(const TorusRow&) const = default;
};

struct OracleRow {
  std::string a_sig;
  std::string b_sig;
  bool pass = false;
  std::string detail;
  bool operator==(const OracleRow&) const = default;
};

struct ViolationRow {
  std::string proposition;
  int h = 0;
  int r = 0;
  Spectrum w_spec;
  Spectrum lambda_spec;
  Rational age_v;
  std::string detail;
  bool operator==(const ViolationRow&) const = default;
};

/// One run's canonical output. Rows are kept sorted so that identical
/// configurations serialize to identical bytes.
struct Report {
  ReportConfig config;
  std::vector<MinimumRow> minima;
  std::vector<ExceptionRow> exceptions;
  std::vector<VerdictRow> verdicts;
  std::vector<TorusRow> torus;
  std::vector<OracleRow> oracle;
  std::vector<ViolationRow> violations;

  bool operator==(const Report&) const = default;

  void add(const VSweep& sweep);
  void add(const InteriorSummary& interior);
  void add(const TorusSummary& torus_summary);
  void add(const PropositionViolation& violation);
  void sort_rows();
};

nlohmann::json to_json(const Report& report);
Report report_from_json(const nlohmann::json& j);

std::string render_json(const Report& report);
std::string render_csv(const Report& report);
std::string render_text(const Report& report);

}  // namespace rtage
