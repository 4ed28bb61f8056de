#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "rtage/cli.hpp"
#include "rtage/report.hpp"

using namespace rtage;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "rtage");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(const std::vector<std::string>& args) {
  const auto r = run(args);
  REQUIRE(r.code == kExitOk);
  return json::parse(r.out);
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("report JSON layout") {
  const auto j = run_json({"sweep", "--h", "1", "--r", "4", "--order-divides", "12"});
  for (const char* key : {"config", "minima", "exceptions", "verdicts", "torus", "oracle", "violations"})
    CHECK(j.contains(key));
  REQUIRE(j["exceptions"].size() == 1);
  const auto& e = j["exceptions"][0];
  CHECK(e["h"] == 1);
  CHECK(e["r"] == 4);
  CHECK(e["age_v"] == "1/2");
  CHECK(e["w_spec"] == json::array({"1/2"}));
  CHECK(e["lambda_spec"] == json::array({"0/1", "1/2", "1/2", "1/2"}));
  CHECK(e["matches_iii"] == true);
  CHECK(j["violations"].empty());
  REQUIRE(j["minima"].size() == 1);
  CHECK(j["minima"][0]["min_age"] == "1/2");
  CHECK(j["config"]["order_divides"] == 12);
}

TEST_CASE("reports round-trip through JSON") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"sweep", "--h", "2", "--r", "3"}, {"sweep", "--g", "5"}, {"sweep", "--interior", "--g", "4"},
        {"exceptions", "--g", "5", "--threshold", "terminal"}, {"oracle", "--samples", "5", "--seed", "3"},
        {"sweep", "--h", "0", "--r", "3"}}) {
    const auto j = run_json(args);
    const Report rep = report_from_json(j);
    CHECK(to_json(rep) == j);
    CHECK(report_from_json(to_json(rep)) == rep);
    CHECK(render_json(rep) == run(args).out);
  }
  Report v;
  v.config.command = "sweep";
  v.add(PropositionViolation("ii", canonical_class(Spectrum{RotationNumber(1, 2)}, Spectrum{RotationNumber(1, 3)}, 12),
                             Rational(5, 6), "order 6"));
  CHECK(report_from_json(to_json(v)) == v);
  CHECK(v.violations.at(0).proposition == "ii");
}

TEST_CASE("sweep examples") {
  CHECK(run_json({"sweep", "--h", "1", "--r", "4", "--order-divides", "12"})["exceptions"].size() == 1);
  CHECK(run_json({"sweep", "--h", "2", "--r", "4", "--order-divides", "12"})["exceptions"].empty());
  const auto interior = run_json({"sweep", "--interior", "--g", "6"});
  REQUIRE(interior["verdicts"].size() == 1);
  CHECK(interior["verdicts"][0]["verdict"] == "terminal");
  CHECK(interior["verdicts"][0]["min_age"] == "7/6");
  CHECK(run_json({"sweep", "--interior", "--g", "5"})["verdicts"][0]["verdict"] == "canonical-not-terminal");
  CHECK(run_json({"sweep", "--interior", "--g", "3"})["verdicts"][0]["verdict"] == "not-canonical");

  const auto g5 = run_json({"sweep", "--g", "5"});
  CHECK(g5["minima"].size() == 5);
  CHECK(g5["torus"].size() == 1);
  CHECK(g5["exceptions"].size() == 1);
}

TEST_CASE("exception catalogs") {
  for (const char* g : {"5", "6"}) {
    const auto j = run_json({"exceptions", "--g", g});
    REQUIRE(j["exceptions"].size() == 1);
    CHECK(j["exceptions"][0]["h"] == 1);
    CHECK(j["exceptions"][0]["r"] == std::stoi(g) - 1);
    CHECK(j["exceptions"][0]["age_v"] == "1/2");
  }
  const auto n12 = run_json({"exceptions", "--g", "6"});
  const auto n24 = run_json({"exceptions", "--g", "6", "--order-divides", "24"});
  CHECK(n12["exceptions"] == n24["exceptions"]);
  for (std::size_t i = 0; i < n12["minima"].size(); ++i)
    CHECK(n12["minima"][i]["min_age"] == n24["minima"][i]["min_age"]);
}

TEST_CASE("oracle examples") {
  const auto hundred = run_json({"oracle", "--samples", "100", "--seed", "7"});
  CHECK(hundred["oracle"].size() == 100);
  for (const auto& row : hundred["oracle"]) CHECK(row["pass"] == true);
  CHECK(hundred["config"]["seed"] == 7);

  const auto none = run_json({"oracle", "--samples", "0"});
  CHECK(none["oracle"].empty());
  CHECK(none["violations"].empty());

  const auto all = run_json({"oracle", "--max-degree", "8"});
  std::size_t expect = 0;
  for (std::int64_t d = 1; d <= 8; ++d) expect += cyclotomic_signatures(d, 36).size();
  CHECK(all["oracle"].size() == expect);
  for (const auto& row : all["oracle"]) CHECK(row["pass"] == true);
}

TEST_CASE("usage errors exit 2") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{}, {"sweep"}, {"sweep", "--h", "1", "--g", "5"}, {"sweep", "--interior"},
        {"sweep", "--interior", "--g", "5", "--h", "2"}, {"sweep", "--h", "1", "--mode", "loose"},
        {"sweep", "--h", "1", "--order-divides", "0"}, {"sweep", "--h", "1", "--format", "xml"},
        {"exceptions"}, {"oracle", "--samples", "-1"}, {"oracle", "--max-degree", "13"}, {"frobnicate"},
        {"sweep", "--h", "-1"}}) {
    const auto r = run(args);
    CHECK(r.code == kExitUsage);
    CHECK(r.out.empty());
  }
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("violations exit 3 and name the class") {
  const auto r = run({"sweep", "--h", "1", "--r", "4", "--mode", "unconstrained"});
  CHECK(r.code == kExitViolation);
  CHECK(r.err.find("violation") != std::string::npos);
  const auto j = json::parse(r.out);
  REQUIRE(j["violations"].size() == 1);
  CHECK(j["violations"][0]["proposition"] == "ii");
  CHECK(j["violations"][0]["w_spec"] == json::array({"1/2"}));
  CHECK(j["violations"][0]["lambda_spec"] == json::array({"0/1", "1/2", "1/2", "2/3"}));

  const auto l = run({"exceptions", "--g", "5", "--mode", "integral-lambda-only"});
  CHECK(l.code == kExitViolation);
  CHECK_FALSE(json::parse(l.out)["violations"].empty());
}

TEST_CASE("csv and text renderings") {
  const auto csv = run({"sweep", "--h", "1", "--r", "4", "--format", "csv"});
  CHECK(csv.code == kExitOk);
  CHECK(csv.out.rfind("section,h,r,g,w_spec,lambda_spec,age,info\n", 0) == 0);
  CHECK(csv.out.find("1/2") != std::string::npos);
  const auto text = run({"exceptions", "--g", "5", "--format", "text"});
  CHECK(text.code == kExitOk);
  CHECK(text.out.find("exceptional shape") != std::string::npos);
  const auto oracle_text = run({"oracle", "--samples", "3", "--format", "text"});
  CHECK(oracle_text.code == kExitOk);
  CHECK(oracle_text.out.find("samples") != std::string::npos);
}

TEST_CASE("identical flags give identical bytes") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"sweep", "--g", "6"}, {"exceptions", "--g", "5", "--format", "csv"},
        {"oracle", "--samples", "20", "--seed", "11"}, {"sweep", "--interior", "--g", "6", "--format", "text"}})
    CHECK(run(args).out == run(args).out);

  const auto a = run({"exceptions", "--g", "6", "--jobs", "1"}).out;
  const auto b = run({"exceptions", "--g", "6", "--jobs", "4"}).out;
  CHECK(a == b);
}

TEST_CASE("--out writes the report to a file") {
  const auto path = std::filesystem::temp_directory_path() / "rtage_report_test.json";
  std::filesystem::remove(path);
  const auto r = run({"sweep", "--h", "1", "--r", "4", "--out", path.string()});
  CHECK(r.code == kExitOk);
  CHECK(r.out.empty());
  const auto j = json::parse(read_file(path));
  CHECK(j["exceptions"].size() == 1);
  std::filesystem::remove(path);
}
