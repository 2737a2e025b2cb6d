#include "jetapprox/lift.hpp"
#include "jetapprox/scenario.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace jetapprox;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const fs::path kScenarios = JETAPPROX_SCENARIO_DIR;

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "jetapprox_tests";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  fs::remove(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

fs::path write_scenario(const std::string& name, const json& j) {
  const fs::path p = scratch(name);
  std::ofstream(p) << j.dump(2);
  return p;
}

int run_cmd(const std::string& cmd, const fs::path& scenario, const fs::path& out, std::string* err = nullptr,
            std::optional<std::uint64_t> seed = std::nullopt) {
  RunOptions opt;
  opt.scenario = scenario;
  opt.out = out;
  opt.seed = seed;
  std::ostringstream es;
  const int rc = run(cmd, opt, es);
  if (err) *err = es.str();
  return rc;
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("parsers") {
  CHECK(parse_complex(json(2.5)) == Complex(2.5));
  CHECK(parse_complex(json::array({1.0, -2.0})) == Complex(1.0, -2.0));
  CHECK_THROWS_AS(parse_complex(json("x")), Error);

  const auto disk = parse_set(json{{"kind", "disk"}, {"radius", 2.0}, {"samples", 64}});
  CHECK(disk.samples.size() == 64);
  CHECK(disk.connectorBound == doctest::Approx(4.0));
  const auto seg = parse_set(json{{"kind", "segment"}, {"points", {json::array({0, 0}), json::array({0, 2})}}});
  CHECK(seg.samples.back() == Complex(0.0, 2.0));
  CHECK_THROWS_AS(parse_set(json{{"kind", "blob"}}), Error);

  const auto rat = parse_oracle(json{{"kind", "rational"},
                                     {"poly", {1.0, 0.0}},
                                     {"parts", {{{"pole", json::array({1, 0})}, {"coeffs", {{"2", 3.0}}}}}}},
                                nullptr, nullptr);
  CHECK(std::abs(rat(0.0) - 4.0) < 1e-15);
  SetParams p;
  p.points = {0.0, 0.5, 1.0};
  const auto pts = make_set(SetKind::Countable, p);
  const auto tab2 = parse_oracle(json{{"kind", "tabulated"}, {"values", json::array({1.0, 2.0, 3.0})}}, &pts, nullptr);
  CHECK(tab2(0.5) == Complex(2.0));
  CHECK_THROWS_AS(parse_oracle(json{{"kind", "tabulated"}, {"values", json::array({1.0})}}, nullptr, nullptr), Error);
  CHECK_THROWS_AS(parse_oracle(json("gamma"), nullptr, nullptr), Error);

  const Jet j = parse_jet(json{{"oracle", "sin"}, {"order", 2}}, nullptr, nullptr);
  CHECK(j.order() == 2);
  CHECK(std::abs(j.components[2](0.3) + std::sin(0.3)) < 1e-15);

  std::mt19937_64 a(5), b(5);
  const auto r1 = parse_oracle(json{{"kind", "random-rational"}}, nullptr, &a);
  const auto r2 = parse_oracle(json{{"kind", "random-rational"}}, nullptr, &b);
  CHECK(r1(Complex(3.1, 2.9)) == r2(Complex(3.1, 2.9)));
}

TEST_CASE("approx-jet scenario matches the library run") {
  const auto out = scratch("disk_exp.csv");
  REQUIRE(run_cmd("approx-jet", kScenarios / "disk_exp.json", out) == kExitOk);
  const auto rows = csv_rows(slurp(out));
  REQUIRE(rows.size() == 1 + 5 * 4);
  CHECK(rows[0] == std::vector<std::string>{"configIndex", "degree", "poleDegree", "k", "seminormError", "dValue", "tailBound"});

  const auto set = make_set(SetKind::Disk, SetParams{});
  ApproxConfig base;
  base.method = ApproxMethod::Taylor;
  const auto run = approximate_jet(jet_of(FunctionOracle::exp(), 3), set, degree_schedule(5, 25, 5, base));
  for (std::size_t i = 0; i < run.entries.size(); ++i)
    for (std::size_t k = 0; k < 4; ++k) {
      const auto& row = rows[1 + 4 * i + k];
      CHECK(std::stod(row[4]) == run.entries[i].lift.seminormErrors[k]);
      CHECK(std::stod(row[5]) == run.entries[i].dValue);
    }
  const json summary = json::parse(slurp(fs::path(out).replace_extension(".summary.json")));
  CHECK(summary["entries"][4]["dValue"].get<double>() == run.entries[4].dValue);

  const auto again = scratch("disk_exp_again.csv");
  REQUIRE(run_cmd("approx-jet", kScenarios / "disk_exp.json", again) == kExitOk);
  CHECK(slurp(out) == slurp(again));
}

TEST_CASE("gamma-check scenario exits with the defect code") {
  const auto out = scratch("decoupled.csv");
  std::string err;
  CHECK(run_cmd("gamma-check", kScenarios / "segment_decoupled.json", out, &err) == kExitDefect);
  const json summary = json::parse(slurp(fs::path(out).replace_extension(".summary.json")));
  CHECK(summary["maxDefect"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(json::parse(err.substr(0, err.find('\n')))["exitCode"] == kExitDefect);
}

TEST_CASE("validation failures write nothing") {
  const auto bad = scratch("broken.json");
  std::ofstream(bad) << "{ \"experiment\": \"approx-jet\", ";
  const auto out = scratch("broken.csv");
  std::string err;
  CHECK(run_cmd("approx-jet", bad, out, &err) == kExitValidation);
  CHECK_FALSE(fs::exists(out));
  CHECK(json::parse(err.substr(0, err.find('\n')))["error"] == "Validation");

  CHECK(run_cmd("countable", kScenarios / "disk_exp.json", out) == kExitValidation);
  CHECK(run_cmd("fly", kScenarios / "disk_exp.json", out) == kExitValidation);
  CHECK(run_cmd("approx-jet", scratch("missing.json"), out) == kExitValidation);
  const auto noSet = write_scenario("noset.json", json{{"experiment", "metric"}, {"jet", {{"oracle", "exp"}}}});
  CHECK(run_cmd("metric", noSet, out) == kExitValidation);
  CHECK_FALSE(fs::exists(out));
}

TEST_CASE("numerical failures use their own code") {
  const json sc{{"experiment", "approx-jet"},
                {"set", {{"kind", "segment"}, {"samples", 64}}},
                {"jet", {{"oracle", "exp"}, {"order", 1}}},
                {"schedule", {{"method", "least-squares"}, {"from", 15}, {"to", 15}, {"failOnIllConditioned", true}}}};
  const auto out = scratch("ill.csv");
  CHECK(run_cmd("approx-jet", write_scenario("ill.json", sc), out) == kExitNumerical);

  json lenient = sc;
  lenient["schedule"]["failOnIllConditioned"] = false;
  CHECK(run_cmd("approx-jet", write_scenario("ill2.json", lenient), out) == kExitOk);

  const json winding{{"experiment", "winding"},
                     {"curve", {{"vertices", {json::array({-1, -1}), json::array({1, -1}), json::array({1, 1}),
                                              json::array({-1, 1}), json::array({-1, -1})}},
                                {"closed", true}}},
                     {"points", {json::array({1, 0})}}};
  CHECK(run_cmd("winding", write_scenario("onedge.json", winding), out) == kExitNumerical);
}

TEST_CASE("other experiments") {
  const auto out = scratch("countable.csv");
  REQUIRE(run_cmd("countable", kScenarios / "countable_uncoupled.json", out) == kExitOk);
  const auto rows = csv_rows(slurp(out));
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const int s = std::stoi(rows[i][1]);
    if (s <= 2) CHECK(std::stod(rows[i][2]) <= std::stod(rows[i][3]));
  }

  const json metric{{"experiment", "metric"},
                    {"set", {{"kind", "disk"}}},
                    {"jet", {{"oracle", {{"kind", "rational"}, {"poly", {0.0, 1.0}}}}, {"order", 10}}},
                    {"other", {{"oracle", "zero"}, {"order", 10}}},
                    {"nMax", 10}};
  const auto mout = scratch("metric.csv");
  REQUIRE(run_cmd("metric", write_scenario("metric.json", metric), mout) == kExitOk);
  const json ms = json::parse(slurp(fs::path(mout).replace_extension(".summary.json")));
  CHECK(ms["value"].get<double>() == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(ms["tailBound"].get<double>() == std::ldexp(1.0, -10));

  const json winding{{"experiment", "winding"},
                     {"curve", {{"circle", {{"radius", 1.0}, {"turns", 2}}}}},
                     {"points", {0.0, 3.0}}};
  const auto wout = scratch("winding.csv");
  REQUIRE(run_cmd("winding", write_scenario("winding.json", winding), wout) == kExitOk);
  const auto wrows = csv_rows(slurp(wout));
  CHECK(wrows[1][2] == "2");
  CHECK(wrows[2][2] == "0");

  const json random{{"experiment", "gamma-check"},
                    {"set", {{"kind", "disk"}, {"samples", 64}}},
                    {"jet", {{"oracle", {{"kind", "random-rational"}, {"poleRadius", 0.4}}}, {"order", 1}}},
                    {"check", {{"threshold", 1e-6}}}};
  const auto r1 = scratch("random1.csv"), r2 = scratch("random2.csv");
  const auto path = write_scenario("random.json", random);
  const int a = run_cmd("gamma-check", path, r1, nullptr, 99);
  const int b = run_cmd("gamma-check", path, r2, nullptr, 99);
  CHECK(a == b);
  if (a == kExitOk) CHECK(slurp(r1) == slurp(r2));
}
