#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "paretotrace/app.hpp"
#include "paretotrace/csv.hpp"
#include "paretotrace/run_config.hpp"
#include "paretotrace/svg.hpp"

namespace pareto::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("paretotrace_unit_" + name);
  fs::remove_all(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

json small_qp_config() {
  return json::parse(R"({
    "problem": {"type": "quadratic", "n": 4, "seed": 3},
    "initializer": {"type": "exact-oracle", "lambda0": 0.5},
    "trace": {"method": "rk4", "step": 0.1, "span_backward": 0.5, "span_forward": 0.5},
    "outputs": ["csv", "json", "svg-front", "svg-diagnostics"]
  })");
}

TEST(Csv, DoublesRoundTripExactly) {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, 0.0, 1e-7}) {
    EXPECT_EQ(parse_double(format_double(v)), v);
  }
  EXPECT_EQ(format_double(0.5), "0.5");
  EXPECT_TRUE(std::isnan(parse_double("nan")));
  EXPECT_EQ(parse_double("inf"), std::numeric_limits<double>::infinity());
  EXPECT_THROW(parse_double("1.5x"), InputError);
}

TEST(Csv, TraceRecordsRoundTrip) {
  std::vector<TraceRecord> records(2);
  records[0] = {0.25, Eigen::Vector2d(0.1, -3.0), 1.5, 2.5, 1e-12, 0.75};
  records[1] = {0.5, Eigen::Vector2d(1.0 / 3.0, 7.0), 1.25, 2.75, 3e-11, 0.5};
  std::stringstream s;
  write_trace_csv(s, records);
  const CsvTable table = read_csv(s);
  ASSERT_EQ(table.header, trace_header(2));
  EXPECT_EQ(table.header.front(), "lambda");
  EXPECT_EQ(table.header[1], "x_1");
  EXPECT_EQ(table.header.back(), "min_eig");
  const auto back = records_from_table(table);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[1].x, records[1].x);
  EXPECT_EQ(back[1].grad_norm, records[1].grad_norm);
  EXPECT_THROW(table.column("missing"), InputError);
}

TEST(Svg, TicksAndDocument) {
  const auto ticks = nice_ticks(0.0, 1.0, 5);
  ASSERT_GE(ticks.size(), 3u);
  EXPECT_LE(ticks.front(), 0.0 + 1e-12);
  EXPECT_GE(ticks.back(), 1.0 - 1e-12);
}

TEST(RunConfig, ParsesTheShippedConfigs) {
  for (const auto& entry : fs::directory_iterator(PARETOTRACE_CONFIG_DIR)) {
    if (entry.path().extension() != ".json") continue;
    EXPECT_NO_THROW(load_run_config(entry.path())) << entry.path();
  }
}

TEST(RunConfig, RejectsInvalidDocuments) {
  auto expect_config_error = [](json doc) { EXPECT_THROW(parse_run_config(doc), ConfigError) << doc; };
  json c = small_qp_config();
  c["bogus"] = 1;
  expect_config_error(c);
  c = small_qp_config();
  c["trace"]["lambda_low"] = 0.1;
  expect_config_error(c);  // span and bounds are mutually exclusive
  c = small_qp_config();
  c["problem"]["n"] = -3;
  expect_config_error(c);
  c = small_qp_config();
  c["trace"]["method"] = "rk45";
  expect_config_error(c);
  c = small_qp_config();
  c["outputs"] = json::array({"svg-front"});
  expect_config_error(c);
  c = small_qp_config();
  c["problem"] = json::parse(R"({"type": "shape"})");
  expect_config_error(c);  // exact oracle needs a quadratic problem
  c = small_qp_config();
  c["initializer"]["lambda0"] = 1.5;
  expect_config_error(c);
}

TEST(ParseSteps, ListsOfPositiveNumbers) {
  EXPECT_EQ(parse_steps("0.1,0.05,0.025"), (std::vector<double>{0.1, 0.05, 0.025}));
  EXPECT_THROW(parse_steps("0.1,,0.2"), ConfigError);
  EXPECT_THROW(parse_steps("0.1,-1"), ConfigError);
  EXPECT_THROW(parse_steps(""), ConfigError);
}

TEST(Guarded, MapsErrorsToExitCodes) {
  std::ostringstream err;
  EXPECT_EQ(guarded([] { return 0; }, err), kExitOk);
  EXPECT_TRUE(err.str().empty());
  EXPECT_EQ(guarded([]() -> int { throw ConfigError("bad"); }, err), kExitConfigError);
  const json record = json::parse(err.str());
  EXPECT_EQ(record.at("exit_code"), 2);
  EXPECT_EQ(record.at("message"), "bad");
  err.str("");
  EXPECT_EQ(guarded([]() -> int { throw NumericalError("nan"); }, err), kExitNumericalError);
  EXPECT_EQ(guarded([]() -> int { throw DefinitenessLost(0.5, Vector::Zero(1), -1.0); }, err),
            kExitNumericalError);
}

TEST(RunTrace, WritesArtifactsAndManifest) {
  const fs::path dir = scratch_dir("trace");
  RunOptions o;
  o.output_dir = dir;
  const RunResult r = run_trace(parse_run_config(small_qp_config()), o);
  EXPECT_EQ(r.exit_code, kExitOk);
  for (const char* f : {"trace.csv", "manifest.json", "front.svg", "diagnostics.svg"}) {
    EXPECT_TRUE(fs::exists(dir / f)) << f;
  }
  std::ifstream csv(dir / "trace.csv");
  const CsvTable table = read_csv(csv);
  EXPECT_EQ(table.rows.size(), 11u);
  const json manifest = json::parse(slurp(dir / "manifest.json"));
  EXPECT_EQ(manifest.at("exit_code"), 0);
  EXPECT_TRUE(manifest.contains("gronwall"));
  EXPECT_TRUE(manifest.contains("traces"));
  EXPECT_NE(slurp(dir / "front.svg").find("<svg"), std::string::npos);
  fs::remove_all(dir);
}

TEST(RunTrace, CsvOutputIsDeterministic) {
  const fs::path a = scratch_dir("det_a");
  const fs::path b = scratch_dir("det_b");
  RunOptions o;
  o.output_dir = a;
  run_trace(parse_run_config(small_qp_config()), o);
  o.output_dir = b;
  run_trace(parse_run_config(small_qp_config()), o);
  EXPECT_EQ(slurp(a / "trace.csv"), slurp(b / "trace.csv"));
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST(RunTrace, ArmijoLogsExtraTraces) {
  json c = small_qp_config();
  c["initializer"] = json::parse(
      R"({"type": "armijo", "lambda0": 0.5, "log_iterations": [1, 2], "descent": {"grad_tolerance": 1e-8}})");
  c["outputs"] = json::array({"csv"});
  const fs::path dir = scratch_dir("armijo");
  RunOptions o;
  o.output_dir = dir;
  EXPECT_EQ(run_trace(parse_run_config(c), o).exit_code, kExitOk);
  EXPECT_TRUE(fs::exists(dir / "trace_armijo_k1.csv"));
  EXPECT_TRUE(fs::exists(dir / "trace_armijo_k2.csv"));
  fs::remove_all(dir);
}

TEST(RunOrderStudy, ReportsExactIntegrationForRk4OnQuadratic) {
  json c = small_qp_config();
  c["trace"] = json::parse(R"({"method": "midpoint", "step": 0.1, "lambda_low": 0.5, "lambda_high": 0.9})");
  const fs::path dir = scratch_dir("order");
  RunOptions o;
  o.output_dir = dir;
  const RunResult r = run_order_study(parse_run_config(c), {0.1, 0.05, 0.025}, o);
  EXPECT_EQ(r.exit_code, kExitOk);
  const json study = json::parse(slurp(dir / "order_study.json"));
  ASSERT_TRUE(study.at("slope").is_number());
  EXPECT_NEAR(study.at("slope").get<double>(), 2.0, 0.3);
  c["trace"]["method"] = "rk4";
  run_order_study(parse_run_config(c), {0.1, 0.05, 0.025}, o);
  EXPECT_TRUE(json::parse(slurp(dir / "order_study.json")).at("slope").is_null());
  fs::remove_all(dir);
}

}  // namespace
}  // namespace pareto::cli
