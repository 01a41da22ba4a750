#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <unistd.h>

#include "json.hpp"
#include "qwalk/cli/figures.hpp"
#include "qwalk/cli/output.hpp"
#include "qwalk/cli/run_spec.hpp"
#include "qwalk/cli/verify.hpp"

namespace {

using namespace qwalk;
using namespace qwalk::cli;
namespace fs = std::filesystem;

const char* kMinimal = R"({"coin": {"re0": 1, "im0": 0, "re1": 0, "im1": 0}})";

fs::path scratch_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("qwalk_test_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

TEST(RunSpec, MinimalDefaults) {
  const RunSpec s = parse_run_spec(kMinimal);
  EXPECT_EQ(s.re0, 1.0);
  EXPECT_EQ(s.steps, 1000);
  EXPECT_EQ(s.coin_operator, "hadamard");
  EXPECT_EQ(s.window, 0u);
  EXPECT_FALSE(s.output.has_value());
  EXPECT_EQ(s.format, OutputFormat::csv);
}

TEST(RunSpec, ParseErrors) {
  EXPECT_THROW(parse_run_spec("{"), SpecError);
  EXPECT_THROW(parse_run_spec("[]"), SpecError);
  EXPECT_THROW(parse_run_spec("{}"), SpecError);
  EXPECT_THROW(parse_run_spec(R"({"coin": {"re0": 1, "im0": 0, "re1": 0}})"), SpecError);
  EXPECT_THROW(parse_run_spec(R"({"coin": {"re0": "1", "im0": 0, "re1": 0, "im1": 0}})"), SpecError);
  EXPECT_THROW(parse_run_spec(R"({"coin": {"re0": 1, "im0": 0, "re1": 0, "im1": 0}, "steps": 1.5})"), SpecError);
  EXPECT_THROW(parse_run_spec(R"({"coin": {"re0": 1, "im0": 0, "re1": 0, "im1": 0}, "window": -1})"), SpecError);
  EXPECT_THROW(parse_run_spec(R"({"coin": {"re0": 1, "im0": 0, "re1": 0, "im1": 0}, "format": "xml"})"), SpecError);
  EXPECT_THROW(parse_run_spec(R"({"coin": {"re0": 1, "im0": 0, "re1": 0, "im1": 0}, "stepz": 3})"), SpecError);
  EXPECT_THROW(parse_run_spec(R"({"coin": {"re0": 1, "im0": 0, "re1": 0, "im1": 0}, "coin_matrix": [1]})"),
               SpecError);
  EXPECT_THROW(load_run_spec("/nonexistent/spec.json"), SpecError);
}

TEST(RunSpec, ToConfigErrors) {
  RunSpec s = parse_run_spec(kMinimal);
  EXPECT_NO_THROW(to_config(s));
  s.steps = 0;
  EXPECT_THROW(to_config(s), SpecError);
  s.steps = 10;
  s.window = 11;
  EXPECT_THROW(to_config(s), SpecError);
  s.window = 0;
  s.re1 = 1.0;
  EXPECT_THROW(to_config(s), SpecError);
  s.re1 = 0.0;
  s.coin_operator = "grover";
  EXPECT_THROW(to_config(s), SpecError);
  s.coin_operator = "matrix";
  EXPECT_THROW(to_config(s), SpecError);
  s.coin_matrix = std::array<double, 8>{1, 0, 1, 0, 1, 0, 1, 0};
  EXPECT_THROW(to_config(s), SpecError);
  s.coin_matrix = std::array<double, 8>{0, 0, 1, 0, 1, 0, 0, 0};
  EXPECT_NO_THROW(to_config(s));
  s.coin_operator = "hadamard";
  EXPECT_THROW(to_config(s), SpecError);
}

TEST(RunSpec, ApplyPreset) {
  RunSpec s = parse_run_spec(kMinimal);
  apply_preset(s, "4c");
  EXPECT_NEAR(s.re0, 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(s.im1, 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_THROW(apply_preset(s, "zz"), SpecError);
}

// Random specs survive dump -> parse unchanged.
TEST(RunSpec, RoundTrip) {
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_int_distribution<std::int64_t> pos(-50, 50), steps(1, 5000);
  for (int trial = 0; trial < 200; ++trial) {
    RunSpec s;
    s.re0 = u(rng);
    s.im0 = u(rng);
    s.re1 = u(rng);
    s.im1 = u(rng);
    s.start_position = pos(rng);
    s.steps = steps(rng);
    s.window = static_cast<std::size_t>(trial % 7);
    if (trial % 3 == 0) {
      s.coin_operator = "matrix";
      std::array<double, 8> m;
      for (double& v : m) v = u(rng);
      s.coin_matrix = m;
    }
    if (trial % 2 == 0) s.output = "out_" + std::to_string(trial) + ".csv";
    s.format = trial % 5 == 0 ? OutputFormat::json : OutputFormat::csv;
    ASSERT_EQ(parse_run_spec(dump_run_spec(s)), s) << dump_run_spec(s);
  }
}

TEST(Output, FormatNumber) {
  EXPECT_EQ(format_number(0.0), "0");
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(1.0), "1");
  EXPECT_EQ(format_number(0.75), "0.75");
  EXPECT_EQ(format_number(1.2516291673878228), "1.25162916739");
  EXPECT_EQ(format_number(1e-20), "1e-20");
  EXPECT_EQ(format_optional(std::nullopt), "");
}

TEST(Output, TimelineCsv) {
  ExperimentConfig config = preset("4a");
  config.steps = 3;
  const std::string csv = timeline_csv(run_timeline(config));
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, kTimelineHeader);
  std::getline(in, line);
  EXPECT_EQ(line, "1,0.5,0.5,0,0,0,,");
  std::getline(in, line);
  EXPECT_EQ(line, "2,0.5,0.5,1,1,1,1,1");
  std::getline(in, line);
  EXPECT_EQ(line, "3,0.75,0.25,1.25162916739,1,1.58496250072,0.789690082143,0.630929753571");
  EXPECT_FALSE(std::getline(in, line));
}

TEST(Output, RunJsonHasNullForAbsentValues) {
  ExperimentConfig config = preset("4a");
  config.steps = 20;
  const auto tl = run_timeline(config);
  RunSpec spec = parse_run_spec(kMinimal);
  spec.steps = 20;
  const auto summary = summarize(tl, 0);
  EXPECT_EQ(summary.window, 2u);
  const auto doc = nlohmann::json::parse(run_json(spec, summary, tl));
  EXPECT_TRUE(doc["timeline"][0]["ratio0"].is_null());
  EXPECT_EQ(doc["timeline"].size(), 20u);
  EXPECT_NEAR(doc["summary"]["asymptotic_ratio0"].get<double>(), *summary.asymptotic_ratio0, 1e-15);
  EXPECT_EQ(doc["spec"]["steps"], 20);
  const auto sj = nlohmann::json::parse(summary_json(spec, summary));
  EXPECT_EQ(sj["summary"]["window"], 2);
}

TEST(Output, WriteFileAtomic) {
  const fs::path dir = scratch_dir("atomic");
  write_file_atomic(dir / "a.txt", "first");
  write_file_atomic(dir / "a.txt", "second");
  EXPECT_EQ(slurp(dir / "a.txt"), "second");
  EXPECT_FALSE(fs::exists(dir / "a.txt.tmp"));
  EXPECT_THROW(write_file_atomic(dir / "missing" / "a.txt", "x"), std::runtime_error);
  fs::remove_all(dir);
}

TEST(Figures, DeterministicAndComplete) {
  const fs::path a = scratch_dir("fig_a"), b = scratch_dir("fig_b");
  const FigureReport ra = generate_figures(a, 40);
  const FigureReport rb = generate_figures(b, 40);
  ASSERT_TRUE(ra.ok());
  ASSERT_TRUE(rb.ok());
  ASSERT_EQ(ra.files.size(), 21u);
  for (const FigureFile& f : ra.files) EXPECT_EQ(slurp(a / f.file), slurp(b / f.file)) << f.file;
  EXPECT_TRUE(fs::exists(a / "fig01.csv"));
  EXPECT_TRUE(fs::exists(a / "fig15_ii.csv"));

  std::istringstream dist(slurp(a / "fig03_i.csv"));
  std::string line;
  std::getline(dist, line);
  EXPECT_EQ(line, "position,probability");
  int rows = 0;
  while (std::getline(dist, line)) ++rows;
  EXPECT_EQ(rows, 41);

  const auto manifest = nlohmann::json::parse(slurp(a / "manifest.json"));
  EXPECT_EQ(manifest["files"].size(), 20u);
  EXPECT_EQ(manifest["files"][8]["preset"], "4c");
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST(Figures, ReportsUnwritableDirectory) {
  const fs::path dir = scratch_dir("fig_blocked");
  std::ofstream(dir / "blocker") << "x";
  const FigureReport r = generate_figures(dir / "blocker" / "out", 5);
  EXPECT_FALSE(r.ok());
  for (const FigureFile& f : r.files) {
    EXPECT_FALSE(f.written);
    EXPECT_FALSE(f.error.empty());
  }
  EXPECT_THROW(generate_figures(dir, 0), std::invalid_argument);
  fs::remove_all(dir);
}

TEST(Verify, CleanEnginePasses) {
  const VerifyReport r = run_verification(6);
  EXPECT_TRUE(r.all_passed()) << r.render();
  EXPECT_THROW(run_verification(0), std::invalid_argument);
  EXPECT_THROW(run_verification(kMaxVerifyDepth + 1), std::invalid_argument);
}

TEST(Verify, EveryMutantIsCaught) {
  for (const char* name : {"mirror-shift", "phase-kick", "amplitude-leak"}) {
    const auto m = parse_mutant(name);
    ASSERT_TRUE(m.has_value()) << name;
    EXPECT_FALSE(run_verification(4, *m).all_passed()) << name;
  }
  EXPECT_EQ(parse_mutant("none"), Mutant::none);
  EXPECT_FALSE(parse_mutant("bogus").has_value());
}

}  // namespace
