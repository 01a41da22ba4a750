// qwalk: entanglement between two walkers sharing one coin.
//
//   qwalk run --preset 4a --steps 1000 -o timeline.csv
//   qwalk run --spec run.json
//   qwalk figures out/
//   qwalk verify --depth 12

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qwalk/cli/figures.hpp"
#include "qwalk/cli/output.hpp"
#include "qwalk/cli/run_spec.hpp"
#include "qwalk/cli/verify.hpp"
#include "qwalk/simd.hpp"

namespace {

using namespace qwalk;
using namespace qwalk::cli;

struct RunOptions {
  std::string spec_path;
  std::string preset;
  std::vector<double> coin;
  std::optional<std::int64_t> position;
  std::optional<std::int64_t> steps;
  std::optional<std::size_t> window;
  std::string output;
  std::string format;
  std::string coin_operator;
  std::string write_spec;
};

int cmd_run(const RunOptions& opt) {
  RunSpec spec;
  if (!opt.spec_path.empty()) spec = load_run_spec(opt.spec_path);
  if (!opt.preset.empty()) apply_preset(spec, opt.preset);
  if (!opt.coin.empty()) {
    if (opt.coin.size() != 4) throw SpecError("--coin takes four numbers: re0 im0 re1 im1");
    spec.re0 = opt.coin[0];
    spec.im0 = opt.coin[1];
    spec.re1 = opt.coin[2];
    spec.im1 = opt.coin[3];
  }
  if (opt.position) spec.start_position = *opt.position;
  if (opt.steps) spec.steps = *opt.steps;
  if (opt.window) spec.window = *opt.window;
  if (!opt.output.empty()) spec.output = opt.output;
  if (!opt.format.empty()) spec.format = parse_format(opt.format);
  if (!opt.coin_operator.empty()) spec.coin_operator = opt.coin_operator;

  const ExperimentConfig config = to_config(spec);
  if (!opt.write_spec.empty()) write_file_atomic(opt.write_spec, dump_run_spec(spec));

  const std::vector<TimelineRecord> timeline = run_timeline(config);
  const RunSummary summary = summarize(timeline, spec.window);

  const std::string body =
      spec.format == OutputFormat::csv ? timeline_csv(timeline) : run_json(spec, summary, timeline);
  if (spec.output) {
    write_file_atomic(*spec.output, body);
    if (spec.format == OutputFormat::csv) write_file_atomic(*spec.output + ".summary.json", summary_json(spec, summary));
    std::cout << summary_json(spec, summary);
  } else {
    std::cout << body;
    if (spec.format == OutputFormat::csv) std::cerr << summary_json(spec, summary);
  }
  return EXIT_SUCCESS;
}

int cmd_figures(const std::string& dir, std::int64_t steps) {
  const FigureReport report = generate_figures(dir, steps);
  for (const FigureFile& f : report.files) {
    if (f.written) {
      std::cout << "wrote " << f.file << "\n";
    } else {
      std::cerr << "failed " << f.file << ": " << f.error << "\n";
    }
  }
  return report.ok() ? EXIT_SUCCESS : EXIT_FAILURE;
}

int cmd_verify(int depth, const std::string& mutant_name) {
  const auto mutant = parse_mutant(mutant_name);
  if (!mutant) throw std::invalid_argument("unknown mutant '" + mutant_name + "'");
  const VerifyReport report = run_verification(depth, *mutant);
  std::cout << "kernels: " << simd::isa_name(simd::active_isa()) << "\n" << report.render();
  return report.all_passed() ? EXIT_SUCCESS : EXIT_FAILURE;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-walker Hadamard quantum walk: per-step entanglement after a coin measurement"};
  app.require_subcommand(1);

  std::string isa = "auto";
  app.add_option("--isa", isa, "kernel set: auto, scalar, avx2 or neon")->capture_default_str();

  RunOptions run;
  auto* run_cmd = app.add_subcommand("run", "compute the entanglement timeline of one initial state");
  run_cmd->add_option("--spec", run.spec_path, "JSON run spec");
  run_cmd->add_option("-p,--preset", run.preset, "initial state preset 4a..4e");
  run_cmd->add_option("--coin", run.coin, "coin amplitudes re0 im0 re1 im1")->expected(4);
  run_cmd->add_option("--position", run.position, "start position");
  run_cmd->add_option("-n,--steps", run.steps, "number of steps (>= 1)");
  run_cmd->add_option("-w,--window", run.window, "asymptotic window (default: last 10%)");
  run_cmd->add_option("-o,--output", run.output, "output path (default: standard output)");
  run_cmd->add_option("-f,--format", run.format, "csv or json");
  run_cmd->add_option("--coin-operator", run.coin_operator, "hadamard or matrix (with a spec file)");
  run_cmd->add_option("--write-spec", run.write_spec, "also save the resolved run spec here");

  std::string fig_dir = "figures";
  std::int64_t fig_steps = 1000;
  auto* fig_cmd = app.add_subcommand("figures", "write plot data for every preset and the manifest");
  fig_cmd->add_option("dir", fig_dir, "output directory")->capture_default_str();
  fig_cmd->add_option("-n,--steps", fig_steps, "walk length")->capture_default_str();

  int depth = kDefaultVerifyDepth;
  std::string mutant = "none";
  auto* verify_cmd = app.add_subcommand("verify", "check the engine against analytic values and oracles");
  verify_cmd->add_option("-d,--depth", depth, "largest t compared against the oracles")->capture_default_str();
  verify_cmd->add_option("--mutant", mutant, "run a deliberately broken engine (testing)")
      ->group("Testing")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (isa == "scalar") {
      simd::force_isa(simd::Isa::scalar);
    } else if (isa == "avx2") {
      simd::force_isa(simd::Isa::avx2);
    } else if (isa == "neon") {
      simd::force_isa(simd::Isa::neon);
    } else if (isa != "auto") {
      throw std::invalid_argument("unknown --isa '" + isa + "'");
    }

    if (*run_cmd) return cmd_run(run);
    if (*fig_cmd) return cmd_figures(fig_dir, fig_steps);
    if (*verify_cmd) return cmd_verify(depth, mutant);
  } catch (const std::exception& e) {
    std::cerr << "qwalk: " << e.what() << "\n";
    return EXIT_FAILURE;
  }
  return EXIT_FAILURE;
}
