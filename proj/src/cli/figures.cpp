#include "qwalk/cli/figures.hpp"

#include <cstdio>
#include <future>
#include <stdexcept>

#include "json.hpp"
#include "qwalk/cli/output.hpp"
#include "qwalk/experiment.hpp"

namespace qwalk::cli {
namespace {

struct PresetData {
  std::string name;
  std::vector<TimelineRecord> timeline;
  SingleWalkerState walker;
};

PresetData compute(const NamedConfig& nc, std::int64_t steps) {
  ExperimentConfig config = nc.config;
  config.steps = steps;
  return {nc.name, run_timeline(config),
          evolve_single(new_single_state(config.coin_init, 0), config.coin_operator, steps)};
}

std::string figure_name(int figure, const char* suffix) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "fig%02d%s.csv", figure, suffix);
  return buf;
}

std::string outcome_csv(const std::vector<TimelineRecord>& timeline, Coin c) {
  std::string out = "step,entropy,max_entropy,ratio\n";
  for (const TimelineRecord& r : timeline) {
    out += std::to_string(r.step) + ',' + format_optional(r.entropy(c)) + ',' + format_number(r.max_entropy) +
           ',' + format_optional(r.ratio(c)) + '\n';
  }
  return out;
}

std::string comparison_csv(const std::vector<TimelineRecord>& timeline) {
  std::string out = "step,entropy0,entropy1,ratio0,ratio1\n";
  for (const TimelineRecord& r : timeline) {
    out += std::to_string(r.step) + ',' + format_optional(r.entropy0) + ',' + format_optional(r.entropy1) + ',' +
           format_optional(r.ratio0) + ',' + format_optional(r.ratio1) + '\n';
  }
  return out;
}

// Every lattice site reachable after `steps` steps from the origin, so the
// histogram has no gaps other than the parity holes.
std::string distribution_csv(const SingleWalkerState& walker) {
  const std::int64_t t = walker.step();
  std::string out = "position,probability\n";
  for (std::int64_t x = -t; x <= t; x += 2) {
    const CoinSpinor s = walker.at(x);
    out += std::to_string(x) + ',' + format_number(std::norm(s.amp0) + std::norm(s.amp1)) + '\n';
  }
  return out;
}

}  // namespace

bool FigureReport::ok() const {
  for (const FigureFile& f : files) {
    if (!f.written) return false;
  }
  return !files.empty();
}

FigureReport generate_figures(const std::filesystem::path& output_dir, std::int64_t steps) {
  if (steps < 1) throw std::invalid_argument("figures: steps must be >= 1");

  const std::vector<NamedConfig> presets = canonical_initial_states();
  std::vector<std::future<PresetData>> jobs;
  jobs.reserve(presets.size());
  for (const NamedConfig& nc : presets) {
    jobs.push_back(std::async(std::launch::async, compute, std::cref(nc), steps));
  }

  FigureReport report;
  std::vector<std::pair<std::size_t, std::string>> contents;
  const auto add = [&](FigureFile f, std::string body) {
    contents.emplace_back(report.files.size(), std::move(body));
    report.files.push_back(std::move(f));
  };

  for (std::size_t k = 0; k < jobs.size(); ++k) {
    const PresetData data = jobs[k].get();
    const int base = static_cast<int>(3 * k);
    const std::string& p = data.name;
    add({figure_name(base + 1, ""), base + 1, "i,ii", p, "c0",
         "entropy and log2(t) bound (i), ratio (ii) for the coin-0 branch", false, ""},
        outcome_csv(data.timeline, Coin::c0));
    add({figure_name(base + 2, ""), base + 2, "i,ii", p, "c1",
         "entropy and log2(t) bound (i), ratio (ii) for the coin-1 branch", false, ""},
        outcome_csv(data.timeline, Coin::c1));
    add({figure_name(base + 3, "_i"), base + 3, "i", p, "-",
         "single-walker position distribution after " + std::to_string(steps) + " steps", false, ""},
        distribution_csv(data.walker));
    add({figure_name(base + 3, "_ii"), base + 3, "ii", p, "both", "entropy and ratio for both coin branches", false, ""},
        comparison_csv(data.timeline));
  }

  std::error_code ec;
  std::filesystem::create_directories(output_dir, ec);

  for (auto& [index, body] : contents) {
    FigureFile& f = report.files[index];
    try {
      write_file_atomic(output_dir / f.file, body);
      f.written = true;
    } catch (const std::exception& e) {
      f.error = e.what();
    }
  }

  nlohmann::json manifest;
  manifest["steps"] = steps;
  manifest["files"] = nlohmann::json::array();
  for (const FigureFile& f : report.files) {
    manifest["files"].push_back({{"file", f.file},
                                 {"figure", f.figure},
                                 {"panels", f.panels},
                                 {"preset", f.preset},
                                 {"outcome", f.outcome},
                                 {"description", f.description}});
  }
  FigureFile mf{"manifest.json", 0, "-", "-", "-", "file to figure map", false, ""};
  try {
    write_file_atomic(output_dir / mf.file, manifest.dump(2) + "\n");
    mf.written = true;
  } catch (const std::exception& e) {
    mf.error = e.what();
  }
  report.files.push_back(std::move(mf));
  return report;
}

}  // namespace qwalk::cli
