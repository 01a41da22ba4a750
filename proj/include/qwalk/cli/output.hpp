#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "qwalk/cli/run_spec.hpp"
#include "qwalk/experiment.hpp"

namespace qwalk::cli {

// Twelve significant digits, so data files are diff-stable.
std::string format_number(double v);
std::string format_optional(const std::optional<double>& v);

inline constexpr const char* kTimelineHeader = "step,p0,p1,entropy0,entropy1,max_entropy,ratio0,ratio1";

std::string timeline_csv(const std::vector<TimelineRecord>& timeline);

struct RunSummary {
  std::int64_t steps = 0;
  std::size_t window = 0;
  std::optional<double> asymptotic_ratio0;
  std::optional<double> asymptotic_ratio1;
};

RunSummary summarize(const std::vector<TimelineRecord>& timeline, std::size_t window);

// {"spec": ..., "summary": ...}
std::string summary_json(const RunSpec& spec, const RunSummary& summary);

// {"spec": ..., "summary": ..., "timeline": [...]}, absent values as null.
std::string run_json(const RunSpec& spec, const RunSummary& summary,
                     const std::vector<TimelineRecord>& timeline);

// Writes to a sibling temporary file and renames it over `path`. Throws
// std::runtime_error on failure.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace qwalk::cli
