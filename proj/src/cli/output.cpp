#include "qwalk/cli/output.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include "json.hpp"

namespace qwalk::cli {
namespace {

using nlohmann::json;

json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json summary_object(const RunSummary& s) {
  return {{"steps", s.steps},
          {"window", s.window},
          {"asymptotic_ratio0", optional_json(s.asymptotic_ratio0)},
          {"asymptotic_ratio1", optional_json(s.asymptotic_ratio1)}};
}

}  // namespace

std::string format_number(double v) {
  if (v == 0.0) return "0";  // folds -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string format_optional(const std::optional<double>& v) { return v ? format_number(*v) : std::string(); }

std::string timeline_csv(const std::vector<TimelineRecord>& timeline) {
  std::string out = kTimelineHeader;
  out += '\n';
  for (const TimelineRecord& r : timeline) {
    out += std::to_string(r.step);
    for (const std::string& field :
         {format_number(r.p0), format_number(r.p1), format_optional(r.entropy0), format_optional(r.entropy1),
          format_number(r.max_entropy), format_optional(r.ratio0), format_optional(r.ratio1)}) {
      out += ',';
      out += field;
    }
    out += '\n';
  }
  return out;
}

RunSummary summarize(const std::vector<TimelineRecord>& timeline, std::size_t window) {
  RunSummary s;
  s.steps = timeline.empty() ? 0 : timeline.back().step;
  s.window = window == 0 ? default_window(timeline.size()) : window;
  for (Coin c : kCoins) {
    std::optional<double> value;
    try {
      value = asymptotic_ratio(timeline, c, s.window);
    } catch (const std::invalid_argument&) {
      // Window reaches t = 1 or an empty branch; leave unset.
    }
    (c == Coin::c0 ? s.asymptotic_ratio0 : s.asymptotic_ratio1) = value;
  }
  return s;
}

std::string summary_json(const RunSpec& spec, const RunSummary& summary) {
  json doc;
  doc["spec"] = json::parse(dump_run_spec(spec));
  doc["summary"] = summary_object(summary);
  return doc.dump(2) + "\n";
}

std::string run_json(const RunSpec& spec, const RunSummary& summary,
                     const std::vector<TimelineRecord>& timeline) {
  json doc;
  doc["spec"] = json::parse(dump_run_spec(spec));
  doc["summary"] = summary_object(summary);
  json rows = json::array();
  for (const TimelineRecord& r : timeline) {
    rows.push_back({{"step", r.step},
                    {"p0", r.p0},
                    {"p1", r.p1},
                    {"entropy0", optional_json(r.entropy0)},
                    {"entropy1", optional_json(r.entropy1)},
                    {"max_entropy", r.max_entropy},
                    {"ratio0", optional_json(r.ratio0)},
                    {"ratio1", optional_json(r.ratio1)},
                    {"support0", r.support0},
                    {"support1", r.support1}});
  }
  doc["timeline"] = std::move(rows);
  return doc.dump(2) + "\n";
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw std::runtime_error("cannot move output into place at '" + path.string() + "'");
  }
}

}  // namespace qwalk::cli
