#pragma once

// Plot-ready data for the full figure set: three figures per preset, in
// preset order 4a..4e.
//
//   fig(3k+1).csv     step,entropy,max_entropy,ratio        outcome c0
//   fig(3k+2).csv     step,entropy,max_entropy,ratio        outcome c1
//   fig(3k+3)_i.csv   position,probability                  single walker
//   fig(3k+3)_ii.csv  step,entropy0,entropy1,ratio0,ratio1  both outcomes
//   manifest.json     file -> figure/panel/preset/outcome

#include <filesystem>
#include <string>
#include <vector>

namespace qwalk::cli {

struct FigureFile {
  std::string file;
  int figure = 0;
  std::string panels;
  std::string preset;
  std::string outcome;  // "c0", "c1" or "both"; "-" for the distribution
  std::string description;
  bool written = false;
  std::string error;
};

struct FigureReport {
  std::vector<FigureFile> files;
  bool ok() const;
};

// Runs the five presets concurrently, then writes every file atomically.
// I/O failures are recorded per file rather than thrown.
FigureReport generate_figures(const std::filesystem::path& output_dir, std::int64_t steps = 1000);

}  // namespace qwalk::cli
