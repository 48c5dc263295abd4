#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "vty/cli/app.hpp"

namespace vty::testing {

inline std::filesystem::path manifest_path(const std::string& name) {
  return std::filesystem::path(VTY_MANIFEST_DIR) / name;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;

  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

inline CliRun cli(std::vector<std::string> args) {
  for (auto& a : args) {
    if (a.ends_with(".vty")) a = manifest_path(a).string();
  }
  std::ostringstream out, err;
  CliRun r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

struct GoldenCase {
  std::string name;
  std::vector<std::string> args;
  int code;
};

// Shipped manifests, one entry per golden file.
inline const std::vector<GoldenCase>& golden_cases() {
  static const std::vector<GoldenCase> cases = {
      {"inconsistent_kb.check-prevariety.json", {"check-prevariety", "inconsistent_kb.vty"}, 0},
      {"inconsistent_kb.consistency.json", {"consistency", "inconsistent_kb.vty"}, 0},
      {"inconsistent_kb.closure.json", {"closure", "inconsistent_kb.vty", "--calculus", "k1", "--proofs"}, 0},
      {"shared_core.check-variety.json",
       {"check-variety", "shared_core.vty", "--depth", "2", "--prevariety", "core"}, 0},
      {"shared_core_nowitness.check-variety.json",
       {"check-variety", "shared_core.vty", "--depth", "2", "--prevariety", "core_nowitness"}, 1},
      {"bijective.check-prevariety.json",
       {"check-prevariety", "bijective.vty", "--bijective", "--prevariety", "strict"}, 0},
      {"bijective.check-variety.json",
       {"check-variety", "bijective.vty", "--depth", "1", "--bijective", "--prevariety", "strict"}, 1},
      {"bijective_collide.check-prevariety.json",
       {"check-prevariety", "bijective.vty", "--bijective", "--prevariety", "collide"}, 1},
      {"algorithm_classes.project-undecidable.json",
       {"project", "algorithm_classes.vty", "--theorem", "fixed_output_undecidable"}, 0},
      {"algorithm_classes.project-recognizable.json",
       {"project", "algorithm_classes.vty", "--theorem", "fixed_output_recognizable"}, 0},
      {"algorithm_classes.report-matrix.json", {"report-matrix", "algorithm_classes.vty"}, 0},
      {"algorithm_classes.report-matrix.txt", {"--format", "text", "report-matrix", "algorithm_classes.vty"}, 0},
      {"classify.redundant.json", {"classify", "--axioms", "p", "q", "(-> p q)", "--goal", "q"}, 0},
      {"minimal-subsets.redundant.json",
       {"minimal-subsets", "--axioms", "p", "q", "(-> p q)", "--goal", "q", "--base", "mp"}, 0},
      {"fixed-output.brute.json",
       {"fixed-output", "brute", "--max-instructions", "1", "--registers", "1", "--inputs", "0,1", "--fuel", "50",
        "--y", "1"},
       0},
      {"fixed-output.recognize.json",
       {"fixed-output", "recognize", "--code", "4098", "--y", "1", "--schedule", "5,50"}, 0},
  };
  return cases;
}

}  // namespace vty::testing
