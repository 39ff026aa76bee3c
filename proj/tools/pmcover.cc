// Copyright 2026 The pmcover Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// pmcover: greedy perfect matching covers of bridgeless cubic graphs.
//
//   pmcover bounds  --t 10
//   pmcover analyze PETERSEN --t 5 --exact --json out.json
//   pmcover batch graphs.g6 --t 5 --parallel 4 --json out.json

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "pmcover/bounds.h"
#include "pmcover/error.h"
#include "pmcover/report.h"

namespace {

bool WriteJson(const std::string& path, const nlohmann::ordered_json& doc) {
  if (path.empty()) return true;
  std::ofstream out(path);
  out << doc.dump(2) << "\n";
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Greedy perfect matching covers of bridgeless cubic graphs"};
  app.require_subcommand(1);

  int t = 5;
  bool exact = false;
  int parallel = 1;
  std::string json_path;
  pmcover::Limits limits;
  std::string input;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--json", json_path, "Write a JSON report to this path");
    cmd->add_option("--max-subset-n", limits.max_subset_n,
                    "Largest n for vertex-subset enumeration")
        ->check(CLI::Range(1, pmcover::kMaxVertices));
    cmd->add_option("--pm-cap", limits.pm_cap,
                    "Largest perfect matching count for exact coverage search");
  };

  CLI::App* bounds = app.add_subcommand("bounds", "Tabulate a_t and the size bound");
  bounds->add_option("--t", t, "Largest t (>= 1)");
  bounds->add_option("--json", json_path, "Write the table as JSON");

  CLI::App* analyze =
      app.add_subcommand("analyze", "Analyze a fixture or every graph in a graph6 file");
  analyze->add_option("input", input, "graph6 file or fixture name (K4, K33, PRISM, "
                                      "PETERSEN, FLOWER<k>)")
      ->required();
  analyze->add_option("--t", t, "Number of matchings (>= 1)");
  analyze->add_flag("--exact", exact, "Also compute m_t(G) exactly");
  add_common(analyze);

  CLI::App* batch = app.add_subcommand("batch", "Analyze every graph in a graph6 file");
  batch->add_option("path", input, "graph6 file")->required();
  batch->add_option("--t", t, "Number of matchings (>= 1)");
  batch->add_flag("--exact", exact, "Also compute m_t(G) exactly");
  batch->add_option("--parallel", parallel, "Worker threads")
      ->check(CLI::PositiveNumber);
  add_common(batch);

  CLI11_PARSE(app, argc, argv);

  if (t < 1) {
    std::cerr << "error: --t must be at least 1\n";
    return 2;
  }

  if (bounds->parsed()) {
    const auto rows = pmcover::BoundsTable(t);
    pmcover::PrintBoundsTable(std::cout, rows);
    return WriteJson(json_path, pmcover::ToJson(rows)) ? 0 : 1;
  }

  pmcover::AnalyzeOptions options{t, exact, limits};

  if (analyze->parsed()) {
    pmcover::BatchResult result;
    if (std::filesystem::is_regular_file(input)) {
      std::vector<pmcover::Graph6Line> lines;
      try {
        lines = pmcover::ReadGraph6File(input);
      } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
      }
      for (const auto& line : lines) {
        result.reports.push_back(pmcover::AnalyzeGraph6(line.text, line.id, options));
        if (result.reports.back().error) break;
      }
    } else {
      try {
        result.reports.push_back(
            pmcover::AnalyzeGraph(pmcover::FixtureByName(input), input, options));
      } catch (const pmcover::Error& e) {
        std::cerr << "error: '" << input
                  << "' is neither a readable file nor a fixture name\n";
        return 2;
      }
    }
    result.summary = pmcover::Summarize(result.reports);
    for (const auto& report : result.reports) {
      pmcover::PrintReport(std::cout, report);
      if (report.error) {
        std::cerr << "error: " << report.graph_id << ": " << report.error->message
                  << "\n";
      }
    }
    if (!WriteJson(json_path, pmcover::ToJson(result))) return 1;
    return result.summary.errors == 0 && result.summary.violations == 0 ? 0 : 1;
  }

  std::vector<pmcover::Graph6Line> lines;
  try {
    lines = pmcover::ReadGraph6File(input);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  const pmcover::BatchResult result = pmcover::RunBatch(lines, options, parallel);
  for (const auto& report : result.reports) pmcover::PrintReport(std::cout, report);
  pmcover::PrintSummary(std::cout, result.summary);
  if (!WriteJson(json_path, pmcover::ToJson(result))) return 1;
  return result.summary.errors == 0 && result.summary.violations == 0 ? 0 : 1;
}
