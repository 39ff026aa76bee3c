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

// Per-graph analysis reports, batch runs over graph6 files, and their JSON
// form. Every fraction is serialized as a reduced "p/q" string.

#ifndef PMCOVER_REPORT_H_
#define PMCOVER_REPORT_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "pmcover/bounds.h"
#include "pmcover/graph.h"

namespace pmcover {

struct AnalyzeOptions {
  int t = 5;
  bool exact = false;
  Limits limits;
};

struct StepResult {
  int t = 0;
  int greedy_covered = 0;
  Rational greedy_fraction;
  Rational bound;  // a_t
  BigInt guaranteed_edges;  // ceil(a_t |E|)
  bool bound_met = false;
  bool intersection_cut_ok = false;
  std::optional<Rational> exact_fraction;  // m_t(G) with --exact
};

struct RunError {
  std::string code;
  std::string message;
};

struct RunReport {
  std::string graph_id;
  std::string graph6;
  int n = 0;
  int num_edges = 0;
  std::size_t pm_count = 0;
  std::vector<StepResult> steps;
  std::vector<int> greedy_coverage;  // per step, up to max(t, 5) steps
  bool corollary_cover = false;      // 5 greedy steps reach ceil(215/231 |E|)
  BigInt corollary_required;
  int corollary_covered = 0;
  std::optional<int> cover_number;   // with --exact; least t <= T with m_t = 1
  bool exact_requested = false;
  std::optional<RunError> exact_error;  // e.g. TooManyMatchings
  std::optional<RunError> error;        // structural or invariant failure
  double timing_ms = 0;

  // bound, corollary and cut checks all hold
  bool ok() const;
};

// Runs the greedy cover up to max(t, 5) steps, the corollary checks and,
// with options.exact, m_t(G) for t = 1..options.t. Errors are captured in
// the report, never thrown.
RunReport AnalyzeGraph(const CubicGraph& graph, std::string graph_id,
                       const AnalyzeOptions& options);

// Parses one graph6 line and analyzes it; parse failures land in the error.
RunReport AnalyzeGraph6(const std::string& graph6, std::string graph_id,
                        const AnalyzeOptions& options);

struct Graph6Line {
  std::string id;  // path:line
  std::string text;
};

// One graph per line. Blank lines and lines starting with ">>" are skipped,
// except that a leading ">>graph6<<" header is stripped. Throws
// std::runtime_error when the file cannot be read.
std::vector<Graph6Line> ReadGraph6File(const std::string& path);

struct BatchSummary {
  int graphs = 0;
  int errors = 0;
  int bound_met = 0;
  int violations = 0;
};

struct BatchResult {
  std::vector<RunReport> reports;  // input order
  BatchSummary summary;
};

// Analyzes every line independently on `parallel` worker threads.
BatchResult RunBatch(const std::vector<Graph6Line>& lines,
                     const AnalyzeOptions& options, int parallel);

BatchSummary Summarize(const std::vector<RunReport>& reports);

nlohmann::ordered_json ToJson(const RunReport& report);
nlohmann::ordered_json ToJson(const BatchResult& result);
nlohmann::ordered_json ToJson(const std::vector<BoundsRow>& rows);

void PrintReport(std::ostream& out, const RunReport& report);
void PrintSummary(std::ostream& out, const BatchSummary& summary);
void PrintBoundsTable(std::ostream& out, const std::vector<BoundsRow>& rows);

}  // namespace pmcover

#endif  // PMCOVER_REPORT_H_
