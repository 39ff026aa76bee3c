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

#include "pmcover/report.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "pmcover/cover.h"
#include "pmcover/error.h"
#include "pmcover/matching.h"

namespace pmcover {

bool RunReport::ok() const {
  if (error) return false;
  if (!corollary_cover) return false;
  return std::all_of(steps.begin(), steps.end(), [](const StepResult& step) {
    return step.bound_met && step.intersection_cut_ok;
  });
}

namespace {

RunError ToRunError(const Error& error) {
  return RunError{std::string(ErrorCodeName(error.code())), error.what()};
}

void AnalyzeInto(const CubicGraph& graph, const AnalyzeOptions& options,
                 RunReport& report) {
  if (options.t < 1) {
    throw Error(ErrorCode::kInvalidParameter, "t must be at least 1");
  }
  report.graph6 = EncodeGraph6(graph);
  report.n = graph.num_vertices();
  report.num_edges = graph.num_edges();
  report.pm_count = CountPerfectMatchings(graph);

  const int steps = std::max(options.t, 5);
  const CoverReport cover = GreedyCover(graph, steps, options.limits);
  report.greedy_coverage = cover.per_step_coverage;
  const std::vector<Rational> a = ASequencePrefix(steps);
  const BigInt edge_count(graph.num_edges());

  for (int t = 1; t <= options.t; ++t) {
    StepResult step;
    step.t = t;
    step.greedy_covered = cover.per_step_coverage[t - 1];
    step.greedy_fraction = Rational(step.greedy_covered, graph.num_edges());
    step.greedy_fraction.canonicalize();
    step.bound = a[t];
    step.guaranteed_edges = Ceil(a[t] * Rational(edge_count));
    step.bound_met = step.greedy_fraction >= step.bound;
    step.intersection_cut_ok =
        IntersectionCutCheck(cover.family.Prefix(t), options.limits).ok;
    report.steps.push_back(std::move(step));
  }

  report.corollary_covered = cover.per_step_coverage[4];
  report.corollary_required = CoverageGuarantee(5, edge_count);
  report.corollary_cover = report.corollary_covered >= report.corollary_required;

  if (options.exact) {
    report.exact_requested = true;
    try {
      for (StepResult& step : report.steps) {
        step.exact_fraction =
            ExactMaxCoverage(graph, step.t, options.limits).fraction;
        if (!report.cover_number && *step.exact_fraction == 1) {
          report.cover_number = step.t;
        }
      }
    } catch (const Error& e) {
      for (StepResult& step : report.steps) step.exact_fraction.reset();
      report.cover_number.reset();
      report.exact_error = ToRunError(e);
    }
  }
}

template <typename Body>
RunReport Timed(std::string graph_id, Body&& body) {
  RunReport report;
  report.graph_id = std::move(graph_id);
  const auto start = std::chrono::steady_clock::now();
  try {
    body(report);
  } catch (const Error& e) {
    report.error = ToRunError(e);
  }
  report.timing_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  return report;
}

}  // namespace

RunReport AnalyzeGraph(const CubicGraph& graph, std::string graph_id,
                       const AnalyzeOptions& options) {
  return Timed(std::move(graph_id), [&](RunReport& report) {
    AnalyzeInto(graph, options, report);
  });
}

RunReport AnalyzeGraph6(const std::string& graph6, std::string graph_id,
                        const AnalyzeOptions& options) {
  return Timed(std::move(graph_id), [&](RunReport& report) {
    report.graph6 = graph6;
    AnalyzeInto(ParseGraph6(graph6), options, report);
  });
}

std::vector<Graph6Line> ReadGraph6File(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::vector<Graph6Line> lines;
  std::string text;
  for (int number = 1; std::getline(in, text); ++number) {
    while (!text.empty() && (text.back() == '\r' || text.back() == ' ' ||
                             text.back() == '\t')) {
      text.pop_back();
    }
    constexpr std::string_view kHeader = ">>graph6<<";
    if (text.starts_with(kHeader)) {
      text.erase(0, kHeader.size());
    } else if (text.starts_with(">>")) {
      continue;
    }
    if (text.empty()) continue;
    lines.push_back(Graph6Line{path + ":" + std::to_string(number), text});
  }
  if (in.bad()) throw std::runtime_error("read error on " + path);
  return lines;
}

BatchSummary Summarize(const std::vector<RunReport>& reports) {
  BatchSummary summary;
  for (const RunReport& report : reports) {
    ++summary.graphs;
    if (report.error) {
      ++summary.errors;
    } else if (report.ok()) {
      ++summary.bound_met;
    } else {
      ++summary.violations;
    }
  }
  return summary;
}

BatchResult RunBatch(const std::vector<Graph6Line>& lines,
                     const AnalyzeOptions& options, int parallel) {
  BatchResult result;
  result.reports.resize(lines.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < lines.size(); i = next++) {
      result.reports[i] = AnalyzeGraph6(lines[i].text, lines[i].id, options);
    }
  };
  const int threads = std::clamp<int>(parallel, 1, std::max<int>(1, lines.size()));
  std::vector<std::thread> pool;
  for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (std::thread& thread : pool) thread.join();
  result.summary = Summarize(result.reports);
  return result;
}

// ---------------------------------------------------------------- JSON

namespace {

nlohmann::ordered_json ToJson(const RunError& error) {
  return {{"code", error.code}, {"message", error.message}};
}

}  // namespace

nlohmann::ordered_json ToJson(const RunReport& report) {
  nlohmann::ordered_json out;
  out["graph_id"] = report.graph_id;
  out["graph6"] = report.graph6;
  if (report.error) {
    out["error"] = ToJson(*report.error);
    out["ok"] = false;
    out["timing_ms"] = report.timing_ms;
    return out;
  }
  out["n"] = report.n;
  out["edges"] = report.num_edges;
  out["pm_count"] = report.pm_count;
  out["greedy_coverage"] = report.greedy_coverage;
  nlohmann::ordered_json steps = nlohmann::ordered_json::array();
  for (const StepResult& step : report.steps) {
    nlohmann::ordered_json row;
    row["t"] = step.t;
    row["greedy_covered"] = step.greedy_covered;
    row["greedy_fraction"] = ToFractionString(step.greedy_fraction);
    row["bound"] = ToFractionString(step.bound);
    row["guaranteed_edges"] = step.guaranteed_edges.get_si();
    row["bound_met"] = step.bound_met;
    row["intersection_cut_ok"] = step.intersection_cut_ok;
    if (step.exact_fraction) {
      row["exact_fraction"] = ToFractionString(*step.exact_fraction);
    } else {
      row["exact_fraction"] = nullptr;
    }
    steps.push_back(std::move(row));
  }
  out["steps"] = std::move(steps);
  out["corollary_cover"] = {
      {"covered", report.corollary_covered},
      {"required", report.corollary_required.get_si()},
      {"holds", report.corollary_cover}};
  if (report.cover_number) {
    out["cover_number"] = *report.cover_number;
  } else {
    out["cover_number"] = nullptr;
  }
  out["exact_error"] =
      report.exact_error ? ToJson(*report.exact_error) : nlohmann::ordered_json();
  out["ok"] = report.ok();
  out["timing_ms"] = report.timing_ms;
  return out;
}

nlohmann::ordered_json ToJson(const BatchResult& result) {
  nlohmann::ordered_json reports = nlohmann::ordered_json::array();
  for (const RunReport& report : result.reports) reports.push_back(ToJson(report));
  return {{"reports", std::move(reports)},
          {"summary",
           {{"graphs", result.summary.graphs},
            {"errors", result.summary.errors},
            {"bound_met", result.summary.bound_met},
            {"violations", result.summary.violations}}}};
}

nlohmann::ordered_json ToJson(const std::vector<BoundsRow>& rows) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const BoundsRow& row : rows) {
    out.push_back({{"t", row.t},
                   {"a", ToFractionString(row.a)},
                   {"inverse_gap", ToFractionString(row.inverse_gap)},
                   {"threshold", row.threshold.get_str()},
                   {"size_bound_check", row.check}});
  }
  return out;
}

// ---------------------------------------------------------------- text

void PrintReport(std::ostream& out, const RunReport& report) {
  out << report.graph_id;
  if (report.error) {
    out << "  ERROR " << report.error->message << "\n";
    return;
  }
  out << "  n=" << report.n << " |E|=" << report.num_edges
      << " perfect matchings=" << report.pm_count << "\n";
  out << "  " << std::left << std::setw(4) << "t" << std::setw(9) << "covered"
      << std::setw(12) << "fraction" << std::setw(12) << "a_t" << std::setw(7)
      << "bound" << std::setw(7) << "cuts";
  if (report.exact_requested) out << "m_t(G)";
  out << "\n";
  for (const StepResult& step : report.steps) {
    out << "  " << std::setw(4) << step.t << std::setw(9) << step.greedy_covered
        << std::setw(12) << ToFractionString(step.greedy_fraction) << std::setw(12)
        << ToFractionString(step.bound) << std::setw(7)
        << (step.bound_met ? "ok" : "FAIL") << std::setw(7)
        << (step.intersection_cut_ok ? "ok" : "FAIL");
    if (step.exact_fraction) out << ToFractionString(*step.exact_fraction);
    out << "\n";
  }
  out << "  five-matching cover: " << report.corollary_covered
      << " >= " << report.corollary_required << "  "
      << (report.corollary_cover ? "ok" : "FAIL") << "\n";
  if (report.exact_requested) {
    if (report.exact_error) {
      out << "  exact search skipped: " << report.exact_error->message << "\n";
    } else if (report.cover_number) {
      out << "  cover number: " << *report.cover_number << "\n";
    } else {
      out << "  cover number: > " << report.steps.size() << "\n";
    }
  }
}

void PrintSummary(std::ostream& out, const BatchSummary& summary) {
  out << "graphs: " << summary.graphs << "  bound_met: " << summary.bound_met
      << "  errors: " << summary.errors << "  violations: " << summary.violations
      << "\n";
}

void PrintBoundsTable(std::ostream& out, const std::vector<BoundsRow>& rows) {
  out << std::left << std::setw(5) << "t" << std::setw(24) << "a_t"
      << std::setw(24) << "1/(1-a_t)" << std::setw(12) << "floor(2^t/sqrt t)"
      << "  check\n";
  for (const BoundsRow& row : rows) {
    out << std::setw(5) << row.t << std::setw(24) << ToFractionString(row.a)
        << std::setw(24) << ToFractionString(row.inverse_gap) << std::setw(17)
        << row.threshold.get_str() << "  " << (row.check ? "true" : "false");
    if (!row.check) out << "  (threshold not below 1/(1-a_t))";
    out << "\n";
  }
}

}  // namespace pmcover
