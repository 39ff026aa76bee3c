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

#include "pmcover/matching.h"

#include <algorithm>
#include <bit>
#include <optional>
#include <string>

#include "scaled.h"

namespace pmcover {

class MatchingBuilder {
 public:
  static PerfectMatching Build(std::vector<int> edges) {
    PerfectMatching m;
    for (int e : edges) m.mask_.set(e);
    m.edges_ = std::move(edges);
    return m;
  }
};

PerfectMatching PerfectMatching::FromEdges(const CubicGraph& graph,
                                           std::vector<int> edge_indices) {
  std::sort(edge_indices.begin(), edge_indices.end());
  VertexSet covered = 0;
  for (int e : edge_indices) {
    if (e < 0 || e >= graph.num_edges()) {
      throw Error(ErrorCode::kInvalidParameter,
                  "edge index " + std::to_string(e) + " out of range");
    }
    const VertexSet ends =
        (VertexSet{1} << graph.edge(e).u) | (VertexSet{1} << graph.edge(e).v);
    if ((covered & ends) != 0) {
      throw Error(ErrorCode::kInvalidParameter,
                  "edge " + std::to_string(e) + " touches a covered vertex");
    }
    covered |= ends;
  }
  if (covered != graph.all_vertices()) {
    throw Error(ErrorCode::kInvalidParameter,
                "edge set leaves vertices uncovered");
  }
  return MatchingBuilder::Build(std::move(edge_indices));
}

std::vector<Rational> PerfectMatching::Characteristic(int num_edges) const {
  std::vector<Rational> chi(num_edges);
  for (int e : edges_) chi[e] = 1;
  return chi;
}

Rational Evaluate(std::span<const Rational> cost, const PerfectMatching& m) {
  Rational total = 0;
  for (int e : m.edges()) total += cost[e];
  return total;
}

namespace {

// Depth-first search over perfect matchings in canonical order: branch on the
// lowest uncovered vertex, trying its incident edges by index. Without a cost
// it enumerates; with a cost it keeps all optima, pruning nodes whose bound
// is strictly below the incumbent. Value is int64_t (scaled costs) or
// Rational.
template <typename Value>
class MatchingSearch {
 public:
  MatchingSearch(const CubicGraph& graph, const std::vector<Value>* cost,
                 std::span<const CutCertificate> cuts)
      : graph_(graph), cost_(cost), cuts_(cuts), cut_hits_(cuts.size(), 0) {
    edge_cuts_.resize(graph.num_edges());
    for (std::size_t i = 0; i < cuts.size(); ++i) {
      for (int e = 0; e < graph.num_edges(); ++e) {
        if (cuts[i].boundary.test(e)) edge_cuts_[e].push_back(static_cast<int>(i));
      }
    }
  }

  // leaf(value) returns false to stop the search.
  template <typename Leaf>
  void Run(Leaf&& leaf) {
    chosen_.clear();
    Recurse(0, Value(0), leaf);
  }

  // Bound-pruned search collecting every optimum.
  void Optimize() {
    best_.reset();
    optima_.clear();
    Run([&](const Value& value) {
      if (!best_ || value > *best_) {
        best_ = value;
        optima_.clear();
      }
      if (value == *best_) optima_.push_back(MatchingBuilder::Build(chosen_));
      return true;
    });
  }

  const std::optional<Value>& best() const { return best_; }
  std::vector<PerfectMatching>& optima() { return optima_; }
  const std::vector<int>& chosen() const { return chosen_; }

 private:
  template <typename Leaf>
  bool Recurse(VertexSet matched, const Value& value, Leaf& leaf) {
    const VertexSet open = graph_.all_vertices() & ~matched;
    if (open == 0) {
      for (int hits : cut_hits_) {
        if (hits != 1) return true;
      }
      return leaf(value);
    }
    if (cost_ != nullptr && best_ && !BoundReaches(open, value)) return true;
    const int v = std::countr_zero(open);
    for (int e : graph_.incident(v)) {
      const int u = graph_.Other(e, v);
      if ((matched >> u) & 1) continue;
      bool over = false;
      for (int c : edge_cuts_[e]) over |= ++cut_hits_[c] > 1;
      if (!over) {
        chosen_.push_back(e);
        const bool keep_going =
            Recurse(matched | (VertexSet{1} << v) | (VertexSet{1} << u),
                    cost_ != nullptr ? value + (*cost_)[e] : value, leaf);
        chosen_.pop_back();
        if (!keep_going) {
          for (int c : edge_cuts_[e]) --cut_hits_[c];
          return false;
        }
      }
      for (int c : edge_cuts_[e]) --cut_hits_[c];
    }
    return true;
  }

  // Each matching edge (u, v) costs at most the larger admissible incident
  // cost at u and at v, so twice the remaining value is bounded by the sum of
  // those per-vertex maxima.
  bool BoundReaches(VertexSet open, const Value& value) const {
    Value twice = value + value;
    for (VertexSet rest = open; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      std::optional<Value> top;
      for (int e : graph_.incident(v)) {
        if (((open >> graph_.Other(e, v)) & 1) == 0) continue;
        if (!top || (*cost_)[e] > *top) top = (*cost_)[e];
      }
      if (!top) return false;  // v can no longer be matched
      twice += *top;
    }
    return twice >= *best_ + *best_;
  }

  const CubicGraph& graph_;
  const std::vector<Value>* cost_;
  std::span<const CutCertificate> cuts_;
  std::vector<int> cut_hits_;
  std::vector<std::vector<int>> edge_cuts_;
  std::vector<int> chosen_;
  std::optional<Value> best_;
  std::vector<PerfectMatching> optima_;
};

void CheckCostLength(const CubicGraph& graph, std::span<const Rational> cost) {
  if (static_cast<int>(cost.size()) != graph.num_edges()) {
    throw Error(ErrorCode::kInvalidParameter,
                "cost vector has " + std::to_string(cost.size()) +
                    " entries, graph has " + std::to_string(graph.num_edges()) +
                    " edges");
  }
}

struct OptimumResult {
  Rational value;
  std::vector<PerfectMatching> optima;
};

// Returns no value when no perfect matching satisfies the cuts.
std::optional<OptimumResult> Optimize(const CubicGraph& graph,
                                      std::span<const Rational> cost,
                                      std::span<const CutCertificate> cuts) {
  CheckCostLength(graph, cost);
  if (auto scaled = internal::ScaleToCommonDenominator(cost)) {
    MatchingSearch<std::int64_t> search(graph, &scaled->numerators, cuts);
    search.Optimize();
    if (!search.best()) return std::nullopt;
    Rational value(BigInt(static_cast<long>(*search.best())), scaled->denominator);
    value.canonicalize();
    return OptimumResult{value, std::move(search.optima())};
  }
  std::vector<Rational> exact(cost.begin(), cost.end());
  MatchingSearch<Rational> search(graph, &exact, cuts);
  search.Optimize();
  if (!search.best()) return std::nullopt;
  return OptimumResult{*search.best(), std::move(search.optima())};
}

}  // namespace

std::vector<PerfectMatching> EnumeratePerfectMatchings(const CubicGraph& graph) {
  std::vector<PerfectMatching> out;
  MatchingSearch<std::int64_t> search(graph, nullptr, {});
  search.Run([&](std::int64_t) {
    out.push_back(MatchingBuilder::Build(search.chosen()));
    return true;
  });
  return out;
}

std::size_t CountPerfectMatchings(const CubicGraph& graph,
                                  std::size_t stop_after) {
  std::size_t count = 0;
  MatchingSearch<std::int64_t> search(graph, nullptr, {});
  search.Run([&](std::int64_t) { return ++count <= stop_after; });
  return count;
}

Rational MaxWeightValue(const CubicGraph& graph, std::span<const Rational> cost) {
  auto result = Optimize(graph, cost, {});
  if (!result) {
    throw Error(ErrorCode::kInvariantBroken,
                "cubic graph without a perfect matching");
  }
  return result->value;
}

std::vector<PerfectMatching> ArgmaxMatchings(const CubicGraph& graph,
                                             std::span<const Rational> cost) {
  auto result = Optimize(graph, cost, {});
  if (!result) {
    throw Error(ErrorCode::kInvariantBroken,
                "cubic graph without a perfect matching");
  }
  return std::move(result->optima);
}

PerfectMatching SelectLemmaMatching(
    const CubicGraph& graph, std::span<const Rational> cost,
    std::span<const CutCertificate> tight_cuts) {
  for (const CutCertificate& cut : tight_cuts) {
    if (cut.size() % 2 == 0) {
      throw Error(ErrorCode::kInvalidParameter,
                  "tight cut of even size " + std::to_string(cut.size()));
    }
  }
  auto result = Optimize(graph, cost, tight_cuts);
  if (!result) {
    auto optimizers = ArgmaxMatchings(graph, cost);
    throw NoAdmissibleMatchingError(
        "no perfect matching meets all " + std::to_string(tight_cuts.size()) +
            " tight cuts exactly once (" + std::to_string(optimizers.size()) +
            " unconstrained optimizers attached)",
        std::move(optimizers));
  }
  return std::move(result->optima.front());
}

}  // namespace pmcover
