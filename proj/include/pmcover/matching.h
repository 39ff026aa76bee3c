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

// Perfect matching enumeration, exact maximum-weight perfect matching search
// and the tight-cut constrained selection used by the greedy cover.

#ifndef PMCOVER_MATCHING_H_
#define PMCOVER_MATCHING_H_

#include <cstdint>
#include <span>
#include <vector>

#include "pmcover/error.h"
#include "pmcover/graph.h"
#include "pmcover/rational.h"

namespace pmcover {

class PerfectMatching {
 public:
  // Throws kInvalidParameter unless the edges cover every vertex exactly once.
  static PerfectMatching FromEdges(const CubicGraph& graph,
                                   std::vector<int> edge_indices);

  // Ascending edge indices.
  const std::vector<int>& edges() const { return edges_; }
  const EdgeSet& mask() const { return mask_; }
  bool contains(int e) const { return mask_.test(e); }
  int size() const { return static_cast<int>(edges_.size()); }

  int IntersectionSize(const EdgeSet& other) const {
    return static_cast<int>((mask_ & other).count());
  }

  // Characteristic vector over E(G), entries 0 or 1.
  std::vector<Rational> Characteristic(int num_edges) const;

  friend bool operator==(const PerfectMatching& a, const PerfectMatching& b) {
    return a.edges_ == b.edges_;
  }
  // Canonical order: lexicographic on the ascending edge index lists. This is
  // also the order in which EnumeratePerfectMatchings produces them.
  friend bool operator<(const PerfectMatching& a, const PerfectMatching& b) {
    return a.edges_ < b.edges_;
  }

 private:
  PerfectMatching() = default;
  friend class MatchingBuilder;

  std::vector<int> edges_;
  EdgeSet mask_;
};

using CostVector = std::vector<Rational>;

// c . chi^M
Rational Evaluate(std::span<const Rational> cost, const PerfectMatching& m);

// Every perfect matching exactly once, in canonical order. Backtracks on the
// lowest uncovered vertex, trying its incident edges by index.
std::vector<PerfectMatching> EnumeratePerfectMatchings(const CubicGraph& graph);

// Number of perfect matchings; stops counting past stop_after and returns
// stop_after + 1 in that case.
std::size_t CountPerfectMatchings(const CubicGraph& graph,
                                  std::size_t stop_after = SIZE_MAX - 1);

// max over perfect matchings of c . chi^M, by branch and bound.
Rational MaxWeightValue(const CubicGraph& graph, std::span<const Rational> cost);

// All perfect matchings attaining MaxWeightValue, canonical order.
std::vector<PerfectMatching> ArgmaxMatchings(const CubicGraph& graph,
                                             std::span<const Rational> cost);

// Thrown by SelectLemmaMatching. Carries the unconstrained optimizers.
class NoAdmissibleMatchingError : public Error {
 public:
  NoAdmissibleMatchingError(const std::string& message,
                            std::vector<PerfectMatching> optimizers)
      : Error(ErrorCode::kNoAdmissibleMatching, message),
        optimizers_(std::move(optimizers)) {}

  const std::vector<PerfectMatching>& optimizers() const { return optimizers_; }

 private:
  std::vector<PerfectMatching> optimizers_;
};

// Among the perfect matchings that meet every tight cut in exactly one edge,
// returns the canonically first one of maximum cost. Whenever an unconstrained
// optimizer meets every tight cut once, the result is the first such
// optimizer.
//
// Every cut must have odd size (kInvalidParameter). If no perfect matching
// meets every tight cut exactly once, throws NoAdmissibleMatchingError; for
// tight cuts of a genuine fractional perfect matching this cannot happen.
PerfectMatching SelectLemmaMatching(const CubicGraph& graph,
                                    std::span<const Rational> cost,
                                    std::span<const CutCertificate> tight_cuts);

}  // namespace pmcover

#endif  // PMCOVER_MATCHING_H_
