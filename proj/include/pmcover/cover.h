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

// Greedy covers of a bridgeless cubic graph by perfect matchings.
//
// For a family F = (M_1, ..., M_t) the weighting
//
//   w_F(e) = (t + 1 - Phi({e}, F)) / (2t + 3),  Phi(A, F) = sum_i |A n M_i|
//
// is a fractional perfect matching whenever F was built greedily: starting
// from the empty family (w = 1/3 everywhere), each step adds a perfect
// matching M maximising c . chi^M for c = 1 - chi^{covered} among those that
// meet every tight odd cut of w_F exactly once. Each step then covers at least
// (t+1)/(2t+3) of the still uncovered edges, and after t steps at least a_t of
// all edges are covered (see bounds.h).

#ifndef PMCOVER_COVER_H_
#define PMCOVER_COVER_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pmcover/graph.h"
#include "pmcover/matching.h"
#include "pmcover/polytope.h"
#include "pmcover/rational.h"

namespace pmcover {

// An ordered list of perfect matchings of one graph. Repeats are allowed.
class MatchingFamily {
 public:
  explicit MatchingFamily(CubicGraph graph) : graph_(std::move(graph)) {}
  // Throws kInvalidParameter if a member is not a perfect matching of graph.
  MatchingFamily(CubicGraph graph, std::vector<PerfectMatching> matchings);

  const CubicGraph& graph() const { return graph_; }
  const std::vector<PerfectMatching>& matchings() const { return matchings_; }
  int t() const { return static_cast<int>(matchings_.size()); }

  EdgeSet Covered() const;
  int CoveredCount() const { return static_cast<int>(Covered().count()); }
  // Edges lying in every member; empty for t = 0.
  EdgeSet Intersection() const;

  // Copy extended by one matching.
  MatchingFamily Extended(PerfectMatching next) const;
  // The first t members.
  MatchingFamily Prefix(int t) const;

 private:
  CubicGraph graph_;
  std::vector<PerfectMatching> matchings_;
};

// sum_i |A n M_i|
int Phi(const EdgeSet& edges, const MatchingFamily& family);

FractionalWeighting FamilyWeight(const MatchingFamily& family);

struct PhiLemmaCheck {
  bool weight_at_least_one;  // w_F(A) >= 1
  bool phi_within_bound;     // Phi(A, F) <= t(k-2) + (k-3)
  bool equality_matches;     // w_F(A) = 1 iff Phi(A, F) = t(k-2) + (k-3)
};

// Evaluates both sides of  w_F(A) >= 1  <=>  Phi(A,F) <= t(k-2) + (k-3)
// independently. Requires |A| >= 1 (kInvalidParameter).
PhiLemmaCheck LemmaPhiCheck(const EdgeSet& edges, const MatchingFamily& family);

// One greedy step. Throws kInvariantBroken (graph6, family and certificate in
// the message) if the gain inequality or the polytope membership of the
// extended family's weighting fails; kNotAFractionalPM if the input family's
// weighting is not a fractional perfect matching.
MatchingFamily GreedyStep(const MatchingFamily& family, const Limits& limits = {});

struct CoverReport {
  MatchingFamily family;
  std::vector<int> per_step_coverage;  // covered edges after steps 1..t
  Rational fraction;                   // |covered| / |E|
  Rational bound;                      // a_t
  bool bound_met = false;
};

// t greedy steps from the empty family. Throws kNotBridgeless,
// kInvalidParameter for t < 0, and propagates kInvariantBroken.
CoverReport GreedyCover(const CubicGraph& graph, int t, const Limits& limits = {});

struct MaxCoverage {
  Rational fraction;  // m_t(G)
  MatchingFamily witness;
};

// Exact m_t(G) by branch and bound over t-multisets of perfect matchings.
// Throws kTooManyMatchings when the graph has more than limits.pm_cap perfect
// matchings.
MaxCoverage ExactMaxCoverage(const CubicGraph& graph, int t,
                             const Limits& limits = {});

// Least t <= cap with m_t(G) = 1, or nullopt when none exists.
std::optional<int> CoverNumber(const CubicGraph& graph, int cap,
                               const Limits& limits = {});

// Whether the 5-step greedy cover reaches ceil(215/231 |E|) edges.
bool CheckCorollaryCover(const CubicGraph& graph, const Limits& limits = {});

struct IntersectionCutResult {
  bool ok = true;
  std::optional<CutCertificate> offending;
};

// ok unless some minimal cut of size 2t+1 lies inside the intersection of
// all members. For t = 0 the intersection is E(G), so this looks for bridges.
IntersectionCutResult IntersectionCutCheck(const MatchingFamily& family,
                                           const Limits& limits = {});

}  // namespace pmcover

#endif  // PMCOVER_COVER_H_
