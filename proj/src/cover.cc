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

#include "pmcover/cover.h"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_map>

#include "pmcover/bounds.h"
#include "pmcover/error.h"
#include "side_enumeration.h"

namespace pmcover {

MatchingFamily::MatchingFamily(CubicGraph graph,
                               std::vector<PerfectMatching> matchings)
    : graph_(std::move(graph)) {
  for (PerfectMatching& m : matchings) {
    // Revalidates against this graph.
    matchings_.push_back(PerfectMatching::FromEdges(graph_, m.edges()));
  }
}

EdgeSet MatchingFamily::Covered() const {
  EdgeSet covered;
  for (const PerfectMatching& m : matchings_) covered |= m.mask();
  return covered;
}

EdgeSet MatchingFamily::Intersection() const {
  if (matchings_.empty()) return EdgeSet();
  EdgeSet common = matchings_.front().mask();
  for (const PerfectMatching& m : matchings_) common &= m.mask();
  return common;
}

MatchingFamily MatchingFamily::Extended(PerfectMatching next) const {
  MatchingFamily out = *this;
  out.matchings_.push_back(std::move(next));
  return out;
}

MatchingFamily MatchingFamily::Prefix(int t) const {
  if (t < 0 || t > this->t()) {
    throw Error(ErrorCode::kInvalidParameter,
                "prefix length " + std::to_string(t) + " outside [0, " +
                    std::to_string(this->t()) + "]");
  }
  MatchingFamily out(graph_);
  out.matchings_.assign(matchings_.begin(), matchings_.begin() + t);
  return out;
}

int Phi(const EdgeSet& edges, const MatchingFamily& family) {
  int total = 0;
  for (const PerfectMatching& m : family.matchings()) {
    total += m.IntersectionSize(edges);
  }
  return total;
}

FractionalWeighting FamilyWeight(const MatchingFamily& family) {
  const int t = family.t();
  const int num_edges = family.graph().num_edges();
  std::vector<int> hits(num_edges, 0);
  for (const PerfectMatching& m : family.matchings()) {
    for (int e : m.edges()) ++hits[e];
  }
  FractionalWeighting w(num_edges);
  for (int e = 0; e < num_edges; ++e) {
    w[e] = Rational(t + 1 - hits[e], 2 * t + 3);
    w[e].canonicalize();
  }
  return w;
}

PhiLemmaCheck LemmaPhiCheck(const EdgeSet& edges, const MatchingFamily& family) {
  const long k = static_cast<long>(edges.count());
  if (k < 1) {
    throw Error(ErrorCode::kInvalidParameter, "edge set must be nonempty");
  }
  const long t = family.t();
  const Rational weight = WeightOf(FamilyWeight(family), edges);
  const long phi = Phi(edges, family);
  const long threshold = t * (k - 2) + (k - 3);
  return PhiLemmaCheck{weight >= 1, phi <= threshold,
                       (weight == 1) == (phi == threshold)};
}

namespace {

std::string DescribeFamily(const MatchingFamily& family) {
  std::ostringstream out;
  out << "graph " << EncodeGraph6(family.graph()) << ", family [";
  for (int i = 0; i < family.t(); ++i) {
    out << (i ? " " : "") << "{";
    const auto& edges = family.matchings()[i].edges();
    for (std::size_t j = 0; j < edges.size(); ++j) {
      out << (j ? "," : "") << edges[j];
    }
    out << "}";
  }
  out << "]";
  return out.str();
}

}  // namespace

MatchingFamily GreedyStep(const MatchingFamily& family, const Limits& limits) {
  const CubicGraph& graph = family.graph();
  const FractionalWeighting weights = FamilyWeight(family);
  const std::vector<CutCertificate> tight = TightOddCuts(graph, weights, limits);

  const EdgeSet covered = family.Covered();
  CostVector cost(graph.num_edges());
  for (int e = 0; e < graph.num_edges(); ++e) cost[e] = covered.test(e) ? 0 : 1;

  PerfectMatching next = SelectLemmaMatching(graph, cost, tight);
  const Rational gain = Evaluate(cost, next);
  Rational promised = 0;
  for (int e = 0; e < graph.num_edges(); ++e) promised += cost[e] * weights[e];
  if (gain < promised) {
    throw Error(ErrorCode::kInvariantBroken,
                "step gain " + ToFractionString(gain) + " below c.w = " +
                    ToFractionString(promised) + "; " + DescribeFamily(family));
  }

  MatchingFamily extended = family.Extended(std::move(next));
  const PolytopeVerdict verdict =
      VerifyFractionalPm(graph, FamilyWeight(extended), limits);
  if (!verdict.valid()) {
    throw Error(ErrorCode::kInvariantBroken,
                "extended family weight leaves the polytope: " +
                    DescribeViolation(*verdict.violation) + "; " +
                    DescribeFamily(extended));
  }
  return extended;
}

CoverReport GreedyCover(const CubicGraph& graph, int t, const Limits& limits) {
  if (t < 0) {
    throw Error(ErrorCode::kInvalidParameter, "t must be nonnegative");
  }
  if (!IsBridgeless(graph)) {
    throw Error(ErrorCode::kNotBridgeless, "graph " + EncodeGraph6(graph));
  }
  MatchingFamily family(graph);
  std::vector<int> coverage;
  for (int step = 0; step < t; ++step) {
    family = GreedyStep(family, limits);
    coverage.push_back(family.CoveredCount());
  }
  Rational fraction(family.CoveredCount(), graph.num_edges());
  fraction.canonicalize();
  Rational bound = ASequence(t);
  const bool met = fraction >= bound;
  return CoverReport{std::move(family), std::move(coverage), std::move(fraction),
                     std::move(bound), met};
}

namespace {

struct EdgeSetKey {
  EdgeSet edges;
  int remaining;
  bool operator==(const EdgeSetKey&) const = default;
};

struct EdgeSetKeyHash {
  std::size_t operator()(const EdgeSetKey& key) const {
    return std::hash<EdgeSet>()(key.edges) * 31 + key.remaining;
  }
};

// Depth-first search over index-increasing k-subsets of distinct matchings,
// keeping the first strictly better union found. Subtrees are pruned when the
// union plus the r largest marginal gains cannot beat the incumbent, and when
// the same (union, remaining) state was already explored from an earlier or
// equal start index.
class CoverageSearch {
 public:
  CoverageSearch(const std::vector<PerfectMatching>& matchings, int num_edges,
                 int picks)
      : matchings_(matchings), num_edges_(num_edges), picks_(picks) {}

  void Run() {
    chosen_.clear();
    Recurse(0, EdgeSet(), picks_);
  }

  int best() const { return best_; }
  const std::vector<int>& best_choice() const { return best_choice_; }

 private:
  static constexpr std::size_t kMemoLimit = 1 << 22;

  void Recurse(int start, const EdgeSet& covered, int remaining) {
    const int size = static_cast<int>(covered.count());
    if (remaining == 0) {
      if (size > best_) {
        best_ = size;
        best_choice_ = chosen_;
      }
      return;
    }
    if (best_ == num_edges_) return;
    const int count = static_cast<int>(matchings_.size());
    if (count - start < remaining) return;

    gains_.clear();
    for (int j = start; j < count; ++j) {
      gains_.push_back(static_cast<int>((matchings_[j].mask() & ~covered).count()));
    }
    std::partial_sort(gains_.begin(), gains_.begin() + remaining, gains_.end(),
                      std::greater<>());
    int bound = size;
    for (int i = 0; i < remaining; ++i) bound += gains_[i];
    if (std::min(bound, num_edges_) <= best_) return;

    auto [it, inserted] = memo_.try_emplace(EdgeSetKey{covered, remaining}, start);
    if (!inserted) {
      if (it->second <= start) return;
      it->second = start;
    }
    if (memo_.size() > kMemoLimit) memo_.clear();

    for (int j = start; j + remaining <= count; ++j) {
      chosen_.push_back(j);
      Recurse(j + 1, covered | matchings_[j].mask(), remaining - 1);
      chosen_.pop_back();
      if (best_ == num_edges_) return;
    }
  }

  const std::vector<PerfectMatching>& matchings_;
  const int num_edges_;
  const int picks_;
  int best_ = -1;
  std::vector<int> chosen_;
  std::vector<int> best_choice_;
  std::vector<int> gains_;
  std::unordered_map<EdgeSetKey, int, EdgeSetKeyHash> memo_;
};

}  // namespace

MaxCoverage ExactMaxCoverage(const CubicGraph& graph, int t,
                             const Limits& limits) {
  if (t < 0) {
    throw Error(ErrorCode::kInvalidParameter, "t must be nonnegative");
  }
  const std::size_t count = CountPerfectMatchings(graph, limits.pm_cap);
  if (count > limits.pm_cap) {
    throw Error(ErrorCode::kTooManyMatchings,
                "more than " + std::to_string(limits.pm_cap) +
                    " perfect matchings");
  }
  if (t == 0) return MaxCoverage{Rational(0), MatchingFamily(graph)};
  const std::vector<PerfectMatching> matchings = EnumeratePerfectMatchings(graph);
  // Repeating a matching never enlarges a union, so t picks are best spent on
  // min(t, count) distinct matchings; the witness repeats its last member to
  // reach length t.
  const int picks = std::min<int>(t, static_cast<int>(matchings.size()));
  CoverageSearch search(matchings, graph.num_edges(), picks);
  search.Run();
  std::vector<PerfectMatching> witness;
  for (int j : search.best_choice()) witness.push_back(matchings[j]);
  while (static_cast<int>(witness.size()) < t) witness.push_back(witness.back());
  Rational fraction(search.best(), graph.num_edges());
  fraction.canonicalize();
  return MaxCoverage{std::move(fraction),
                     MatchingFamily(graph, std::move(witness))};
}

std::optional<int> CoverNumber(const CubicGraph& graph, int cap,
                               const Limits& limits) {
  for (int t = 1; t <= cap; ++t) {
    if (ExactMaxCoverage(graph, t, limits).fraction == 1) return t;
  }
  return std::nullopt;
}

bool CheckCorollaryCover(const CubicGraph& graph, const Limits& limits) {
  const CoverReport report = GreedyCover(graph, 5, limits);
  return report.family.CoveredCount() >=
         CoverageGuarantee(5, BigInt(graph.num_edges()));
}

IntersectionCutResult IntersectionCutCheck(const MatchingFamily& family,
                                           const Limits& limits) {
  const CubicGraph& graph = family.graph();
  internal::CheckSubsetLimit(graph, limits);
  const int size = 2 * family.t() + 1;
  // The empty family's intersection is all of E(G).
  const EdgeSet common =
      family.t() == 0 ? graph.all_edges() : family.Intersection();
  if (static_cast<int>(common.count()) < size) return {};
  for (const CutCertificate& cut : EnumerateMinimalCuts(graph, size, limits)) {
    if ((cut.boundary & ~common).none()) return {false, cut};
  }
  return {};
}

}  // namespace pmcover
