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

#include "pmcover/polytope.h"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "pmcover/error.h"
#include "scaled.h"
#include "side_enumeration.h"

namespace pmcover {

Rational WeightOf(std::span<const Rational> weights, const EdgeSet& edges) {
  Rational total = 0;
  for (std::size_t e = edges._Find_first(); e < edges.size();
       e = edges._Find_next(e)) {
    total += weights[e];
  }
  return total;
}

Rational WeightOf(std::span<const Rational> weights, std::span<const int> edges) {
  Rational total = 0;
  for (int e : edges) total += weights[e];
  return total;
}

std::string DescribeViolation(const Violation& violation) {
  std::ostringstream out;
  if (const auto* range = std::get_if<EdgeRangeViolation>(&violation)) {
    out << "edge " << range->edge << " has weight "
        << ToFractionString(range->value) << " outside [0, 1]";
  } else if (const auto* star = std::get_if<VertexStarViolation>(&violation)) {
    out << "vertex " << star->vertex << " has star weight "
        << ToFractionString(star->value) << " != 1";
  } else {
    const auto& cut = std::get<OddCutViolation>(violation);
    out << "odd side {";
    const auto vertices = cut.cut.side_vertices();
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      out << (i ? "," : "") << vertices[i];
    }
    out << "} has boundary weight " << ToFractionString(cut.value) << " < 1";
  }
  return out.str();
}

namespace {

void CheckWeightLength(const CubicGraph& graph,
                       std::span<const Rational> weights) {
  if (static_cast<int>(weights.size()) != graph.num_edges()) {
    throw Error(ErrorCode::kInvalidParameter,
                "weighting has " + std::to_string(weights.size()) +
                    " entries, graph has " + std::to_string(graph.num_edges()) +
                    " edges");
  }
}

struct SideScan {
  std::optional<CutCertificate> first_violation;
  Rational violation_value;
  CutCertificate min_cut;
  Rational min_value;
  std::vector<CutCertificate> tight;
};

// One pass over the odd connected sides. Value is int64_t (weights scaled by
// a common denominator, `one` being that denominator) or Rational.
template <typename Value>
SideScan ScanOddSides(const CubicGraph& graph, const std::vector<Value>& weights,
                      const Value& one, bool collect_tight,
                      const auto& to_rational) {
  SideScan scan;
  bool have_min = false;
  bool have_violation = false;
  Value min_value{};
  Value violation_value{};
  VertexSet min_side = 0;
  VertexSet violation_side = 0;
  EdgeSet min_boundary;
  EdgeSet violation_boundary;
  internal::ForEachConnectedSet(
      graph, graph.num_vertices() / 2,
      [&](VertexSet side, int size, const EdgeSet& boundary) {
        if (size % 2 == 0) return;
        Value total{0};
        for (std::size_t e = boundary._Find_first(); e < boundary.size();
             e = boundary._Find_next(e)) {
          total += weights[e];
        }
        if (!have_min || total < min_value ||
            (total == min_value && CanonicalSideLess(side, min_side))) {
          have_min = true;
          min_value = total;
          min_side = side;
          min_boundary = boundary;
        }
        if (total < one && (!have_violation ||
                            CanonicalSideLess(side, violation_side))) {
          have_violation = true;
          violation_value = total;
          violation_side = side;
          violation_boundary = boundary;
        }
        if (collect_tight && total == one) {
          scan.tight.push_back(CutCertificate{side, boundary});
        }
      });
  scan.min_cut = CutCertificate{min_side, min_boundary};
  scan.min_value = to_rational(min_value);
  if (have_violation) {
    scan.first_violation = CutCertificate{violation_side, violation_boundary};
    scan.violation_value = to_rational(violation_value);
  }
  std::sort(scan.tight.begin(), scan.tight.end(),
            [](const CutCertificate& a, const CutCertificate& b) {
              return CanonicalSideLess(a.side, b.side);
            });
  return scan;
}

SideScan ScanOddSides(const CubicGraph& graph, std::span<const Rational> weights,
                      const Limits& limits, bool collect_tight) {
  internal::CheckSubsetLimit(graph, limits);
  CheckWeightLength(graph, weights);
  if (auto scaled = internal::ScaleToCommonDenominator(weights);
      scaled && mpz_sizeinbase(scaled->denominator.get_mpz_t(), 2) <= 48) {
    const BigInt denominator = scaled->denominator;
    return ScanOddSides<std::int64_t>(
        graph, scaled->numerators, denominator.get_si(), collect_tight,
        [&](std::int64_t value) {
          Rational out(BigInt(static_cast<long>(value)), denominator);
          out.canonicalize();
          return out;
        });
  }
  std::vector<Rational> exact(weights.begin(), weights.end());
  return ScanOddSides<Rational>(graph, exact, Rational(1), collect_tight,
                                [](const Rational& value) { return value; });
}

std::optional<Violation> LocalViolation(const CubicGraph& graph,
                                        std::span<const Rational> weights) {
  for (int e = 0; e < graph.num_edges(); ++e) {
    if (weights[e] < 0 || weights[e] > 1) {
      return EdgeRangeViolation{e, weights[e]};
    }
  }
  for (int v = 0; v < graph.num_vertices(); ++v) {
    Rational star = WeightOf(weights, graph.star(v));
    if (star != 1) return VertexStarViolation{v, star};
  }
  return std::nullopt;
}

}  // namespace

PolytopeVerdict VerifyFractionalPm(const CubicGraph& graph,
                                   std::span<const Rational> weights,
                                   const Limits& limits) {
  internal::CheckSubsetLimit(graph, limits);
  CheckWeightLength(graph, weights);
  if (auto local = LocalViolation(graph, weights)) return {std::move(local)};
  SideScan scan = ScanOddSides(graph, weights, limits, /*collect_tight=*/false);
  if (scan.first_violation) {
    return {OddCutViolation{*scan.first_violation, scan.violation_value}};
  }
  return {};
}

std::vector<CutCertificate> TightOddCuts(const CubicGraph& graph,
                                         std::span<const Rational> weights,
                                         const Limits& limits) {
  internal::CheckSubsetLimit(graph, limits);
  CheckWeightLength(graph, weights);
  if (auto local = LocalViolation(graph, weights)) {
    throw Error(ErrorCode::kNotAFractionalPM, DescribeViolation(*local));
  }
  SideScan scan = ScanOddSides(graph, weights, limits, /*collect_tight=*/true);
  if (scan.first_violation) {
    throw Error(ErrorCode::kNotAFractionalPM,
                DescribeViolation(OddCutViolation{*scan.first_violation,
                                                  scan.violation_value}));
  }
  return std::move(scan.tight);
}

OddCutMinimum MinOddCut(const CubicGraph& graph,
                        std::span<const Rational> weights,
                        const Limits& limits) {
  SideScan scan = ScanOddSides(graph, weights, limits, /*collect_tight=*/false);
  return OddCutMinimum{scan.min_value, scan.min_cut};
}

bool IsExactDecomposition(const CubicGraph& graph,
                          std::span<const Rational> weights,
                          const ConvexDecomposition& decomposition) {
  if (static_cast<int>(weights.size()) != graph.num_edges()) return false;
  Rational total = 0;
  std::vector<Rational> rebuilt(graph.num_edges());
  for (const DecompositionTerm& term : decomposition.terms) {
    if (term.coefficient <= 0) return false;
    total += term.coefficient;
    for (int e : term.matching.edges()) rebuilt[e] += term.coefficient;
  }
  return total == 1 &&
         std::equal(rebuilt.begin(), rebuilt.end(), weights.begin());
}

namespace {

// Phase-1 revised simplex over the columns (chi^{M_j}, 1), with an explicit
// exact basis inverse. Rows 0..|E|-1 are edges, row |E| is the convexity row.
// Artificial variable i starts basic in row i and never re-enters. Bland's
// rule on both the entering column and the leaving row.
class PhaseOneSimplex {
 public:
  PhaseOneSimplex(std::span<const PerfectMatching> matchings,
                  std::span<const Rational> weights)
      : matchings_(matchings),
        rows_(static_cast<int>(weights.size()) + 1),
        columns_(static_cast<int>(matchings.size())) {
    inverse_.assign(rows_, std::vector<Rational>(rows_));
    for (int i = 0; i < rows_; ++i) inverse_[i][i] = 1;
    values_.assign(weights.begin(), weights.end());
    values_.push_back(1);
    basis_.resize(rows_);
    for (int i = 0; i < rows_; ++i) basis_[i] = columns_ + i;
  }

  // Returns false when the system is infeasible.
  bool Solve() {
    while (true) {
      const std::vector<Rational> prices = Prices();
      const int entering = EnteringColumn(prices);
      if (entering < 0) break;
      Pivot(entering);
    }
    for (int i = 0; i < rows_; ++i) {
      if (basis_[i] >= columns_ && values_[i] != 0) return false;
    }
    return true;
  }

  ConvexDecomposition Extract() const {
    std::vector<std::pair<int, Rational>> picked;
    for (int i = 0; i < rows_; ++i) {
      if (basis_[i] < columns_ && values_[i] > 0) {
        picked.emplace_back(basis_[i], values_[i]);
      }
    }
    std::sort(picked.begin(), picked.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    ConvexDecomposition out;
    for (auto& [column, alpha] : picked) {
      out.terms.push_back(DecompositionTerm{alpha, matchings_[column]});
    }
    return out;
  }

 private:
  // y = c_B^T B^{-1} with cost 1 on artificials.
  std::vector<Rational> Prices() const {
    std::vector<Rational> prices(rows_);
    for (int i = 0; i < rows_; ++i) {
      if (basis_[i] < columns_) continue;
      for (int j = 0; j < rows_; ++j) prices[j] += inverse_[i][j];
    }
    return prices;
  }

  // Reduced cost of a matching column is -(y . a_j); enter on the first
  // positive y . a_j among nonbasic columns.
  int EnteringColumn(const std::vector<Rational>& prices) {
    in_basis_.assign(columns_, 0);
    for (int b : basis_) {
      if (b < columns_) in_basis_[b] = 1;
    }
    for (int j = 0; j < columns_; ++j) {
      if (in_basis_[j]) continue;
      Rational dot = prices[rows_ - 1];
      for (int e : matchings_[j].edges()) dot += prices[e];
      if (dot > 0) return j;
    }
    return -1;
  }

  void Pivot(int entering) {
    // d = B^{-1} a_j
    std::vector<Rational> direction(rows_);
    for (int i = 0; i < rows_; ++i) {
      Rational sum = inverse_[i][rows_ - 1];
      for (int e : matchings_[entering].edges()) sum += inverse_[i][e];
      direction[i] = sum;
    }
    int leaving = -1;
    Rational best_ratio;
    for (int i = 0; i < rows_; ++i) {
      if (direction[i] <= 0) continue;
      Rational ratio = values_[i] / direction[i];
      if (leaving < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis_[i] < basis_[leaving])) {
        leaving = i;
        best_ratio = ratio;
      }
    }
    // An entering column with positive price always has a positive entry
    // in some row; otherwise phase 1 would be unbounded below, which it
    // cannot be.
    if (leaving < 0) {
      throw Error(ErrorCode::kInvariantBroken, "phase-1 ratio test found no row");
    }
    const Rational pivot = direction[leaving];
    for (Rational& entry : inverse_[leaving]) entry /= pivot;
    values_[leaving] /= pivot;
    for (int i = 0; i < rows_; ++i) {
      if (i == leaving || direction[i] == 0) continue;
      const Rational factor = direction[i];
      for (int j = 0; j < rows_; ++j) {
        if (inverse_[leaving][j] != 0) {
          inverse_[i][j] -= factor * inverse_[leaving][j];
        }
      }
      values_[i] -= factor * values_[leaving];
    }
    basis_[leaving] = entering;
  }

  std::span<const PerfectMatching> matchings_;
  const int rows_;
  const int columns_;
  std::vector<std::vector<Rational>> inverse_;
  std::vector<Rational> values_;
  std::vector<int> basis_;
  std::vector<char> in_basis_;
};

}  // namespace

ConvexDecomposition Decompose(const CubicGraph& graph,
                              std::span<const Rational> weights,
                              const Limits& limits) {
  PolytopeVerdict verdict = VerifyFractionalPm(graph, weights, limits);
  if (!verdict.valid()) {
    throw Error(ErrorCode::kNotAFractionalPM,
                DescribeViolation(*verdict.violation));
  }
  const std::vector<PerfectMatching> matchings = EnumeratePerfectMatchings(graph);
  PhaseOneSimplex simplex(matchings, weights);
  if (!simplex.Solve()) {
    std::ostringstream dump;
    dump << "no convex combination of " << matchings.size()
         << " perfect matchings reproduces w = [";
    for (std::size_t e = 0; e < weights.size(); ++e) {
      dump << (e ? " " : "") << ToFractionString(weights[e]);
    }
    dump << "]; columns:";
    for (const PerfectMatching& m : matchings) {
      dump << " {";
      for (std::size_t i = 0; i < m.edges().size(); ++i) {
        dump << (i ? "," : "") << m.edges()[i];
      }
      dump << "}";
    }
    throw Error(ErrorCode::kInfeasibleDecomposition, dump.str());
  }
  ConvexDecomposition decomposition = simplex.Extract();
  if (!IsExactDecomposition(graph, weights, decomposition)) {
    throw Error(ErrorCode::kInvariantBroken,
                "simplex basis does not reproduce the weighting");
  }
  return decomposition;
}

}  // namespace pmcover
