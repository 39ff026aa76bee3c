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

// Fractional perfect matchings: membership in the perfect matching polytope,
// tight odd cuts, minimum odd cut and convex decomposition into perfect
// matchings. All arithmetic is exact.
//
// Odd-set constraints are only checked on connected sides X with |X| <= n/2.
// For odd X some component X' of G[X] is odd with boundary(X') a subset of
// boundary(X), so with nonnegative weights the minimum over all odd sets is
// attained on a connected side; complements share the same boundary.

#ifndef PMCOVER_POLYTOPE_H_
#define PMCOVER_POLYTOPE_H_

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "pmcover/graph.h"
#include "pmcover/matching.h"
#include "pmcover/rational.h"

namespace pmcover {

// One exact weight per edge, indexed like CubicGraph::edges().
using FractionalWeighting = std::vector<Rational>;

Rational WeightOf(std::span<const Rational> weights, const EdgeSet& edges);
Rational WeightOf(std::span<const Rational> weights, std::span<const int> edges);

struct EdgeRangeViolation {
  int edge;
  Rational value;
};

struct VertexStarViolation {
  int vertex;
  Rational value;
};

struct OddCutViolation {
  CutCertificate cut;
  Rational value;
};

using Violation =
    std::variant<EdgeRangeViolation, VertexStarViolation, OddCutViolation>;

std::string DescribeViolation(const Violation& violation);

struct PolytopeVerdict {
  std::optional<Violation> violation;

  bool valid() const { return !violation.has_value(); }
};

// Checks 0 <= w(e) <= 1, w(star(v)) = 1 and w(boundary(X)) >= 1 for odd X, in
// that order. The first violation is reported: lowest edge, then lowest
// vertex, then the canonically first odd side.
PolytopeVerdict VerifyFractionalPm(const CubicGraph& graph,
                                   std::span<const Rational> weights,
                                   const Limits& limits = {});

// Odd connected sides with w(boundary(X)) = 1, canonical order (vertex stars
// come first). Throws kNotAFractionalPM if the weighting fails verification.
std::vector<CutCertificate> TightOddCuts(const CubicGraph& graph,
                                         std::span<const Rational> weights,
                                         const Limits& limits = {});

struct OddCutMinimum {
  Rational value;
  CutCertificate cut;  // canonically first minimizer
};

OddCutMinimum MinOddCut(const CubicGraph& graph,
                        std::span<const Rational> weights,
                        const Limits& limits = {});

struct DecompositionTerm {
  Rational coefficient;
  PerfectMatching matching;
};

struct ConvexDecomposition {
  std::vector<DecompositionTerm> terms;
};

// Positive coefficients, coefficient sum 1, and sum_i alpha_i chi^{M_i} = w
// entrywise.
bool IsExactDecomposition(const CubicGraph& graph,
                          std::span<const Rational> weights,
                          const ConvexDecomposition& decomposition);

// Writes w as a convex combination of at most |E| + 1 perfect matchings.
// Enumerates all perfect matchings and runs an exact phase-1 simplex on
// {sum alpha_i chi^{M_i} = w, sum alpha_i = 1, alpha >= 0}. The result is
// checked with IsExactDecomposition before it is returned.
//
// Throws kNotAFractionalPM for weightings outside the polytope and
// kInfeasibleDecomposition (with the system in the message) if the linear
// system turns out infeasible anyway.
ConvexDecomposition Decompose(const CubicGraph& graph,
                              std::span<const Rational> weights,
                              const Limits& limits = {});

}  // namespace pmcover

#endif  // PMCOVER_POLYTOPE_H_
