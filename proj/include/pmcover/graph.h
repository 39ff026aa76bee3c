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

// Cubic graph representation, graph6 I/O, structural checks and cut
// enumeration.
//
// Vertex subsets are 64-bit masks (n <= 62) and edge subsets are fixed-width
// bitsets indexed by canonical edge index. Edges are stored as (u, v) with
// u < v, sorted lexicographically; an edge's index is its position in that
// order, so the same graph always gets the same indexing.

#ifndef PMCOVER_GRAPH_H_
#define PMCOVER_GRAPH_H_

#include <array>
#include <bitset>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pmcover {

inline constexpr int kMaxVertices = 62;
inline constexpr int kMaxEdges = 3 * kMaxVertices / 2;

using VertexSet = std::uint64_t;
using EdgeSet = std::bitset<kMaxEdges>;

struct Edge {
  int u;
  int v;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Search budgets shared by the exponential routines.
struct Limits {
  // Largest vertex count for which vertex-subset enumeration is attempted.
  int max_subset_n = 32;
  // Largest perfect matching count accepted by the cover searches.
  std::size_t pm_cap = 5000;
};

class CubicGraph {
 public:
  // Validates simplicity, 3-regularity and connectivity. Edge endpoints may
  // be given in any order. Throws Error with kNotSimple, kNotCubic,
  // kNotConnected or kInvalidParameter.
  static CubicGraph FromEdges(int num_vertices,
                              std::vector<std::pair<int, int>> edges);

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_[e]; }

  // Incident edge indices of v, ascending.
  const std::array<int, 3>& incident(int v) const { return incident_[v]; }
  int Other(int e, int v) const {
    return edges_[e].u == v ? edges_[e].v : edges_[e].u;
  }
  VertexSet neighbors(int v) const { return neighbors_[v]; }
  const EdgeSet& star(int v) const { return stars_[v]; }
  VertexSet all_vertices() const {
    return num_vertices_ == 64 ? ~VertexSet{0}
                               : (VertexSet{1} << num_vertices_) - 1;
  }
  EdgeSet all_edges() const;

  friend bool operator==(const CubicGraph& a, const CubicGraph& b) {
    return a.num_vertices_ == b.num_vertices_ && a.edges_ == b.edges_;
  }

 private:
  CubicGraph() = default;

  int num_vertices_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::array<int, 3>> incident_;
  std::vector<VertexSet> neighbors_;
  std::vector<EdgeSet> stars_;
};

// A vertex side X together with its boundary edge set.
struct CutCertificate {
  VertexSet side = 0;
  EdgeSet boundary;

  int size() const { return static_cast<int>(boundary.count()); }
  int side_size() const;
  std::vector<int> side_vertices() const;
  std::vector<int> boundary_edges() const;

  friend bool operator==(const CutCertificate& a, const CutCertificate& b) {
    return a.side == b.side && a.boundary == b.boundary;
  }
};

// ---------------------------------------------------------------- graph6

// Decodes a short-form graph6 line (n <= 62) into a validated cubic graph.
// Throws kMalformedGraph6 on bad bytes or wrong length, then the
// FromEdges errors.
CubicGraph ParseGraph6(std::string_view text);

// Raw decoding without cubic validation: vertex count and edge list.
std::pair<int, std::vector<std::pair<int, int>>> DecodeGraph6(
    std::string_view text);

std::string EncodeGraph6(const CubicGraph& graph);

// ---------------------------------------------------------------- fixtures

enum class FixtureKind { kK4, kK33, kPrism, kPetersen, kFlower };

// flower_k is only read for kFlower and must be odd and >= 5
// (kInvalidParameter otherwise).
CubicGraph Fixture(FixtureKind kind, int flower_k = 0);

// "K4", "K33", "PRISM", "PETERSEN", "FLOWER5", "FLOWER(7)"; case-insensitive.
// Throws kInvalidParameter for unknown names.
CubicGraph FixtureByName(std::string_view name);

// ---------------------------------------------------------------- structure

bool IsConnected(const CubicGraph& graph, VertexSet within);
bool IsBridgeless(const CubicGraph& graph);

// Throws kEmptySide when X is empty or the whole vertex set.
CutCertificate Boundary(const CubicGraph& graph, VertexSet side);

// Canonical side order: by |X|, then lexicographically by sorted vertex list.
bool CanonicalSideLess(VertexSet a, VertexSet b);

// Calls visit(X) once for every connected X with |X| odd and |X| <= n/2.
// When n/2 is odd, both halves of a balanced split are visited. Order is the
// deterministic generation order, not the canonical order.
// Throws kGraphTooLarge when n exceeds limits.max_subset_n.
void ForEachOddConnectedSide(const CubicGraph& graph, const Limits& limits,
                             const std::function<void(VertexSet)>& visit);

// Same set of sides as certificates, sorted canonically.
std::vector<CutCertificate> EnumerateOddConnectedSides(const CubicGraph& graph,
                                                       const Limits& limits);

// All minimal cuts of the given size: boundaries of X with G[X] and G[V\X]
// both connected, one certificate per {X, V\X} pair (the side kept is the
// smaller one, or the one holding vertex 0 on a tie). Canonical order.
std::vector<CutCertificate> EnumerateMinimalCuts(const CubicGraph& graph,
                                                 int size,
                                                 const Limits& limits);

}  // namespace pmcover

#endif  // PMCOVER_GRAPH_H_
