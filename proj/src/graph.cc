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

#include "pmcover/graph.h"

#include <algorithm>
#include <bit>
#include <cctype>
#include <string>

#include "pmcover/error.h"
#include "side_enumeration.h"

namespace pmcover {

CubicGraph CubicGraph::FromEdges(int num_vertices,
                                 std::vector<std::pair<int, int>> edges) {
  if (num_vertices < 1 || num_vertices > kMaxVertices) {
    throw Error(ErrorCode::kInvalidParameter,
                "vertex count " + std::to_string(num_vertices) +
                    " outside [1, " + std::to_string(kMaxVertices) + "]");
  }
  CubicGraph graph;
  graph.num_vertices_ = num_vertices;
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= num_vertices || b >= num_vertices) {
      throw Error(ErrorCode::kInvalidParameter,
                  "edge (" + std::to_string(a) + "," + std::to_string(b) +
                      ") has an endpoint outside the vertex range");
    }
    if (a == b) {
      throw Error(ErrorCode::kNotSimple,
                  "loop at vertex " + std::to_string(a));
    }
    graph.edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
  }
  std::sort(graph.edges_.begin(), graph.edges_.end());
  auto dup = std::adjacent_find(graph.edges_.begin(), graph.edges_.end());
  if (dup != graph.edges_.end()) {
    throw Error(ErrorCode::kNotSimple, "parallel edges between " +
                                           std::to_string(dup->u) + " and " +
                                           std::to_string(dup->v));
  }

  std::vector<std::vector<int>> incident(num_vertices);
  for (int e = 0; e < graph.num_edges(); ++e) {
    incident[graph.edges_[e].u].push_back(e);
    incident[graph.edges_[e].v].push_back(e);
  }
  for (int v = 0; v < num_vertices; ++v) {
    if (incident[v].size() != 3) {
      throw Error(ErrorCode::kNotCubic,
                  "vertex " + std::to_string(v) + " has degree " +
                      std::to_string(incident[v].size()));
    }
  }
  graph.incident_.resize(num_vertices);
  graph.neighbors_.assign(num_vertices, 0);
  graph.stars_.resize(num_vertices);
  for (int v = 0; v < num_vertices; ++v) {
    for (int i = 0; i < 3; ++i) {
      const int e = incident[v][i];
      graph.incident_[v][i] = e;
      graph.neighbors_[v] |= VertexSet{1} << graph.Other(e, v);
      graph.stars_[v].set(e);
    }
  }
  if (!IsConnected(graph, graph.all_vertices())) {
    throw Error(ErrorCode::kNotConnected, "graph has more than one component");
  }
  return graph;
}

EdgeSet CubicGraph::all_edges() const {
  EdgeSet all;
  for (int e = 0; e < num_edges(); ++e) all.set(e);
  return all;
}

int CutCertificate::side_size() const { return std::popcount(side); }

std::vector<int> CutCertificate::side_vertices() const {
  std::vector<int> out;
  for (VertexSet rest = side; rest != 0; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest));
  }
  return out;
}

std::vector<int> CutCertificate::boundary_edges() const {
  std::vector<int> out;
  for (int e = 0; e < kMaxEdges; ++e) {
    if (boundary.test(e)) out.push_back(e);
  }
  return out;
}

// ---------------------------------------------------------------- graph6

namespace {

constexpr int kGraph6Offset = 63;

int Graph6BitCount(int n) { return n * (n - 1) / 2; }

}  // namespace

std::pair<int, std::vector<std::pair<int, int>>> DecodeGraph6(
    std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  if (text.empty()) {
    throw Error(ErrorCode::kMalformedGraph6, "empty graph6 string");
  }
  for (char ch : text) {
    const int byte = static_cast<unsigned char>(ch);
    if (byte < kGraph6Offset || byte > 126) {
      throw Error(ErrorCode::kMalformedGraph6,
                  "byte " + std::to_string(byte) + " outside 63..126");
    }
  }
  const int n = static_cast<unsigned char>(text[0]) - kGraph6Offset;
  if (n > kMaxVertices) {
    throw Error(ErrorCode::kMalformedGraph6,
                "long-form graph6 (n > 62) is not supported");
  }
  const int bits = Graph6BitCount(n);
  const std::size_t expected = 1 + (bits + 5) / 6;
  if (text.size() != expected) {
    throw Error(ErrorCode::kMalformedGraph6,
                "expected " + std::to_string(expected) + " bytes for n=" +
                    std::to_string(n) + ", got " +
                    std::to_string(text.size()));
  }
  auto bit_at = [&](int k) {
    const int value = static_cast<unsigned char>(text[1 + k / 6]) - kGraph6Offset;
    return (value >> (5 - k % 6)) & 1;
  };
  for (int k = bits; k < 6 * static_cast<int>(expected - 1); ++k) {
    if (bit_at(k) != 0) {
      throw Error(ErrorCode::kMalformedGraph6, "nonzero padding bits");
    }
  }
  std::vector<std::pair<int, int>> edges;
  int k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (bit_at(k) != 0) edges.emplace_back(i, j);
    }
  }
  return {n, std::move(edges)};
}

CubicGraph ParseGraph6(std::string_view text) {
  auto [n, edges] = DecodeGraph6(text);
  if (n == 0) throw Error(ErrorCode::kNotCubic, "graph has no vertices");
  return CubicGraph::FromEdges(n, std::move(edges));
}

std::string EncodeGraph6(const CubicGraph& graph) {
  const int n = graph.num_vertices();
  const int bits = Graph6BitCount(n);
  std::vector<int> values((bits + 5) / 6, 0);
  for (const Edge& edge : graph.edges()) {
    // Column-major upper triangle: x(i,j) for i < j sits at j(j-1)/2 + i.
    const int k = edge.v * (edge.v - 1) / 2 + edge.u;
    values[k / 6] |= 1 << (5 - k % 6);
  }
  std::string out(1, static_cast<char>(n + kGraph6Offset));
  for (int value : values) out.push_back(static_cast<char>(value + kGraph6Offset));
  return out;
}

// ---------------------------------------------------------------- fixtures

CubicGraph Fixture(FixtureKind kind, int flower_k) {
  std::vector<std::pair<int, int>> edges;
  switch (kind) {
    case FixtureKind::kK4:
      edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
      return CubicGraph::FromEdges(4, edges);
    case FixtureKind::kK33:
      for (int a = 0; a < 3; ++a) {
        for (int b = 3; b < 6; ++b) edges.emplace_back(a, b);
      }
      return CubicGraph::FromEdges(6, edges);
    case FixtureKind::kPrism:
      edges = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5},
               {3, 5}, {0, 3}, {1, 4}, {2, 5}};
      return CubicGraph::FromEdges(6, edges);
    case FixtureKind::kPetersen:
      // Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram.
      for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
      }
      return CubicGraph::FromEdges(10, edges);
    case FixtureKind::kFlower: {
      if (flower_k < 5 || flower_k % 2 == 0) {
        throw Error(ErrorCode::kInvalidParameter,
                    "flower snark needs odd k >= 5, got " +
                        std::to_string(flower_k));
      }
      // Claw i is a_i = 4i with leaves b_i, c_i, d_i. The b's form a
      // k-cycle; the c's and d's form one 2k-cycle with a twist.
      const int k = flower_k;
      auto a = [](int i) { return 4 * i; };
      auto b = [](int i) { return 4 * i + 1; };
      auto c = [](int i) { return 4 * i + 2; };
      auto d = [](int i) { return 4 * i + 3; };
      for (int i = 0; i < k; ++i) {
        edges.emplace_back(a(i), b(i));
        edges.emplace_back(a(i), c(i));
        edges.emplace_back(a(i), d(i));
        edges.emplace_back(b(i), b((i + 1) % k));
        if (i + 1 < k) {
          edges.emplace_back(c(i), c(i + 1));
          edges.emplace_back(d(i), d(i + 1));
        }
      }
      edges.emplace_back(c(k - 1), d(0));
      edges.emplace_back(d(k - 1), c(0));
      return CubicGraph::FromEdges(4 * k, edges);
    }
  }
  throw Error(ErrorCode::kInvalidParameter, "unknown fixture kind");
}

CubicGraph FixtureByName(std::string_view name) {
  std::string key;
  for (char ch : name) {
    if (ch == '(' || ch == ')' || ch == '_' || ch == ' ') continue;
    key.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
  }
  if (key == "K4") return Fixture(FixtureKind::kK4);
  if (key == "K33") return Fixture(FixtureKind::kK33);
  if (key == "PRISM") return Fixture(FixtureKind::kPrism);
  if (key == "PETERSEN") return Fixture(FixtureKind::kPetersen);
  if (key.starts_with("FLOWER") && key.size() > 6 && key.size() < 10 &&
      std::all_of(key.begin() + 6, key.end(),
                  [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
    return Fixture(FixtureKind::kFlower, std::stoi(key.substr(6)));
  }
  throw Error(ErrorCode::kInvalidParameter,
              "unknown fixture '" + std::string(name) + "'");
}

// ---------------------------------------------------------------- structure

bool IsConnected(const CubicGraph& graph, VertexSet within) {
  if (within == 0) return false;
  VertexSet reached = within & (~within + 1);
  VertexSet frontier = reached;
  while (frontier != 0) {
    VertexSet next = 0;
    for (VertexSet rest = frontier; rest != 0; rest &= rest - 1) {
      next |= graph.neighbors(std::countr_zero(rest));
    }
    frontier = next & within & ~reached;
    reached |= frontier;
  }
  return reached == within;
}

namespace {

bool ConnectedWithoutEdge(const CubicGraph& graph, int removed) {
  const int n = graph.num_vertices();
  std::vector<char> seen(n, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int e : graph.incident(v)) {
      if (e == removed) continue;
      const int u = graph.Other(e, v);
      if (!seen[u]) {
        seen[u] = 1;
        ++count;
        stack.push_back(u);
      }
    }
  }
  return count == n;
}

}  // namespace

bool IsBridgeless(const CubicGraph& graph) {
  for (int e = 0; e < graph.num_edges(); ++e) {
    if (!ConnectedWithoutEdge(graph, e)) return false;
  }
  return true;
}

CutCertificate Boundary(const CubicGraph& graph, VertexSet side) {
  if (side == 0 || (side & graph.all_vertices()) == graph.all_vertices()) {
    throw Error(ErrorCode::kEmptySide, "cut side must be a proper nonempty subset");
  }
  if ((side & ~graph.all_vertices()) != 0) {
    throw Error(ErrorCode::kInvalidParameter, "cut side names missing vertices");
  }
  CutCertificate cut;
  cut.side = side;
  for (int e = 0; e < graph.num_edges(); ++e) {
    const Edge& edge = graph.edge(e);
    if (((side >> edge.u) & 1) != ((side >> edge.v) & 1)) cut.boundary.set(e);
  }
  return cut;
}

bool CanonicalSideLess(VertexSet a, VertexSet b) {
  const int size_a = std::popcount(a);
  const int size_b = std::popcount(b);
  if (size_a != size_b) return size_a < size_b;
  if (a == b) return false;
  const VertexSet diff = a ^ b;
  return (a & (diff & (~diff + 1))) != 0;
}

namespace internal {

void CheckSubsetLimit(const CubicGraph& graph, const Limits& limits) {
  if (graph.num_vertices() > limits.max_subset_n) {
    throw Error(ErrorCode::kGraphTooLarge,
                "n=" + std::to_string(graph.num_vertices()) +
                    " exceeds the subset-enumeration threshold " +
                    std::to_string(limits.max_subset_n));
  }
}

}  // namespace internal

void ForEachOddConnectedSide(const CubicGraph& graph, const Limits& limits,
                             const std::function<void(VertexSet)>& visit) {
  internal::CheckSubsetLimit(graph, limits);
  internal::ForEachConnectedSet(
      graph, graph.num_vertices() / 2,
      [&](VertexSet side, int size, const EdgeSet&) {
        if (size % 2 == 1) visit(side);
      });
}

namespace {

void SortCanonically(std::vector<CutCertificate>& cuts) {
  std::sort(cuts.begin(), cuts.end(),
            [](const CutCertificate& a, const CutCertificate& b) {
              return CanonicalSideLess(a.side, b.side);
            });
}

}  // namespace

std::vector<CutCertificate> EnumerateOddConnectedSides(const CubicGraph& graph,
                                                       const Limits& limits) {
  internal::CheckSubsetLimit(graph, limits);
  std::vector<CutCertificate> out;
  internal::ForEachConnectedSet(
      graph, graph.num_vertices() / 2,
      [&](VertexSet side, int size, const EdgeSet& boundary) {
        if (size % 2 == 1) out.push_back(CutCertificate{side, boundary});
      });
  SortCanonically(out);
  return out;
}

std::vector<CutCertificate> EnumerateMinimalCuts(const CubicGraph& graph,
                                                 int size,
                                                 const Limits& limits) {
  if (size < 1) {
    throw Error(ErrorCode::kInvalidParameter, "cut size must be positive");
  }
  internal::CheckSubsetLimit(graph, limits);
  const int n = graph.num_vertices();
  const VertexSet all = graph.all_vertices();
  std::vector<CutCertificate> out;
  // In a cubic graph |boundary(X)| = 3|X| - 2|E(X)| has the parity of |X|.
  internal::ForEachConnectedSet(
      graph, n / 2, [&](VertexSet side, int side_size, const EdgeSet& boundary) {
        if ((side_size - size) % 2 != 0) return;
        if (static_cast<int>(boundary.count()) != size) return;
        if (2 * side_size == n && (side & 1) == 0) return;
        if (!IsConnected(graph, all & ~side)) return;
        out.push_back(CutCertificate{side, boundary});
      });
  SortCanonically(out);
  return out;
}

}  // namespace pmcover
