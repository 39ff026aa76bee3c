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

// Internal: enumeration of connected vertex subsets of a cubic graph.

#ifndef PMCOVER_SIDE_ENUMERATION_H_
#define PMCOVER_SIDE_ENUMERATION_H_

#include <bit>

#include "pmcover/graph.h"

namespace pmcover::internal {

template <typename Visit>
class ConnectedSetWalker {
 public:
  ConnectedSetWalker(const CubicGraph& graph, int max_size, Visit& visit)
      : graph_(graph), max_size_(max_size), visit_(visit) {}

  // ESU-style enumeration (Wernicke 2006): every connected set is produced
  // exactly once, rooted at its smallest vertex. The boundary edge set is
  // maintained incrementally as S xor star(w).
  void Run() {
    if (max_size_ < 1) return;
    const int n = graph_.num_vertices();
    for (int root = 0; root < n; ++root) {
      const VertexSet above =
          graph_.all_vertices() & ~((VertexSet{2} << root) - 1);
      above_ = above;
      const VertexSet root_bit = VertexSet{1} << root;
      Extend(root_bit, 1, graph_.neighbors(root) & above,
             root_bit | graph_.neighbors(root), graph_.star(root));
    }
  }

 private:
  void Extend(VertexSet set, int size, VertexSet extension, VertexSet closed,
              const EdgeSet& boundary) {
    visit_(set, size, boundary);
    if (size == max_size_) return;
    while (extension != 0) {
      const int w = std::countr_zero(extension);
      const VertexSet w_bit = VertexSet{1} << w;
      extension &= ~w_bit;
      const VertexSet next_extension =
          extension | (graph_.neighbors(w) & ~closed & above_);
      Extend(set | w_bit, size + 1, next_extension,
             closed | graph_.neighbors(w), boundary ^ graph_.star(w));
    }
  }

  const CubicGraph& graph_;
  const int max_size_;
  Visit& visit_;
  VertexSet above_ = 0;
};

// visit(VertexSet side, int size, const EdgeSet& boundary) for every
// connected side with 1 <= |side| <= max_size.
template <typename Visit>
void ForEachConnectedSet(const CubicGraph& graph, int max_size, Visit&& visit) {
  ConnectedSetWalker<std::remove_reference_t<Visit>> walker(graph, max_size,
                                                            visit);
  walker.Run();
}

void CheckSubsetLimit(const CubicGraph& graph, const Limits& limits);

}  // namespace pmcover::internal

#endif  // PMCOVER_SIDE_ENUMERATION_H_
