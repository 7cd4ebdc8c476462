// Copyright 2026 The graphstate authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GRAPHSTATE_CUT_RANK_H
#define GRAPHSTATE_CUT_RANK_H

#include <cstdint>
#include <vector>

#include "graphstate/graph.hpp"

namespace graphstate {

/// Proper bipartition: both sides non-empty, together covering all vertices.
struct Bipartition {
    VertexSet side_a;
    VertexSet side_b;

    static Bipartition of(const Graph &g, VertexSet a);
};

/// GF(2) rank of bit-packed rows. Pivoting is deterministic: lowest
/// column index first.
size_t gf2_rank(std::vector<uint64_t> rows);

/// GF(2) rank of the adjacency block between the two sides; equals the
/// number of Bell pairs of the graph state across the cut.
size_t cut_rank(const Graph &g, const Bipartition &p);

}  // namespace graphstate

#endif
