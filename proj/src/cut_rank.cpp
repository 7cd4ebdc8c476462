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

#include "graphstate/cut_rank.hpp"

#include <bit>
#include <stdexcept>

namespace graphstate {

Bipartition Bipartition::of(const Graph &g, VertexSet a) {
    uint64_t full = VertexSet::all(g.n).mask;
    if (a.mask & ~full) {
        throw std::invalid_argument("Bipartition: vertex out of range");
    }
    if (a.mask == 0 || a.mask == full) {
        throw std::invalid_argument("Bipartition: both sides must be non-empty");
    }
    Bipartition p;
    p.side_a = a;
    p.side_b.mask = full & ~a.mask;
    return p;
}

size_t gf2_rank(std::vector<uint64_t> rows) {
    size_t rank = 0;
    for (size_t col = 0; col < 64 && rank < rows.size(); col++) {
        uint64_t bit = uint64_t{1} << col;
        size_t pivot = rank;
        while (pivot < rows.size() && !(rows[pivot] & bit)) {
            pivot++;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[pivot]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != rank && (rows[r] & bit)) {
                rows[r] ^= rows[rank];
            }
        }
        rank++;
    }
    return rank;
}

size_t cut_rank(const Graph &g, const Bipartition &p) {
    uint64_t full = VertexSet::all(g.n).mask;
    if ((p.side_a.mask | p.side_b.mask) != full || (p.side_a.mask & p.side_b.mask) ||
        p.side_a.empty() || p.side_b.empty()) {
        throw std::invalid_argument("cut_rank: invalid partition");
    }
    std::vector<uint64_t> rows;
    rows.reserve(p.side_a.size());
    for (uint64_t m = p.side_a.mask; m; m &= m - 1) {
        size_t v = static_cast<size_t>(std::countr_zero(m));
        rows.push_back(g.adj[v] & p.side_b.mask);
    }
    return gf2_rank(std::move(rows));
}

}  // namespace graphstate
