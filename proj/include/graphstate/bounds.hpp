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

#ifndef GRAPHSTATE_BOUNDS_H
#define GRAPHSTATE_BOUNDS_H

#include <cstdint>
#include <optional>

#include "graphstate/cut_rank.hpp"
#include "graphstate/graph.hpp"

namespace graphstate {

/// Lower/upper entanglement bounds with their combinatorial witnesses.
/// E_low ebits come from the best bipartition found, E_high = n - |A|
/// from the largest independent set; the state's entanglement sits in
/// [E_low, E_high] and 2^{lower_log_N} .. 2^{upper_log_N} basis states
/// are LOCC-discriminable.
struct BoundsReport {
    size_t n = 0;
    size_t lower_log_N = 0;             // |A|
    VertexSet witness_set;              // the independent (Amber) set
    size_t upper_log_N = 0;             // n - E_low
    size_t E_low = 0;                   // max cut-rank found
    size_t E_high = 0;                  // n - |A|
    bool exact = false;                 // E_low == E_high
    std::optional<Bipartition> witness_bipartition;  // absent for n == 1
    bool certified = false;             // both searches ran to completion
};

enum class MatchingStrategy { Auto, Exhaustive, Heuristic };

struct BoundsOptions {
    uint64_t mis_budget_nodes = 10'000'000;
    uint64_t matching_budget = 10'000'000;  // bipartitions examined
    MatchingStrategy strategy = MatchingStrategy::Auto;
    size_t heuristic_restarts = 64;
    uint64_t seed = 0;
};

/// Independent set maximization; N >= 2^{|A|} states are LOCC-discriminable.
MisResult coloring_lower_bound(const Graph &g, uint64_t budget_nodes = 10'000'000);

struct MatchingResult {
    Bipartition partition;
    size_t e_low = 0;  // best cut-rank found
    bool certified = false;
};

/// Maximizes cut-rank over bipartitions. Exhaustive up to n <= 24 within
/// budget; otherwise seeded multi-restart local search (single-vertex
/// moves, accept on non-decrease).
MatchingResult matching_upper_bound(const Graph &g, const BoundsOptions &opts = {});

BoundsReport entanglement_report(const Graph &g, const BoundsOptions &opts = {});

struct OrbitResult {
    Graph best_graph;
    BoundsReport report;
    size_t visited = 0;
};

/// Breadth-limited search over local-complementation images, keeping the
/// orbit member with the best (highest |A|, then highest E_low) bounds.
/// Depth 0 returns g's own report.
OrbitResult lc_orbit_search(const Graph &g, size_t depth, size_t beam, const BoundsOptions &opts = {});

}  // namespace graphstate

#endif
