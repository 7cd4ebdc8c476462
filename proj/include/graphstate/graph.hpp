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

#ifndef GRAPHSTATE_GRAPH_H
#define GRAPHSTATE_GRAPH_H

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace graphstate {

/// Subset of vertices {0..n-1}, bit i set iff vertex i is a member.
struct VertexSet {
    uint64_t mask = 0;

    static VertexSet all(size_t n);
    static VertexSet of(std::initializer_list<size_t> vs);

    bool contains(size_t v) const { return (mask >> v) & 1u; }
    void add(size_t v) { mask |= uint64_t{1} << v; }
    void remove(size_t v) { mask &= ~(uint64_t{1} << v); }
    size_t size() const;
    bool empty() const { return mask == 0; }
    std::vector<size_t> members() const;

    friend bool operator==(const VertexSet &a, const VertexSet &b) = default;
};

/// Simple undirected graph on n <= 64 vertices, stored as one adjacency
/// bitmask row per vertex. Rows are kept symmetric with zero diagonal.
struct Graph {
    size_t n = 0;
    std::vector<uint64_t> adj;  // adj[i] bit j set iff edge (i,j)

    Graph() = default;
    explicit Graph(size_t n);

    bool has_edge(size_t i, size_t j) const { return (adj[i] >> j) & 1u; }
    void add_edge(size_t i, size_t j);
    uint64_t neighbors(size_t v) const { return adj[v]; }
    size_t degree(size_t v) const;
    size_t edge_count() const;
    std::vector<std::pair<size_t, size_t>> edges() const;

    friend bool operator==(const Graph &a, const Graph &b) = default;
};

/// Proper two-colouring; amber is the majority side.
struct Coloring {
    VertexSet amber;
    VertexSet blue;
};

// Canonical graph families. Grid vertices are numbered row-major
// (layer-major first for 3D); vertex 0 is the star centre for ghz_star.
Graph cluster1d(size_t n);
Graph cluster2d(size_t rows, size_t cols);
Graph cluster3d(size_t rows, size_t cols, size_t layers);
Graph ghz_star(size_t n);
Graph ghz_complete(size_t n);
Graph ring(size_t n);  // requires n >= 3
Graph steane7();
Graph from_edge_list(size_t n, const std::vector<std::pair<size_t, size_t>> &edges);

/// Complements the subgraph induced on the neighbourhood of v.
Graph local_complement(const Graph &g, size_t v);

/// Flips edge (i,j); i != j required.
Graph toggle_edge(const Graph &g, size_t i, size_t j);

/// Block-diagonal union; g2 vertices are shifted by g1.n.
Graph disjoint_union(const Graph &g1, const Graph &g2);

/// Proper 2-colouring with |amber| >= |blue| (majority per connected
/// component; ties go to the side containing the component's lowest
/// vertex). Absent if the graph has an odd cycle.
std::optional<Coloring> two_color(const Graph &g);

bool is_independent(const Graph &g, const VertexSet &s);

/// Result of the maximum-independent-set search.
struct MisResult {
    VertexSet set;
    size_t size = 0;
    bool certified = false;  // exact search completed within budget
};

/// Exact branch-and-bound MIS on bitsets with a greedy clique-cover bound.
/// If the node budget runs out the best set found so far is returned
/// uncertified. Ties among maximum sets break to the set whose sorted
/// member list is lexicographically smallest.
MisResult max_independent_set(const Graph &g, uint64_t budget_nodes = 10'000'000);

std::string to_string(const Graph &g);

}  // namespace graphstate

#endif
