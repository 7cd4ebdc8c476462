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

#include "graphstate/graph.hpp"

#include "graphstate/cut_rank.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace graphstate {

VertexSet VertexSet::all(size_t n) {
    VertexSet s;
    s.mask = (n >= 64) ? ~uint64_t{0} : ((uint64_t{1} << n) - 1);
    return s;
}

VertexSet VertexSet::of(std::initializer_list<size_t> vs) {
    VertexSet s;
    for (size_t v : vs) {
        s.add(v);
    }
    return s;
}

size_t VertexSet::size() const {
    return static_cast<size_t>(std::popcount(mask));
}

std::vector<size_t> VertexSet::members() const {
    std::vector<size_t> out;
    for (uint64_t m = mask; m; m &= m - 1) {
        out.push_back(static_cast<size_t>(std::countr_zero(m)));
    }
    return out;
}

Graph::Graph(size_t n_) : n(n_), adj(n_, 0) {
    if (n_ < 1 || n_ > 64) {
        throw std::invalid_argument("Graph: vertex count must be in [1, 64]");
    }
}

void Graph::add_edge(size_t i, size_t j) {
    if (i == j) {
        throw std::invalid_argument("Graph: self-loop");
    }
    if (i >= n || j >= n) {
        throw std::invalid_argument("Graph: vertex out of range");
    }
    adj[i] |= uint64_t{1} << j;
    adj[j] |= uint64_t{1} << i;
}

size_t Graph::degree(size_t v) const {
    return static_cast<size_t>(std::popcount(adj[v]));
}

size_t Graph::edge_count() const {
    size_t twice = 0;
    for (uint64_t row : adj) {
        twice += static_cast<size_t>(std::popcount(row));
    }
    return twice / 2;
}

std::vector<std::pair<size_t, size_t>> Graph::edges() const {
    std::vector<std::pair<size_t, size_t>> out;
    for (size_t i = 0; i < n; i++) {
        for (uint64_t m = adj[i] >> (i + 1) << (i + 1); m; m &= m - 1) {
            out.emplace_back(i, static_cast<size_t>(std::countr_zero(m)));
        }
    }
    return out;
}

Graph cluster1d(size_t n) {
    Graph g(n);
    for (size_t i = 0; i + 1 < n; i++) {
        g.add_edge(i, i + 1);
    }
    return g;
}

Graph cluster2d(size_t rows, size_t cols) {
    if (rows < 1 || cols < 1) {
        throw std::invalid_argument("cluster2d: sizes must be >= 1");
    }
    Graph g(rows * cols);
    auto id = [cols](size_t r, size_t c) { return r * cols + c; };
    for (size_t r = 0; r < rows; r++) {
        for (size_t c = 0; c < cols; c++) {
            if (c + 1 < cols) {
                g.add_edge(id(r, c), id(r, c + 1));
            }
            if (r + 1 < rows) {
                g.add_edge(id(r, c), id(r + 1, c));
            }
        }
    }
    return g;
}

Graph cluster3d(size_t rows, size_t cols, size_t layers) {
    if (rows < 1 || cols < 1 || layers < 1) {
        throw std::invalid_argument("cluster3d: sizes must be >= 1");
    }
    Graph g(rows * cols * layers);
    auto id = [rows, cols](size_t l, size_t r, size_t c) {
        return l * rows * cols + r * cols + c;
    };
    for (size_t l = 0; l < layers; l++) {
        for (size_t r = 0; r < rows; r++) {
            for (size_t c = 0; c < cols; c++) {
                if (c + 1 < cols) {
                    g.add_edge(id(l, r, c), id(l, r, c + 1));
                }
                if (r + 1 < rows) {
                    g.add_edge(id(l, r, c), id(l, r + 1, c));
                }
                if (l + 1 < layers) {
                    g.add_edge(id(l, r, c), id(l + 1, r, c));
                }
            }
        }
    }
    return g;
}

Graph ghz_star(size_t n) {
    Graph g(n);
    for (size_t i = 1; i < n; i++) {
        g.add_edge(0, i);
    }
    return g;
}

Graph ghz_complete(size_t n) {
    Graph g(n);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++) {
            g.add_edge(i, j);
        }
    }
    return g;
}

Graph ring(size_t n) {
    if (n < 3) {
        throw std::invalid_argument("ring: requires n >= 3");
    }
    Graph g(n);
    for (size_t i = 0; i < n; i++) {
        g.add_edge(i, (i + 1) % n);
    }
    return g;
}

Graph from_edge_list(size_t n, const std::vector<std::pair<size_t, size_t>> &edges) {
    Graph g(n);
    for (auto [i, j] : edges) {
        g.add_edge(i, j);
    }
    return g;
}

Graph local_complement(const Graph &g, size_t v) {
    if (v >= g.n) {
        throw std::invalid_argument("local_complement: vertex out of range");
    }
    Graph out = g;
    uint64_t nb = g.adj[v];
    for (uint64_t m = nb; m; m &= m - 1) {
        size_t i = static_cast<size_t>(std::countr_zero(m));
        // Complement row i against the other neighbours of v.
        uint64_t others = nb & ~(uint64_t{1} << i);
        out.adj[i] ^= others;
    }
    return out;
}

Graph toggle_edge(const Graph &g, size_t i, size_t j) {
    if (i == j) {
        throw std::invalid_argument("toggle_edge: i == j");
    }
    if (i >= g.n || j >= g.n) {
        throw std::invalid_argument("toggle_edge: vertex out of range");
    }
    Graph out = g;
    out.adj[i] ^= uint64_t{1} << j;
    out.adj[j] ^= uint64_t{1} << i;
    return out;
}

Graph disjoint_union(const Graph &g1, const Graph &g2) {
    if (g1.n + g2.n > 64) {
        throw std::invalid_argument("disjoint_union: combined size exceeds 64");
    }
    Graph out(g1.n + g2.n);
    for (size_t i = 0; i < g1.n; i++) {
        out.adj[i] = g1.adj[i];
    }
    for (size_t i = 0; i < g2.n; i++) {
        out.adj[g1.n + i] = g2.adj[i] << g1.n;
    }
    return out;
}

std::optional<Coloring> two_color(const Graph &g) {
    std::vector<int> color(g.n, -1);
    Coloring result;
    for (size_t start = 0; start < g.n; start++) {
        if (color[start] != -1) {
            continue;
        }
        uint64_t side[2] = {0, 0};
        color[start] = 0;
        side[0] |= uint64_t{1} << start;
        std::deque<size_t> queue{start};
        while (!queue.empty()) {
            size_t u = queue.front();
            queue.pop_front();
            for (uint64_t m = g.adj[u]; m; m &= m - 1) {
                size_t w = static_cast<size_t>(std::countr_zero(m));
                if (color[w] == -1) {
                    color[w] = 1 - color[u];
                    side[color[w]] |= uint64_t{1} << w;
                    queue.push_back(w);
                } else if (color[w] == color[u]) {
                    return std::nullopt;  // odd cycle
                }
            }
        }
        int big = std::popcount(side[0]) >= std::popcount(side[1]) ? 0 : 1;
        result.amber.mask |= side[big];
        result.blue.mask |= side[1 - big];
    }
    return result;
}

bool is_independent(const Graph &g, const VertexSet &s) {
    if (s.mask & ~VertexSet::all(g.n).mask) {
        throw std::invalid_argument("is_independent: member out of range");
    }
    for (uint64_t m = s.mask; m; m &= m - 1) {
        size_t v = static_cast<size_t>(std::countr_zero(m));
        if (g.adj[v] & s.mask) {
            return false;
        }
    }
    return true;
}

namespace {

// Branch-and-bound maximum-independent-set core. `nodes` is shared
// across calls so the lexicographic refinement below draws on the same
// budget as the initial size computation.
struct MisSearch {
    const Graph &g;
    uint64_t budget;
    uint64_t nodes = 0;
    bool exhausted = false;

    size_t best_size = 0;

    // Upper bound: greedy clique cover of the candidate set; each clique
    // contributes at most one vertex to an independent set.
    size_t clique_cover_bound(uint64_t cand) const {
        size_t cliques = 0;
        std::array<uint64_t, 64> clique_masks;
        for (uint64_t m = cand; m; m &= m - 1) {
            size_t v = static_cast<size_t>(std::countr_zero(m));
            bool placed = false;
            for (size_t c = 0; c < cliques; c++) {
                // v joins a clique iff adjacent to all its members.
                if ((clique_masks[c] & ~g.adj[v]) == 0) {
                    clique_masks[c] |= uint64_t{1} << v;
                    placed = true;
                    break;
                }
            }
            if (!placed) {
                clique_masks[cliques++] = uint64_t{1} << v;
            }
        }
        return cliques;
    }

    void expand(size_t chosen, uint64_t cand) {
        if (exhausted) {
            return;
        }
        if (++nodes > budget) {
            exhausted = true;
            return;
        }
        if (chosen > best_size) {
            best_size = chosen;
        }
        if (cand == 0) {
            return;
        }
        if (chosen + clique_cover_bound(cand) <= best_size) {
            return;
        }
        // Pivot on the highest-degree candidate (degree within cand).
        size_t pivot = 0;
        int pivot_deg = -1;
        for (uint64_t m = cand; m; m &= m - 1) {
            size_t v = static_cast<size_t>(std::countr_zero(m));
            int d = std::popcount(g.adj[v] & cand);
            if (d > pivot_deg) {
                pivot_deg = d;
                pivot = v;
            }
        }
        uint64_t bit = uint64_t{1} << pivot;
        expand(chosen + 1, cand & ~(bit | g.adj[pivot]));
        expand(chosen, cand & ~bit);
    }

    // Maximum independent set size within cand, or a lower bound if the
    // budget ran out (exhausted flag set).
    size_t max_size(uint64_t cand) {
        best_size = 0;
        expand(0, cand);
        return best_size;
    }
};

uint64_t greedy_independent(const Graph &g, uint64_t cand) {
    uint64_t chosen = 0;
    for (uint64_t m = cand; m; m &= m - 1) {
        size_t v = static_cast<size_t>(std::countr_zero(m));
        if ((g.adj[v] & chosen) == 0) {
            chosen |= uint64_t{1} << v;
        }
    }
    return chosen;
}

}  // namespace

MisResult max_independent_set(const Graph &g, uint64_t budget_nodes) {
    MisSearch search{g, budget_nodes};
    uint64_t full = VertexSet::all(g.n).mask;
    size_t target = search.max_size(full);

    MisResult result;
    if (search.exhausted) {
        // Budget gone before the size was certified; hand back greedy.
        result.set.mask = greedy_independent(g, full);
        result.size = result.set.size();
        result.certified = false;
        return result;
    }

    // Lexicographic refinement: take the lowest vertex whenever doing so
    // still admits a maximum independent set.
    uint64_t chosen = 0;
    uint64_t cand = full;
    size_t have = 0;
    for (size_t v = 0; v < g.n && !search.exhausted; v++) {
        uint64_t bit = uint64_t{1} << v;
        if (!(cand & bit)) {
            continue;
        }
        uint64_t rest = cand & ~(bit | g.adj[v]);
        size_t tail = search.max_size(rest);
        if (!search.exhausted && have + 1 + tail == target) {
            chosen |= bit;
            cand = rest;
            have++;
        } else {
            cand &= ~bit;
        }
    }
    if (search.exhausted) {
        // Extend greedily with what is left.
        for (uint64_t m = cand; m; m &= m - 1) {
            size_t v = static_cast<size_t>(std::countr_zero(m));
            if ((g.adj[v] & chosen) == 0) {
                chosen |= uint64_t{1} << v;
            }
        }
        result.set.mask = chosen;
        result.size = result.set.size();
        result.certified = false;
        return result;
    }
    result.set.mask = chosen;
    result.size = have;
    result.certified = true;
    return result;
}

std::string to_string(const Graph &g) {
    std::ostringstream ss;
    ss << "Graph(n=" << g.n << ", edges={";
    bool first = true;
    for (auto [i, j] : g.edges()) {
        if (!first) {
            ss << ", ";
        }
        first = false;
        ss << i << "-" << j;
    }
    ss << "})";
    return ss.str();
}

Graph steane7() {
    // Bipartite graph of the [[7,1,3]] CSS codeword state: three row
    // vertices {0,1,2} against four column vertices {3..6}, biadjacency
    // taken from the standard-form generator of the dual Hamming code.
    Graph g = from_edge_list(7, {{0, 3}, {0, 4}, {0, 6}, {1, 3}, {1, 5}, {1, 6}, {2, 4}, {2, 5}, {2, 6}});
    // Structural validation against the known invariants of this state:
    // two-colourable, maximum independent set of 4, maximum cut-rank 3.
    auto coloring = two_color(g);
    if (!coloring) {
        throw std::logic_error("steane7: graph is not two-colourable");
    }
    MisResult mis = max_independent_set(g);
    if (!mis.certified || mis.size != 4) {
        throw std::logic_error("steane7: maximum independent set is not 4");
    }
    size_t best = 0;
    for (uint64_t side = 1; side < (uint64_t{1} << 6); side++) {
        VertexSet a{side};
        best = std::max(best, cut_rank(g, Bipartition::of(g, a)));
    }
    if (best != 3) {
        throw std::logic_error("steane7: maximum cut-rank is not 3");
    }
    return g;
}

}  // namespace graphstate
