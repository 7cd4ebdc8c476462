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

#include "graphstate/bounds.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <stdexcept>
#include <string>

namespace graphstate {

MisResult coloring_lower_bound(const Graph &g, uint64_t budget_nodes) {
    return max_independent_set(g, budget_nodes);
}

namespace {

constexpr size_t kExhaustiveCutoff = 24;

MatchingResult matching_exhaustive(const Graph &g, uint64_t budget) {
    // Vertex n-1 stays on side B so each unordered bipartition appears
    // exactly once; ascending masks give the deterministic tie-break.
    MatchingResult best;
    best.e_low = 0;
    best.certified = true;
    uint64_t limit = uint64_t{1} << (g.n - 1);
    bool have = false;
    for (uint64_t a = 1; a < limit; a++) {
        if (a > budget) {
            best.certified = false;
            break;
        }
        Bipartition p = Bipartition::of(g, VertexSet{a});
        size_t r = cut_rank(g, p);
        if (!have || r > best.e_low) {
            best.partition = p;
            best.e_low = r;
            have = true;
        }
    }
    if (!have) {
        throw std::invalid_argument("matching_upper_bound: requires n >= 2");
    }
    return best;
}

MatchingResult matching_heuristic(const Graph &g, const BoundsOptions &opts) {
    uint64_t full = VertexSet::all(g.n).mask;
    uint64_t best_mask = 1;
    size_t best_rank = 0;
    bool have = false;
    for (size_t restart = 0; restart < opts.heuristic_restarts; restart++) {
        std::mt19937_64 rng(opts.seed * 0x9E3779B97F4A7C15ull + restart + 1);
        uint64_t a = rng() & full & ~(uint64_t{1} << (g.n - 1));
        if (a == 0) {
            a = 1;
        }
        size_t rank = cut_rank(g, Bipartition::of(g, VertexSet{a}));
        bool improved = true;
        size_t sweeps = 0;
        while (improved && sweeps < 200) {
            improved = false;
            sweeps++;
            for (size_t v = 0; v + 1 < g.n; v++) {
                uint64_t moved = a ^ (uint64_t{1} << v);
                if (moved == 0) {
                    continue;
                }
                size_t r = cut_rank(g, Bipartition::of(g, VertexSet{moved}));
                // Accept on non-decrease, but only call it progress on a
                // strict gain so plateaus terminate.
                if (r > rank) {
                    a = moved;
                    rank = r;
                    improved = true;
                } else if (r == rank && (rng() & 1)) {
                    a = moved;
                }
            }
        }
        if (!have || rank > best_rank || (rank == best_rank && a < best_mask)) {
            best_rank = rank;
            best_mask = a;
            have = true;
        }
    }
    MatchingResult out;
    out.partition = Bipartition::of(g, VertexSet{best_mask});
    out.e_low = best_rank;
    out.certified = false;  // heuristic results are never certified
    return out;
}

}  // namespace

MatchingResult matching_upper_bound(const Graph &g, const BoundsOptions &opts) {
    if (g.n < 2) {
        throw std::invalid_argument("matching_upper_bound: requires n >= 2");
    }
    MatchingStrategy s = opts.strategy;
    if (s == MatchingStrategy::Auto) {
        s = g.n <= kExhaustiveCutoff ? MatchingStrategy::Exhaustive : MatchingStrategy::Heuristic;
    }
    return s == MatchingStrategy::Exhaustive ? matching_exhaustive(g, opts.matching_budget)
                                             : matching_heuristic(g, opts);
}

BoundsReport entanglement_report(const Graph &g, const BoundsOptions &opts) {
    BoundsReport rep;
    rep.n = g.n;
    MisResult mis = coloring_lower_bound(g, opts.mis_budget_nodes);
    rep.lower_log_N = mis.size;
    rep.witness_set = mis.set;
    rep.E_high = g.n - mis.size;
    rep.certified = mis.certified;
    if (g.n >= 2) {
        MatchingResult m = matching_upper_bound(g, opts);
        rep.E_low = m.e_low;
        rep.witness_bipartition = m.partition;
        rep.certified = rep.certified && m.certified;
    } else {
        rep.E_low = 0;
    }
    rep.upper_log_N = g.n - rep.E_low;
    rep.exact = rep.E_low == rep.E_high;
    // A closed sandwich is rigorous even when the matching search was
    // heuristic: both endpoints are one-sided bounds in their own right.
    rep.certified = rep.certified || (mis.certified && rep.exact);
    if (rep.E_low > rep.E_high) {
        // Violates n - |A| >= E >= E_cut; one of the searches is broken.
        throw std::logic_error("entanglement_report: lower bound exceeded upper bound");
    }
    return rep;
}

namespace {

std::string canonical_key(const Graph &g) {
    std::string key;
    key.reserve(g.n * 8);
    for (uint64_t row : g.adj) {
        for (int b = 0; b < 8; b++) {
            key.push_back(static_cast<char>((row >> (8 * b)) & 0xFF));
        }
    }
    return key;
}

// Higher is better: |A| first, then E_low, then smallest canonical form.
bool better(const BoundsReport &a, const std::string &ka, const BoundsReport &b, const std::string &kb) {
    if (a.lower_log_N != b.lower_log_N) {
        return a.lower_log_N > b.lower_log_N;
    }
    if (a.E_low != b.E_low) {
        return a.E_low > b.E_low;
    }
    return ka < kb;
}

}  // namespace

OrbitResult lc_orbit_search(const Graph &g, size_t depth, size_t beam, const BoundsOptions &opts) {
    OrbitResult out;
    out.best_graph = g;
    out.report = entanglement_report(g, opts);
    out.visited = 1;

    std::map<std::string, bool> seen;
    std::string best_key = canonical_key(g);
    seen[best_key] = true;

    std::vector<std::pair<Graph, BoundsReport>> frontier{{g, out.report}};
    for (size_t d = 0; d < depth && !frontier.empty(); d++) {
        std::vector<std::pair<Graph, BoundsReport>> next;
        for (const auto &[cur, _] : frontier) {
            for (size_t v = 0; v < cur.n; v++) {
                Graph img = local_complement(cur, v);
                std::string key = canonical_key(img);
                if (seen.count(key)) {
                    continue;
                }
                seen[key] = true;
                BoundsReport rep = entanglement_report(img, opts);
                out.visited++;
                if (better(rep, key, out.report, best_key)) {
                    out.best_graph = img;
                    out.report = rep;
                    best_key = key;
                }
                next.emplace_back(std::move(img), rep);
            }
        }
        // Beam: keep only the most promising images for further expansion.
        std::sort(next.begin(), next.end(), [](const auto &a, const auto &b) {
            return better(a.second, canonical_key(a.first), b.second, canonical_key(b.first));
        });
        if (beam && next.size() > beam) {
            next.resize(beam);
        }
        frontier = std::move(next);
    }
    return out;
}

}  // namespace graphstate
