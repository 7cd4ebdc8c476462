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

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace graphstate;

namespace {

Graph random_graph(size_t n, std::mt19937_64 &rng) {
    Graph g(n);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++) {
            if (rng() % 100 < 35) {
                g.add_edge(i, j);
            }
        }
    }
    return g;
}

}  // namespace

TEST_CASE("coloring_lower_bound on named families") {
    CHECK(coloring_lower_bound(cluster1d(7)).size == 4);
    CHECK(coloring_lower_bound(ghz_star(8)).size == 7);
    CHECK(coloring_lower_bound(ring(5)).size == 2);
}

TEST_CASE("matching_upper_bound on named families") {
    CHECK(matching_upper_bound(cluster2d(4, 4)).e_low == 8);
    CHECK(matching_upper_bound(cluster1d(7)).e_low == 3);
    CHECK(matching_upper_bound(steane7()).e_low == 3);
    CHECK_THROWS_AS(matching_upper_bound(Graph(1)), std::invalid_argument);
}

TEST_CASE("entanglement_report") {
    auto c6 = entanglement_report(cluster1d(6));
    CHECK(c6.exact);
    CHECK(c6.E_low == 3);
    CHECK(c6.certified);

    auto r5 = entanglement_report(ring(5));
    CHECK_FALSE(r5.exact);
    CHECK(r5.E_low == 2);
    CHECK(r5.E_high == 3);

    auto single = entanglement_report(Graph(1));
    CHECK(single.exact);
    CHECK(single.E_low == 0);
    CHECK(single.E_high == 0);
    CHECK_FALSE(single.witness_bipartition.has_value());
}

TEST_CASE("sandwich invariant E_low <= E_high on random graphs") {
    std::mt19937_64 rng(6);
    for (int rep = 0; rep < 60; rep++) {
        Graph g = random_graph(2 + rng() % 11, rng);
        auto rep_out = entanglement_report(g);
        CHECK(rep_out.E_low <= rep_out.E_high);
        CHECK((uint64_t{1} << rep_out.lower_log_N) <= (uint64_t{1} << rep_out.upper_log_N));
        CHECK(is_independent(g, rep_out.witness_set));
    }
}

TEST_CASE("heuristic matching never beats exhaustive") {
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 20; rep++) {
        Graph g = random_graph(3 + rng() % 10, rng);
        BoundsOptions ex;
        ex.strategy = MatchingStrategy::Exhaustive;
        BoundsOptions heur;
        heur.strategy = MatchingStrategy::Heuristic;
        heur.seed = rep;
        CHECK(matching_upper_bound(g, heur).e_low <= matching_upper_bound(g, ex).e_low);
    }
}

TEST_CASE("heuristic matching finds the checkerboard value on the 5x5 cluster") {
    BoundsOptions heur;
    heur.strategy = MatchingStrategy::Heuristic;
    CHECK(matching_upper_bound(cluster2d(5, 5), heur).e_low == 12);
}

TEST_CASE("additivity of bounds under disjoint union") {
    std::vector<Graph> pool{cluster1d(4), ghz_star(4), cluster2d(2, 3), ring(4)};
    for (const auto &g1 : pool) {
        for (const auto &g2 : pool) {
            auto r1 = entanglement_report(g1);
            auto r2 = entanglement_report(g2);
            auto ru = entanglement_report(disjoint_union(g1, g2));
            REQUIRE(r1.exact);
            REQUIRE(r2.exact);
            CHECK(ru.exact);
            CHECK(ru.E_low == r1.E_low + r2.E_low);
            CHECK(ru.lower_log_N == r1.lower_log_N + r2.lower_log_N);
        }
    }
}

TEST_CASE("lc_orbit_search improves the complete-graph GHZ form") {
    auto orbit = lc_orbit_search(ghz_complete(4), 1, 16);
    CHECK(orbit.report.lower_log_N == 3);
    CHECK(orbit.report.exact);
    CHECK(orbit.report.E_low == 1);
    // Every depth-1 image of K4 is a star; the tie-break picks one of
    // the four centres.
    CHECK(orbit.best_graph.edge_count() == 3);
    bool is_star = false;
    for (size_t v = 0; v < 4; v++) {
        is_star = is_star || orbit.best_graph.degree(v) == 3;
    }
    CHECK(is_star);
}

TEST_CASE("lc_orbit_search cannot regress and respects depth 0") {
    auto depth0 = lc_orbit_search(ring(5), 0, 8);
    auto base = entanglement_report(ring(5));
    CHECK(depth0.report.lower_log_N == base.lower_log_N);
    CHECK(depth0.report.E_low == base.E_low);

    // The star form is already optimal.
    auto star = lc_orbit_search(ghz_star(5), 2, 8);
    CHECK(star.report.lower_log_N == 4);

    // Odd-ring bounds stay an interval under LC.
    auto r5 = lc_orbit_search(ring(5), 2, 16);
    CHECK(r5.report.lower_log_N == 2);
    CHECK(r5.report.E_low <= 3);

    std::mt19937_64 rng(12);
    for (int rep = 0; rep < 10; rep++) {
        Graph g = random_graph(3 + rng() % 6, rng);
        auto base_rep = entanglement_report(g);
        auto orbit = lc_orbit_search(g, 2, 8);
        CHECK(orbit.report.lower_log_N >= base_rep.lower_log_N);
    }
}
