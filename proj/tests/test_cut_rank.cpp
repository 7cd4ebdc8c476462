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

#include <doctest.h>

#include <random>

#include "graphstate/statevector.hpp"
#include <stdexcept>

using namespace graphstate;

namespace {

Graph random_graph(size_t n, double p, std::mt19937_64 &rng) {
    Graph g(n);
    std::bernoulli_distribution edge(p);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++) {
            if (edge(rng)) {
                g.add_edge(i, j);
            }
        }
    }
    return g;
}

}  // namespace

TEST_CASE("gf2_rank basics") {
    CHECK(gf2_rank({}) == 0);
    CHECK(gf2_rank({0, 0}) == 0);
    CHECK(gf2_rank({0b01, 0b10}) == 2);
    CHECK(gf2_rank({0b01, 0b10, 0b11}) == 2);
    CHECK(gf2_rank({0b111, 0b110, 0b001}) == 2);
}

TEST_CASE("cut_rank examples") {
    Graph edge = from_edge_list(2, {{0, 1}});
    CHECK(cut_rank(edge, Bipartition::of(edge, VertexSet::of({0}))) == 1);

    Graph empty4(4);
    CHECK(cut_rank(empty4, Bipartition::of(empty4, VertexSet::of({0, 1}))) == 0);

    // Path 0-1-2-3 across the alternating cut: Schmidt rank exponent 2.
    Graph p4 = cluster1d(4);
    Bipartition alt = Bipartition::of(p4, VertexSet::of({0, 2}));
    CHECK(cut_rank(p4, alt) == 2);
    CHECK(schmidt_rank_exponent(statevector(p4), 4, alt) == 2);
}

TEST_CASE("cut_rank rejects invalid partitions") {
    Graph g = ring(4);
    CHECK_THROWS_AS(Bipartition::of(g, VertexSet{}), std::invalid_argument);
    CHECK_THROWS_AS(Bipartition::of(g, VertexSet::all(4)), std::invalid_argument);
    Bipartition bad = Bipartition::of(g, VertexSet::of({0}));
    bad.side_b = VertexSet::of({1});
    CHECK_THROWS_AS(cut_rank(g, bad), std::invalid_argument);
}

TEST_CASE("cut_rank equals Schmidt rank exponent of the dense state") {
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 30; rep++) {
        size_t n = 2 + rng() % 6;
        Graph g = random_graph(n, 0.4, rng);
        Amplitudes psi = statevector(g);
        for (uint64_t a = 1; a < (uint64_t{1} << (n - 1)); a++) {
            Bipartition p = Bipartition::of(g, VertexSet{a});
            CHECK(cut_rank(g, p) == schmidt_rank_exponent(psi, n, p));
        }
    }
}

TEST_CASE("cut_rank is invariant under local complementation") {
    std::mt19937_64 rng(8);
    for (int rep = 0; rep < 40; rep++) {
        size_t n = 2 + rng() % 9;
        Graph g = random_graph(n, 0.4, rng);
        size_t v = rng() % n;
        Graph h = local_complement(g, v);
        for (int trial = 0; trial < 10; trial++) {
            uint64_t a = 1 + rng() % ((uint64_t{1} << n) - 2);
            Bipartition p = Bipartition::of(g, VertexSet{a});
            CHECK(cut_rank(g, p) == cut_rank(h, p));
        }
    }
}

TEST_CASE("cut_rank is invariant under same-side edge toggles") {
    std::mt19937_64 rng(9);
    for (int rep = 0; rep < 40; rep++) {
        size_t n = 3 + rng() % 8;
        Graph g = random_graph(n, 0.4, rng);
        uint64_t a = 1 + rng() % ((uint64_t{1} << n) - 2);
        Bipartition p = Bipartition::of(g, VertexSet{a});
        // Pick two distinct vertices on the same side.
        auto side = (rng() & 1) ? p.side_a.members() : p.side_b.members();
        if (side.size() < 2) {
            continue;
        }
        size_t i = side[rng() % side.size()];
        size_t j = side[rng() % side.size()];
        if (i == j) {
            continue;
        }
        CHECK(cut_rank(toggle_edge(g, i, j), p) == cut_rank(g, p));
    }
}
