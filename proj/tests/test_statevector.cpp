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

#include "graphstate/statevector.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

using namespace graphstate;

namespace {

constexpr double kEps = 1e-12;

Graph random_graph(size_t n, std::mt19937_64 &rng) {
    Graph g(n);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = i + 1; j < n; j++) {
            if (rng() & 1) {
                g.add_edge(i, j);
            }
        }
    }
    return g;
}

}  // namespace

TEST_CASE("statevector basics") {
    // |+> for the single-vertex empty graph.
    auto plus = statevector(Graph(1));
    CHECK(plus[0].real() == doctest::Approx(1 / std::sqrt(2)).epsilon(kEps));
    CHECK(plus[1].real() == doctest::Approx(1 / std::sqrt(2)).epsilon(kEps));

    // |-> for k = 1.
    auto minus = statevector(Graph(1), GraphStateIndex{1, 1});
    CHECK(minus[1].real() == doctest::Approx(-1 / std::sqrt(2)).epsilon(kEps));

    // CZ|++> = (1,1,1,-1)/2.
    auto bell = statevector(from_edge_list(2, {{0, 1}}));
    CHECK(bell[0].real() == doctest::Approx(0.5).epsilon(kEps));
    CHECK(bell[1].real() == doctest::Approx(0.5).epsilon(kEps));
    CHECK(bell[2].real() == doctest::Approx(0.5).epsilon(kEps));
    CHECK(bell[3].real() == doctest::Approx(-0.5).epsilon(kEps));

    CHECK_THROWS_AS(statevector(Graph(13)), std::invalid_argument);
}

TEST_CASE("statevector amplitudes are flat and normalized") {
    std::mt19937_64 rng(2);
    for (int rep = 0; rep < 20; rep++) {
        size_t n = 1 + rng() % 8;
        Graph g = random_graph(n, rng);
        GraphStateIndex k{n, rng() & VertexSet::all(n).mask};
        auto psi = statevector(g, k);
        double mag = std::pow(2.0, -static_cast<double>(n) / 2);
        double norm = 0;
        for (auto &a : psi) {
            CHECK(std::abs(std::abs(a.real()) - mag) < kEps);
            CHECK(a.imag() == 0.0);
            norm += std::norm(a);
        }
        CHECK(norm == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("eigenequations: K_i psi = (-1)^{k_i} psi") {
    std::mt19937_64 rng(3);
    for (int rep = 0; rep < 20; rep++) {
        size_t n = 1 + rng() % 7;
        Graph g = random_graph(n, rng);
        GraphStateIndex k{n, rng() & VertexSet::all(n).mask};
        auto psi = statevector(g, k);
        auto gens = generators_of(g);
        for (size_t i = 0; i < n; i++) {
            auto mapped = apply_pauli(gens.generators[i], psi);
            double sign = k.bit(i) ? -1.0 : 1.0;
            for (size_t b = 0; b < psi.size(); b++) {
                CHECK(std::abs(mapped[b] - sign * psi[b]) < 1e-9);
            }
        }
    }
}

TEST_CASE("overlap") {
    Graph g = ring(4);
    CHECK(overlap(g, {4, 3}, g, {4, 3}).real() == doctest::Approx(1.0).epsilon(kEps));
    CHECK(std::abs(overlap(g, {4, 3}, g, {4, 5})) < kEps);  // distinct basis states

    // Single edge vs empty 2-vertex graph at k = 00.
    Graph edge = from_edge_list(2, {{0, 1}});
    CHECK(overlap(edge, {}, Graph(2), {}).real() == doctest::Approx(0.5).epsilon(kEps));

    CHECK_THROWS_AS(overlap(Graph(2), {}, Graph(3), {}), std::invalid_argument);
}

TEST_CASE("Schmidt spectrum of a graph state is flat") {
    std::mt19937_64 rng(4);
    for (int rep = 0; rep < 20; rep++) {
        size_t n = 2 + rng() % 6;
        Graph g = random_graph(n, rng);
        auto psi = statevector(g);
        uint64_t a = 1 + rng() % ((uint64_t{1} << n) - 2);
        Bipartition p = Bipartition::of(g, VertexSet{a});
        auto sv = schmidt_coefficients(psi, n, p);
        double top = sv.front();
        for (double s : sv) {
            bool flat = std::abs(s - top) < 1e-9 || s < 1e-9;
            CHECK(flat);
        }
    }
}
