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

#include "graphstate/capacity.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace graphstate;

TEST_CASE("povm_constraint_check") {
    // 8 states at p=1, E_g=1 in a 4-qubit space: 8*2 = 16 <= 16.
    std::vector<double> p8(8, 1.0), e8(8, 1.0);
    CHECK(povm_constraint_check(p8, e8, 4));

    std::vector<double> p9(9, 1.0), e9(9, 1.0);
    CHECK_FALSE(povm_constraint_check(p9, e9, 4));

    CHECK(povm_constraint_check({}, {}, 4));
    CHECK_THROWS_AS(povm_constraint_check({1.0}, {}, 4), std::invalid_argument);
    CHECK_THROWS_AS(povm_constraint_check({1.5}, {0.0}, 4), std::invalid_argument);
}

TEST_CASE("capacity_bound") {
    Graph g = cluster1d(6);
    auto rep = entanglement_report(g);
    auto ens = coloring_ensemble(g, rep);
    CHECK(capacity_bound(ens) == doctest::Approx(3.0).epsilon(1e-12));  // n - floor(n/2)

    Graph ghz = ghz_star(5);
    auto ghz_ens = coloring_ensemble(ghz, entanglement_report(ghz));
    CHECK(capacity_bound(ghz_ens) == doctest::Approx(4.0).epsilon(1e-12));

    // Product states: E_g = 0, C <= n.
    Ensemble prod;
    prod.n = 3;
    prod.entries = {{"p0", 0.0, true}, {"p1", 0.0, true}};
    CHECK(capacity_bound(prod) == doctest::Approx(3.0).epsilon(1e-12));

    Ensemble non_additive;
    non_additive.n = 2;
    non_additive.entries = {{"x", 1.0, false}};
    CHECK_THROWS_AS(capacity_bound(non_additive), std::invalid_argument);
}

TEST_CASE("finite_blocklength_bound") {
    CHECK(finite_blocklength_bound(1, 0.0, 4, 2.0) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(finite_blocklength_bound(7, 0.0, 4, 2.0) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(finite_blocklength_bound(1, 0.5, 2, 1.0) == doctest::Approx(2.0).epsilon(1e-12));

    // Decreasing in L toward the asymptotic bound.
    double prev = finite_blocklength_bound(1, 0.1, 3, 1.0);
    for (size_t L : {10, 100, 1000}) {
        double cur = finite_blocklength_bound(L, 0.1, 3, 1.0);
        CHECK(cur < prev);
        CHECK(cur > 2.0);
        prev = cur;
    }
    CHECK_THROWS_AS(finite_blocklength_bound(1, 1.0, 2, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(finite_blocklength_bound(0, 0.0, 2, 1.0), std::invalid_argument);
}

TEST_CASE("achievable_rate") {
    Graph s = steane7();
    auto rep = entanglement_report(s);
    CHECK(achievable_rate(s, rep) == 4);

    Graph c55 = cluster2d(5, 5);
    auto rep55 = entanglement_report(c55);
    CHECK(achievable_rate(c55, rep55) == 13);

    // Odd ring: achievable rate strictly below the capacity bound.
    Graph r5 = ring(5);
    auto rep5 = entanglement_report(r5);
    CHECK(achievable_rate(r5, rep5) == 2);
    CHECK_FALSE(rep5.exact);
}

TEST_CASE("achievable rate meets the capacity bound exactly for exact graphs") {
    for (const Graph &g : {cluster1d(6), ghz_star(5), ring(6), steane7()}) {
        auto rep = entanglement_report(g);
        REQUIRE(rep.exact);
        auto ens = coloring_ensemble(g, rep);
        CHECK(static_cast<double>(achievable_rate(g, rep)) ==
              doctest::Approx(capacity_bound(ens)).epsilon(1e-12));
        // POVM constraint saturates: sum p 2^{E} = 2^n exactly.
        double sum = 0;
        for (const auto &e : ens.entries) {
            sum += std::exp2(e.e_g);
        }
        CHECK(sum == std::exp2(static_cast<double>(g.n)));
    }
}
