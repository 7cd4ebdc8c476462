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

#include "graphstate/json_io.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace graphstate;
using nlohmann::json;

TEST_CASE("graph json round trip") {
    std::mt19937_64 rng(13);
    for (int rep = 0; rep < 30; rep++) {
        size_t n = 1 + rng() % 12;
        Graph g(n);
        for (size_t i = 0; i < n; i++) {
            for (size_t j = i + 1; j < n; j++) {
                if (rng() & 1) {
                    g.add_edge(i, j);
                }
            }
        }
        CHECK(graph_from_json(graph_to_json(g)) == g);
    }
}

TEST_CASE("graph json rejects malformed input") {
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"edges": []})")), std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"n": 3, "edges": [[1, 1]]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"n": 3, "edges": [[2, 1]]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"n": 3, "edges": [[0, 1], [0, 1]]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"n": 2, "edges": [[0, 5]]})")),
                    std::invalid_argument);
}

TEST_CASE("bounds report json carries the contract fields") {
    auto rep = entanglement_report(ring(5));
    json j = bounds_report_to_json(rep);
    CHECK(j["n"] == 5);
    CHECK(j["lower_log_N"] == 2);
    CHECK(j["E_low"] == 2);
    CHECK(j["E_high"] == 3);
    CHECK(j["exact"] == false);
    CHECK(j["certified"] == true);
    CHECK(j["witness_bipartition"].is_object());

    auto single = entanglement_report(Graph(1));
    CHECK(bounds_report_to_json(single)["witness_bipartition"].is_null());
}

TEST_CASE("measure values serialize absent fields as nulls") {
    MeasureValues v;
    v.e_g = 2.0;
    json j = measure_values_to_json(v);
    CHECK(j["e_g"] == 2.0);
    CHECK(j["e_r"].is_null());
    CHECK(j["log_one_plus_r"].is_null());
}

TEST_CASE("ensemble json") {
    json j = json::parse(R"({"n": 2, "entries": [
        {"id": "a", "e_g": 1.0, "additive": true},
        {"id": "b", "e_g": 0.5}
    ]})");
    Ensemble e = ensemble_from_json(j);
    CHECK(e.n == 2);
    CHECK(e.entries[0].additive);
    CHECK_FALSE(e.entries[1].additive);  // defaults to non-additive
    CHECK(ensemble_from_json(ensemble_to_json(e)).entries.size() == 2);
}

TEST_CASE("weights json") {
    json j = json::parse(R"({"00": 0.75, "10": 0.25})");
    auto w = weights_from_json(j, 2);
    CHECK(w.at(0b00) == 0.75);
    CHECK(w.at(0b01) == 0.25);  // string position 0 is qubit 0
    CHECK_THROWS_AS(weights_from_json(json::parse(R"({"0": 1.0})"), 2), std::invalid_argument);
    CHECK_THROWS_AS(weights_from_json(json::parse(R"({"02": 1.0})"), 2), std::invalid_argument);
}
