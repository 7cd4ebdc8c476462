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

#include <set>
#include <stdexcept>

namespace graphstate {

using nlohmann::json;

json graph_to_json(const Graph &g) {
    json edges = json::array();
    for (auto [i, j] : g.edges()) {
        edges.push_back({i, j});
    }
    return json{{"n", g.n}, {"edges", edges}};
}

Graph graph_from_json(const json &j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
        throw std::invalid_argument("graph JSON: expected {\"n\": ..., \"edges\": [...]}");
    }
    size_t n = j.at("n").get<size_t>();
    Graph g(n);
    std::set<std::pair<size_t, size_t>> seen;
    for (const auto &e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) {
            throw std::invalid_argument("graph JSON: edge must be [i, j]");
        }
        size_t i = e[0].get<size_t>();
        size_t k = e[1].get<size_t>();
        if (i >= k) {
            throw std::invalid_argument("graph JSON: edges must have i < j");
        }
        if (!seen.insert({i, k}).second) {
            throw std::invalid_argument("graph JSON: duplicate edge");
        }
        g.add_edge(i, k);
    }
    return g;
}

json vertex_set_to_json(const VertexSet &s) {
    json out = json::array();
    for (size_t v : s.members()) {
        out.push_back(v);
    }
    return out;
}

json bounds_report_to_json(const BoundsReport &r) {
    json j{
        {"n", r.n},
        {"lower_log_N", r.lower_log_N},
        {"witness_set", vertex_set_to_json(r.witness_set)},
        {"upper_log_N", r.upper_log_N},
        {"E_low", r.E_low},
        {"E_high", r.E_high},
        {"exact", r.exact},
        {"certified", r.certified},
    };
    if (r.witness_bipartition) {
        j["witness_bipartition"] = json{
            {"side_a", vertex_set_to_json(r.witness_bipartition->side_a)},
            {"side_b", vertex_set_to_json(r.witness_bipartition->side_b)},
        };
    } else {
        j["witness_bipartition"] = nullptr;
    }
    return j;
}

json measure_values_to_json(const MeasureValues &v) {
    json j;
    j["e_g"] = v.e_g ? json(*v.e_g) : json(nullptr);
    j["e_r"] = v.e_r ? json(*v.e_r) : json(nullptr);
    j["log_one_plus_r"] = v.log_one_plus_r ? json(*v.log_one_plus_r) : json(nullptr);
    return j;
}

json discrimination_result_to_json(const DiscriminationResult &r) {
    json bits = json::object();
    for (const auto &[i, b] : r.recovered_bits) {
        bits[std::to_string(i)] = b ? 1 : 0;
    }
    return json{
        {"recovered_bits", bits},
        {"trials", r.trials},
        {"successes", r.successes},
    };
}

json ensemble_to_json(const Ensemble &e) {
    json entries = json::array();
    for (const auto &entry : e.entries) {
        entries.push_back({{"id", entry.id}, {"e_g", entry.e_g}, {"additive", entry.additive}});
    }
    return json{{"n", e.n}, {"entries", entries}};
}

Ensemble ensemble_from_json(const json &j) {
    Ensemble e;
    e.n = j.at("n").get<size_t>();
    for (const auto &entry : j.at("entries")) {
        EnsembleEntry out;
        out.id = entry.at("id").get<std::string>();
        out.e_g = entry.at("e_g").get<double>();
        // User-supplied entries default to non-additive; the flag must be
        // set explicitly.
        out.additive = entry.value("additive", false);
        if (out.e_g < 0) {
            throw std::invalid_argument("ensemble JSON: negative e_g");
        }
        e.entries.push_back(std::move(out));
    }
    return e;
}

std::map<uint64_t, double> weights_from_json(const json &j, size_t n) {
    if (!j.is_object()) {
        throw std::invalid_argument("weights JSON: expected an object of index -> weight");
    }
    std::map<uint64_t, double> out;
    for (const auto &[key, value] : j.items()) {
        if (key.size() != n) {
            throw std::invalid_argument("weights JSON: index '" + key + "' has wrong length");
        }
        uint64_t bits = 0;
        for (size_t i = 0; i < n; i++) {
            if (key[i] == '1') {
                bits |= uint64_t{1} << i;
            } else if (key[i] != '0') {
                throw std::invalid_argument("weights JSON: index must be a 0/1 string");
            }
        }
        out[bits] = value.get<double>();
    }
    return out;
}

}  // namespace graphstate
