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

#ifndef GRAPHSTATE_JSON_IO_H
#define GRAPHSTATE_JSON_IO_H

#include <json.hpp>

#include "graphstate/bounds.hpp"
#include "graphstate/capacity.hpp"
#include "graphstate/graph.hpp"
#include "graphstate/locc.hpp"
#include "graphstate/measures.hpp"

namespace graphstate {

// Graph interchange format: {"n": <int>, "edges": [[i,j], ...]},
// 0-based, i < j, no duplicates.
nlohmann::json graph_to_json(const Graph &g);
Graph graph_from_json(const nlohmann::json &j);

nlohmann::json vertex_set_to_json(const VertexSet &s);

nlohmann::json bounds_report_to_json(const BoundsReport &r);

// Absent measure fields serialize as explicit nulls.
nlohmann::json measure_values_to_json(const MeasureValues &v);

nlohmann::json discrimination_result_to_json(const DiscriminationResult &r);

nlohmann::json ensemble_to_json(const Ensemble &e);
Ensemble ensemble_from_json(const nlohmann::json &j);

// Weights file for mixed-state commands: {"<index bits as 0/1 string,
// qubit 0 first>": lambda, ...}.
std::map<uint64_t, double> weights_from_json(const nlohmann::json &j, size_t n);

}  // namespace graphstate

#endif
