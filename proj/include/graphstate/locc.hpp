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

#ifndef GRAPHSTATE_LOCC_H
#define GRAPHSTATE_LOCC_H

#include <cstdint>
#include <map>
#include <vector>

#include "graphstate/graph.hpp"
#include "graphstate/tableau.hpp"

namespace graphstate {

/// Single-setting LOCC plan: X on the Amber qubits, Z on the rest.
/// parity_masks[i] (i Amber) lists the qubits whose outcomes multiply to
/// (-1)^{k_i}; it is always {i} union neighbours(i).
struct MeasurementPlan {
    VertexSet x_qubits;
    VertexSet z_qubits;
    std::map<size_t, VertexSet> parity_masks;
};

/// One measurement in a simulation trace.
struct MeasurementRecord {
    size_t qubit = 0;
    char basis = 'X';
    int outcome = +1;
};

struct DiscriminationResult {
    std::map<size_t, bool> recovered_bits;  // i in Amber -> k_i
    size_t trials = 0;
    size_t successes = 0;
    std::vector<MeasurementRecord> trace;  // last trial's measurements
};

/// Builds the plan; a must be independent in g (a neighbour of an Amber
/// qubit would need both X and Z measured).
MeasurementPlan discrimination_protocol(const Graph &g, const VertexSet &a);

/// Prepares |G_k> as a tableau, measures per plan (Amber X first, then Z,
/// each ascending), and reconstructs each Amber k_i from outcome
/// parities. Recovery is deterministic; the result records whether it
/// matched k on the Amber bits.
DiscriminationResult simulate_discrimination(const Graph &g, const VertexSet &a, GraphStateIndex k,
                                             uint64_t seed);

/// Runs `trials` random indices (Amber bits free, others zero) through
/// the protocol; returns the fraction recovered exactly. Contract: 1.0.
double verify_perfect_discrimination(const Graph &g, const VertexSet &a, size_t trials, uint64_t seed);

}  // namespace graphstate

#endif
