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

#include "graphstate/locc.hpp"

#include <stdexcept>

namespace graphstate {

MeasurementPlan discrimination_protocol(const Graph &g, const VertexSet &a) {
    if (!is_independent(g, a)) {
        throw std::invalid_argument("discrimination_protocol: Amber set must be independent");
    }
    MeasurementPlan plan;
    plan.x_qubits = a;
    plan.z_qubits.mask = VertexSet::all(g.n).mask & ~a.mask;
    for (size_t i : a.members()) {
        VertexSet m;
        m.mask = g.adj[i] | (uint64_t{1} << i);
        plan.parity_masks[i] = m;
    }
    return plan;
}

DiscriminationResult simulate_discrimination(const Graph &g, const VertexSet &a, GraphStateIndex k,
                                             uint64_t seed) {
    MeasurementPlan plan = discrimination_protocol(g, a);
    std::mt19937_64 rng(seed);
    StabilizerTableau t = generators_of(g, k);

    DiscriminationResult result;
    result.trials = 1;
    std::vector<int> outcome(g.n, +1);
    // Amber X measurements first, then Z on the rest, ascending index.
    for (size_t q : plan.x_qubits.members()) {
        auto m = measure_pauli(t, PauliString::single_x(g.n, q), rng);
        outcome[q] = m.value;
        result.trace.push_back({q, 'X', m.value});
    }
    for (size_t q : plan.z_qubits.members()) {
        auto m = measure_pauli(t, PauliString::single_z(g.n, q), rng);
        outcome[q] = m.value;
        result.trace.push_back({q, 'Z', m.value});
    }
    bool all_good = true;
    for (const auto &[i, mask] : plan.parity_masks) {
        int prod = +1;
        for (size_t q : mask.members()) {
            prod *= outcome[q];
        }
        bool bit = prod == -1;
        result.recovered_bits[i] = bit;
        all_good = all_good && bit == k.bit(i);
    }
    result.successes = all_good ? 1 : 0;
    return result;
}

double verify_perfect_discrimination(const Graph &g, const VertexSet &a, size_t trials, uint64_t seed) {
    if (!is_independent(g, a)) {
        throw std::invalid_argument("verify_perfect_discrimination: Amber set must be independent");
    }
    if (trials == 0) {
        return 1.0;
    }
    std::mt19937_64 index_rng(seed ^ 0xA5A5A5A5DEADBEEFull);
    size_t good = 0;
    for (size_t trial = 0; trial < trials; trial++) {
        GraphStateIndex k;
        k.n = g.n;
        k.bits = index_rng() & a.mask;  // Amber bits free, others fixed to 0
        auto r = simulate_discrimination(g, a, k, seed + trial);
        good += r.successes;
    }
    return static_cast<double>(good) / static_cast<double>(trials);
}

}  // namespace graphstate
