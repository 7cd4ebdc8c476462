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

#ifndef GRAPHSTATE_TABLEAU_H
#define GRAPHSTATE_TABLEAU_H

#include <random>
#include <vector>

#include "graphstate/graph.hpp"
#include "graphstate/pauli.hpp"

namespace graphstate {

/// n-bit index k selecting the graph basis state |G_k>.
struct GraphStateIndex {
    size_t n = 0;
    uint64_t bits = 0;

    bool bit(size_t i) const { return (bits >> i) & 1u; }

    friend bool operator==(const GraphStateIndex &a, const GraphStateIndex &b) = default;
};

/// Stabilizer state as n mutually commuting, independent Pauli
/// generators. Mutated in place by measurement; single-owner while a
/// measurement sequence is running.
struct StabilizerTableau {
    size_t n = 0;
    std::vector<PauliString> generators;
};

/// Graph-state generators: generator i has X on qubit i, Z on each
/// neighbour, and sign (-1)^{k_i}.
StabilizerTableau generators_of(const Graph &g, GraphStateIndex k = {});

/// All pairwise symplectic inner products vanish.
bool check_commuting(const StabilizerTableau &t);

/// The [x|z] generator matrix has full GF(2) rank.
bool check_independent(const StabilizerTableau &t);

struct MeasurementOutcome {
    int value = +1;  // +1 or -1
    bool deterministic = false;
};

/// Measures Pauli p on the tableau state. If +-p is in the stabilizer
/// group the outcome is deterministic and the state is unchanged;
/// otherwise the outcome is a fair coin from rng and the tableau is
/// updated to stabilize outcome*p.
MeasurementOutcome measure_pauli(StabilizerTableau &t, const PauliString &p, std::mt19937_64 &rng);

/// Conjugates every generator by the local Clifford realizing local
/// complementation at v: sqrt(K_v) = exp(-i pi/4 X_v) prod_j exp(i pi/4 Z_j)
/// over neighbours j. The result stabilizes a basis state of
/// local_complement(g, v).
StabilizerTableau apply_lc_unitary(const StabilizerTableau &t, const Graph &g, size_t v);

/// Reads off the basis index of a graph-state tableau: the deterministic
/// outcome of each K_i of `g`. Throws if some K_i is not deterministic
/// (the state is not a basis state of g).
GraphStateIndex read_graph_index(const StabilizerTableau &t, const Graph &g);

}  // namespace graphstate

#endif
