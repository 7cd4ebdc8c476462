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

#ifndef GRAPHSTATE_CAPACITY_H
#define GRAPHSTATE_CAPACITY_H

#include <string>
#include <vector>

#include "graphstate/bounds.hpp"

namespace graphstate {

/// Signal ensemble for LOCC-decoded classical transmission, one letter =
/// one n-qubit state.
struct EnsembleEntry {
    std::string id;
    double e_g = 0;        // ebits
    bool additive = false; // geometric measure additive under tensor powers
};

struct Ensemble {
    size_t n = 0;
    std::vector<EnsembleEntry> entries;
};

/// sum_i p(i|i) 2^{E_g_i} <= 2^n.
bool povm_constraint_check(const std::vector<double> &success_probs,
                           const std::vector<double> &e_g_values, size_t n);

/// C <= n - mean(E_g). Refuses if any entry is flagged non-additive.
double capacity_bound(const Ensemble &ens);

/// Rate bound at blocklength L with worst-case error epsilon:
/// n - mean_e_g - log2(1 - epsilon)/L.
double finite_blocklength_bound(size_t L, double epsilon, size_t n, double mean_e_g);

/// Rate achieved by encoding the Amber bits and decoding with the
/// colouring protocol: |A| from the report.
size_t achievable_rate(const Graph &g, const BoundsReport &report);

/// The colouring protocol's ensemble for an exact graph: 2^{|A|} basis
/// states, each with E_g = n - |A| and additive entanglement.
Ensemble coloring_ensemble(const Graph &g, const BoundsReport &report);

}  // namespace graphstate

#endif
