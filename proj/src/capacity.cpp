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

#include <cmath>
#include <stdexcept>

namespace graphstate {

bool povm_constraint_check(const std::vector<double> &success_probs,
                           const std::vector<double> &e_g_values, size_t n) {
    if (success_probs.size() != e_g_values.size()) {
        throw std::invalid_argument("povm_constraint_check: list lengths differ");
    }
    double sum = 0;
    for (size_t i = 0; i < success_probs.size(); i++) {
        double p = success_probs[i];
        if (p < 0 || p > 1) {
            throw std::invalid_argument("povm_constraint_check: probability out of range");
        }
        sum += p * std::exp2(e_g_values[i]);
    }
    // Slack for accumulated floating error; inputs are dyadic in practice.
    return sum <= std::exp2(static_cast<double>(n)) * (1 + 1e-12);
}

double capacity_bound(const Ensemble &ens) {
    if (ens.entries.empty()) {
        return static_cast<double>(ens.n);
    }
    double sum = 0;
    for (const auto &e : ens.entries) {
        if (!e.additive) {
            throw std::invalid_argument("capacity_bound: entry '" + e.id +
                                        "' is not flagged additive; the bound needs additivity of "
                                        "the geometric measure under tensor powers");
        }
        if (e.e_g < 0) {
            throw std::invalid_argument("capacity_bound: negative E_g");
        }
        sum += e.e_g;
    }
    return static_cast<double>(ens.n) - sum / static_cast<double>(ens.entries.size());
}

double finite_blocklength_bound(size_t L, double epsilon, size_t n, double mean_e_g) {
    if (L < 1) {
        throw std::invalid_argument("finite_blocklength_bound: L must be >= 1");
    }
    if (epsilon < 0 || epsilon >= 1) {
        throw std::invalid_argument("finite_blocklength_bound: epsilon must be in [0,1)");
    }
    return static_cast<double>(n) - mean_e_g - std::log2(1 - epsilon) / static_cast<double>(L);
}

size_t achievable_rate(const Graph &g, const BoundsReport &report) {
    (void)g;
    return report.lower_log_N;
}

Ensemble coloring_ensemble(const Graph &g, const BoundsReport &report) {
    if (!report.exact) {
        throw std::invalid_argument("coloring_ensemble: requires an exact bounds report");
    }
    Ensemble ens;
    ens.n = g.n;
    size_t count = size_t{1} << report.lower_log_N;
    double e = static_cast<double>(report.E_high);
    for (size_t i = 0; i < count; i++) {
        ens.entries.push_back({"basis_" + std::to_string(i), e, true});
    }
    return ens;
}

}  // namespace graphstate
