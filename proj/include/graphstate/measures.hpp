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

#ifndef GRAPHSTATE_MEASURES_H
#define GRAPHSTATE_MEASURES_H

#include <Eigen/Dense>
#include <map>
#include <optional>

#include "graphstate/bounds.hpp"
#include "graphstate/graph.hpp"
#include "graphstate/statevector.hpp"
#include "graphstate/tableau.hpp"

namespace graphstate {

/// Mixture of graph basis states within one joint Amber eigenspace S_A:
/// every supported index agrees with fixed_amber_bits on the Amber set.
struct MixedGraphState {
    Graph graph;
    VertexSet amber;
    std::map<size_t, bool> fixed_amber_bits;
    std::map<uint64_t, double> weights;  // index bits -> lambda_k

    void validate() const;  // throws on any invariant violation
};

/// Evaluated entanglement values in ebits; fields absent when the
/// corresponding formula does not apply.
struct MeasureValues {
    std::optional<double> e_g;
    std::optional<double> e_r;
    std::optional<double> log_one_plus_r;
};

/// Base-2 entropy with 0 log 0 := 0.
double shannon_entropy(const std::vector<double> &probs);

/// All three measures equal n - |A| when lower and upper bounds match.
MeasureValues exact_pure_measures(const BoundsReport &report);

/// E_R = |B| - S(weights), E_g = |B|, valid when the graph's bounds are
/// exact (evidence report) and the mixture stays inside one eigenspace.
MeasureValues mixed_measures(const MixedGraphState &m, const BoundsReport &evidence);

/// R = 2^{|B|} max lambda - 1 under the same hypotheses.
double mixed_robustness(const MixedGraphState &m, const BoundsReport &evidence);

/// p0 (1 + r0) - 1; may be negative, callers clamp for display only.
double robustness_lower_bound(double p0, double r0);

/// One product state in the span of S_A: qubits outside Amber are fixed
/// computational states z_bits; each Amber qubit i is |+> or |-> as
/// recorded in x_signs (true = |->).
struct ProductStabilizerState {
    uint64_t z_bits = 0;
    std::map<size_t, bool> x_signs;
};

struct SeparableStateDescription {
    std::vector<ProductStabilizerState> states;  // 2^{n-|A|} of them
    std::optional<Eigen::MatrixXcd> density;     // dense omega when n <= cap
};

/// The equal mixture of product states spanning the Amber eigenspace
/// selected by fixed_amber_bits; this is the optimal separable state for
/// exact graphs.
SeparableStateDescription closest_separable_state(const Graph &g, const VertexSet &a,
                                                  const std::map<size_t, bool> &fixed_amber_bits);

struct GeometricEstimate {
    double value = 0;           // -log2 best squared overlap
    double best_overlap_sq = 0;
    bool restarts_agree = true;  // top two restarts within 1e-6
};

/// Multi-start alternating single-qubit overlap maximization over
/// product states; each per-qubit subproblem is solved in closed form.
GeometricEstimate geometric_oracle(const Amplitudes &psi, size_t restarts = 32,
                                   double tolerance = 1e-12, uint64_t seed = 0);

/// E_R/E_g for u |G_k><G_k| + (1-u) |G'_k><G'_k| under the mixing
/// conditions (same n, both exact with equal |B|, same eigenspace,
/// identical Amber generators). Robustness is not returned.
MeasureValues two_graph_mixture_measures(const Graph &g, const Graph &g_prime, GraphStateIndex k,
                                         double u, const BoundsReport &evidence_g,
                                         const BoundsReport &evidence_g_prime);

}  // namespace graphstate

#endif
