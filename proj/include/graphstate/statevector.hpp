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

#ifndef GRAPHSTATE_STATEVECTOR_H
#define GRAPHSTATE_STATEVECTOR_H

#include <complex>
#include <vector>

#include "graphstate/cut_rank.hpp"
#include "graphstate/graph.hpp"
#include "graphstate/pauli.hpp"
#include "graphstate/tableau.hpp"

namespace graphstate {

using Amplitudes = std::vector<std::complex<double>>;

/// Qubit count above which the dense oracle refuses to run.
inline constexpr size_t kDenseOracleCap = 12;

/// Dense amplitudes of |G_k> = prod_i Z_i^{k_i} CZ^{Ed} |+>^n. Basis
/// index bit i is the computational value of qubit i. Every amplitude is
/// +-2^{-n/2}.
Amplitudes statevector(const Graph &g, GraphStateIndex k = {});

/// <G1_k1 | G2_k2>; sizes must agree and stay within the oracle cap.
std::complex<double> overlap(const Graph &g1, GraphStateIndex k1, const Graph &g2, GraphStateIndex k2);

/// Applies a Pauli string to a dense vector.
Amplitudes apply_pauli(const PauliString &p, const Amplitudes &psi);

/// Schmidt coefficients (singular values) of psi reshaped across the
/// bipartition, sorted descending.
std::vector<double> schmidt_coefficients(const Amplitudes &psi, size_t n, const Bipartition &p);

/// log2 of the number of nonzero Schmidt coefficients; throws if that
/// count is not a power of two (never the case for stabilizer states).
size_t schmidt_rank_exponent(const Amplitudes &psi, size_t n, const Bipartition &p);

}  // namespace graphstate

#endif
