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

#include "graphstate/measures.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

namespace graphstate {

double shannon_entropy(const std::vector<double> &probs) {
    double s = 0;
    for (double p : probs) {
        if (p > 0) {
            s -= p * std::log2(p);
        }
    }
    return s;
}

void MixedGraphState::validate() const {
    if (!is_independent(graph, amber)) {
        throw std::invalid_argument("MixedGraphState: amber set must be independent");
    }
    for (size_t i : amber.members()) {
        if (!fixed_amber_bits.count(i)) {
            throw std::invalid_argument("MixedGraphState: missing fixed bit for an Amber qubit");
        }
    }
    double sum = 0;
    for (const auto &[bits, lambda] : weights) {
        if (lambda < 0) {
            throw std::invalid_argument("MixedGraphState: negative weight");
        }
        for (const auto &[i, bit] : fixed_amber_bits) {
            if ((((bits >> i) & 1) != 0) != bit) {
                throw std::invalid_argument(
                    "MixedGraphState: supported index leaves the Amber eigenspace");
            }
        }
        sum += lambda;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        throw std::invalid_argument("MixedGraphState: weights must sum to 1");
    }
    size_t b = graph.n - amber.size();
    if (weights.size() > (size_t{1} << b)) {
        throw std::invalid_argument("MixedGraphState: support exceeds eigenspace dimension");
    }
}

MeasureValues exact_pure_measures(const BoundsReport &report) {
    if (!report.exact) {
        throw std::invalid_argument("exact_pure_measures: report is not exact");
    }
    MeasureValues v;
    double e = static_cast<double>(report.E_high);
    v.e_g = e;
    v.e_r = e;
    v.log_one_plus_r = e;
    return v;
}

namespace {

void check_mixed_evidence(const MixedGraphState &m, const BoundsReport &evidence) {
    m.validate();
    if (!evidence.exact) {
        throw std::invalid_argument("mixed measures: evidence report is not exact");
    }
    if (evidence.n != m.graph.n) {
        throw std::invalid_argument("mixed measures: evidence report is for a different size");
    }
    // The formulas need E_R = E_g = |B| with |B| = n - |amber|, i.e. the
    // supplied Amber set must be maximum.
    if (m.amber.size() != evidence.lower_log_N) {
        throw std::invalid_argument("mixed measures: amber set is not maximum per evidence");
    }
}

}  // namespace

MeasureValues mixed_measures(const MixedGraphState &m, const BoundsReport &evidence) {
    check_mixed_evidence(m, evidence);
    double b = static_cast<double>(m.graph.n - m.amber.size());
    std::vector<double> probs;
    probs.reserve(m.weights.size());
    for (const auto &[bits, lambda] : m.weights) {
        probs.push_back(lambda);
    }
    MeasureValues v;
    v.e_g = b;
    v.e_r = b - shannon_entropy(probs);
    return v;
}

double mixed_robustness(const MixedGraphState &m, const BoundsReport &evidence) {
    check_mixed_evidence(m, evidence);
    double max_lambda = 0;
    for (const auto &[bits, lambda] : m.weights) {
        max_lambda = std::max(max_lambda, lambda);
    }
    return std::ldexp(max_lambda, static_cast<int>(m.graph.n - m.amber.size())) - 1.0;
}

double robustness_lower_bound(double p0, double r0) {
    if (p0 < 0 || p0 > 1) {
        throw std::invalid_argument("robustness_lower_bound: p0 must be in [0,1]");
    }
    if (r0 < 0) {
        throw std::invalid_argument("robustness_lower_bound: r0 must be >= 0");
    }
    return p0 * (1.0 + r0) - 1.0;
}

SeparableStateDescription closest_separable_state(const Graph &g, const VertexSet &a,
                                                  const std::map<size_t, bool> &fixed_amber_bits) {
    if (!is_independent(g, a)) {
        throw std::invalid_argument("closest_separable_state: amber set must be independent");
    }
    for (size_t i : a.members()) {
        if (!fixed_amber_bits.count(i)) {
            throw std::invalid_argument("closest_separable_state: missing fixed bit");
        }
    }
    uint64_t blue_mask = VertexSet::all(g.n).mask & ~a.mask;
    std::vector<size_t> blue = VertexSet{blue_mask}.members();
    size_t dim_b = size_t{1} << blue.size();

    SeparableStateDescription out;
    out.states.reserve(dim_b);
    for (size_t pattern = 0; pattern < dim_b; pattern++) {
        ProductStabilizerState s;
        for (size_t bi = 0; bi < blue.size(); bi++) {
            if ((pattern >> bi) & 1) {
                s.z_bits |= uint64_t{1} << blue[bi];
            }
        }
        // Amber qubit i sits in the X eigenstate consistent with the
        // stabilizers (-1)^{a_i} K_i and the fixed Z values of its
        // neighbours: sign bit = a_i xor parity of neighbour Z bits.
        for (size_t i : a.members()) {
            bool sign = fixed_amber_bits.at(i);
            sign ^= (std::popcount(g.adj[i] & s.z_bits) & 1) != 0;
            s.x_signs[i] = sign;
        }
        out.states.push_back(std::move(s));
    }

    if (g.n <= kDenseOracleCap) {
        size_t dim = size_t{1} << g.n;
        Eigen::MatrixXcd omega = Eigen::MatrixXcd::Zero(dim, dim);
        double amber_norm = std::pow(2.0, -static_cast<double>(a.size()));
        for (const auto &s : out.states) {
            // Product state vector: |s.z_bits> on Blue, |+/-> on Amber.
            Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
            for (size_t b = 0; b < dim; b++) {
                if ((b & blue_mask) != (s.z_bits & blue_mask)) {
                    continue;
                }
                double amp = std::sqrt(amber_norm);
                for (const auto &[i, sign] : s.x_signs) {
                    if (sign && ((b >> i) & 1)) {
                        amp = -amp;
                    }
                }
                v(b) = amp;
            }
            omega += (v * v.adjoint()) / static_cast<double>(dim_b);
        }
        out.density = std::move(omega);
    }
    return out;
}

GeometricEstimate geometric_oracle(const Amplitudes &psi, size_t restarts, double tolerance,
                                   uint64_t seed) {
    size_t dim = psi.size();
    if (dim == 0 || (dim & (dim - 1)) != 0) {
        throw std::invalid_argument("geometric_oracle: dimension must be a power of two");
    }
    size_t n = static_cast<size_t>(std::countr_zero(dim));
    if (n > kDenseOracleCap) {
        throw std::invalid_argument("geometric_oracle: qubit count exceeds cap");
    }
    double norm = 0;
    for (const auto &c : psi) {
        norm += std::norm(c);
    }
    if (std::abs(norm - 1.0) > 1e-8) {
        throw std::invalid_argument("geometric_oracle: state is not normalized");
    }

    std::vector<double> restart_best;
    double best = 0;
    for (size_t restart = 0; restart < restarts; restart++) {
        std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull + restart);
        std::normal_distribution<double> gauss;
        // phi[q][bit]
        std::vector<std::array<std::complex<double>, 2>> phi(n);
        for (auto &p : phi) {
            p[0] = {gauss(rng), gauss(rng)};
            p[1] = {gauss(rng), gauss(rng)};
            double s = std::sqrt(std::norm(p[0]) + std::norm(p[1]));
            p[0] /= s;
            p[1] /= s;
        }
        double overlap = 0;
        for (size_t sweep = 0; sweep < 500; sweep++) {
            double prev = overlap;
            for (size_t q = 0; q < n; q++) {
                // Contract psi with all conjugated factors except qubit q;
                // the optimal phi_q is the normalized residual vector.
                std::complex<double> v0 = 0, v1 = 0;
                for (size_t b = 0; b < dim; b++) {
                    std::complex<double> coeff = psi[b];
                    for (size_t p = 0; p < n; p++) {
                        if (p != q) {
                            coeff *= std::conj(phi[p][(b >> p) & 1]);
                        }
                    }
                    if ((b >> q) & 1) {
                        v1 += coeff;
                    } else {
                        v0 += coeff;
                    }
                }
                double len = std::sqrt(std::norm(v0) + std::norm(v1));
                if (len > 0) {
                    phi[q][0] = std::conj(v0) / len;
                    phi[q][1] = std::conj(v1) / len;
                    overlap = len;
                }
            }
            if (overlap - prev < tolerance) {
                break;
            }
        }
        restart_best.push_back(overlap * overlap);
        best = std::max(best, overlap * overlap);
    }

    GeometricEstimate est;
    est.best_overlap_sq = best;
    est.value = -std::log2(best);
    std::sort(restart_best.rbegin(), restart_best.rend());
    est.restarts_agree = restart_best.size() < 2 || (restart_best[0] - restart_best[1]) <= 1e-6;
    return est;
}

MeasureValues two_graph_mixture_measures(const Graph &g, const Graph &g_prime, GraphStateIndex k,
                                         double u, const BoundsReport &evidence_g,
                                         const BoundsReport &evidence_g_prime) {
    if (u < 0 || u > 1) {
        throw std::invalid_argument("two_graph_mixture_measures: u must be in [0,1]");
    }
    if (g.n != g_prime.n) {
        throw std::invalid_argument("condition (a) failed: qubit counts differ");
    }
    if (!evidence_g.exact || !evidence_g_prime.exact || evidence_g.E_high != evidence_g_prime.E_high) {
        throw std::invalid_argument("condition (b) failed: states must both be exact with equal |B|");
    }
    // The shared Amber set comes from g's witness; it must be independent
    // in both graphs for S_A to be common.
    VertexSet amber = evidence_g.witness_set;
    if (!is_independent(g, amber) || !is_independent(g_prime, amber)) {
        throw std::invalid_argument("condition (c) failed: states are not in a common Amber eigenspace");
    }
    for (size_t i : amber.members()) {
        if (g.adj[i] != g_prime.adj[i]) {
            throw std::invalid_argument("condition (d) failed: Amber generators differ");
        }
    }

    double b = static_cast<double>(evidence_g.E_high);
    MeasureValues v;
    v.e_g = b;
    if (g == g_prime || u == 0 || u == 1) {
        v.e_r = b;
        return v;
    }
    double c = std::abs(overlap(g, k, g_prime, k));
    // Eigenvalues of the rank-<=2 mixture u|psi><psi| + (1-u)|phi><phi|.
    double disc = std::sqrt((2 * u - 1) * (2 * u - 1) + 4 * u * (1 - u) * c * c);
    std::vector<double> eig{(1 + disc) / 2, (1 - disc) / 2};
    v.e_r = b - shannon_entropy(eig);
    return v;
}

}  // namespace graphstate
