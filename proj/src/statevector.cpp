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

#include "graphstate/statevector.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace graphstate {

namespace {

void check_cap(size_t n) {
    if (n > kDenseOracleCap) {
        throw std::invalid_argument("dense oracle: qubit count exceeds cap");
    }
}

}  // namespace

Amplitudes statevector(const Graph &g, GraphStateIndex k) {
    check_cap(g.n);
    if (k.n != 0 && k.n != g.n) {
        throw std::invalid_argument("statevector: index length mismatch");
    }
    size_t dim = size_t{1} << g.n;
    double mag = std::pow(2.0, -static_cast<double>(g.n) / 2.0);
    Amplitudes psi(dim);
    for (size_t b = 0; b < dim; b++) {
        // CZ sign: parity of edges fully inside b; Z_i^{k_i} adds k.b parity.
        int parity = std::popcount(k.bits & b) & 1;
        for (size_t i = 0; i < g.n; i++) {
            if ((b >> i) & 1) {
                parity ^= std::popcount(g.adj[i] & b & ~((uint64_t{1} << (i + 1)) - 1)) & 1;
            }
        }
        psi[b] = parity ? -mag : mag;
    }
    return psi;
}

std::complex<double> overlap(const Graph &g1, GraphStateIndex k1, const Graph &g2, GraphStateIndex k2) {
    if (g1.n != g2.n) {
        throw std::invalid_argument("overlap: size mismatch");
    }
    Amplitudes a = statevector(g1, k1);
    Amplitudes b = statevector(g2, k2);
    std::complex<double> sum = 0;
    for (size_t i = 0; i < a.size(); i++) {
        sum += std::conj(a[i]) * b[i];
    }
    return sum;
}

Amplitudes apply_pauli(const PauliString &p, const Amplitudes &psi) {
    size_t dim = psi.size();
    Amplitudes out(dim);
    const std::complex<double> img(0, 1);
    // Per qubit: X flips the bit; Z gives (-1)^{bit}; Y = both plus a
    // factor of i (Y|0> = i|1>, Y|1> = -i|0>).
    int y_count = std::popcount(p.x_bits & p.z_bits);
    std::complex<double> y_phase = 1.0;
    for (int t = 0; t < y_count; t++) {
        y_phase *= img;
    }
    for (size_t b = 0; b < dim; b++) {
        std::complex<double> phase = p.negative ? -1.0 : 1.0;
        phase *= (std::popcount(p.z_bits & b) & 1) ? -1.0 : 1.0;
        out[b ^ p.x_bits] += phase * y_phase * psi[b];
    }
    return out;
}

std::vector<double> schmidt_coefficients(const Amplitudes &psi, size_t n, const Bipartition &p) {
    check_cap(n);
    if (psi.size() != (size_t{1} << n)) {
        throw std::invalid_argument("schmidt_coefficients: dimension mismatch");
    }
    auto a_verts = p.side_a.members();
    auto b_verts = p.side_b.members();
    size_t rows = size_t{1} << a_verts.size();
    size_t cols = size_t{1} << b_verts.size();
    if (rows * cols != psi.size()) {
        throw std::invalid_argument("schmidt_coefficients: partition does not cover the state");
    }
    Eigen::MatrixXcd m(rows, cols);
    for (size_t b = 0; b < psi.size(); b++) {
        size_t r = 0, c = 0;
        for (size_t i = 0; i < a_verts.size(); i++) {
            r |= ((b >> a_verts[i]) & 1) << i;
        }
        for (size_t i = 0; i < b_verts.size(); i++) {
            c |= ((b >> b_verts[i]) & 1) << i;
        }
        m(r, c) = psi[b];
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    std::vector<double> out(svd.singularValues().data(),
                            svd.singularValues().data() + svd.singularValues().size());
    return out;
}

size_t schmidt_rank_exponent(const Amplitudes &psi, size_t n, const Bipartition &p) {
    auto sv = schmidt_coefficients(psi, n, p);
    double tol = 1e-9 * (sv.empty() ? 1.0 : sv.front());
    size_t count = 0;
    for (double s : sv) {
        if (s > tol) {
            count++;
        }
    }
    if (count == 0 || (count & (count - 1)) != 0) {
        throw std::logic_error("schmidt_rank_exponent: nonzero coefficient count is not a power of two");
    }
    return static_cast<size_t>(std::countr_zero(count));
}

}  // namespace graphstate
