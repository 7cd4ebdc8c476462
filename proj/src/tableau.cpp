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

#include "graphstate/tableau.hpp"

#include <bit>
#include <optional>
#include <stdexcept>

namespace graphstate {

StabilizerTableau generators_of(const Graph &g, GraphStateIndex k) {
    if (k.n != 0 && k.n != g.n) {
        throw std::invalid_argument("generators_of: index length mismatch");
    }
    StabilizerTableau t;
    t.n = g.n;
    t.generators.reserve(g.n);
    for (size_t i = 0; i < g.n; i++) {
        PauliString p;
        p.n = g.n;
        p.x_bits = uint64_t{1} << i;
        p.z_bits = g.adj[i];
        p.negative = (k.bits >> i) & 1;
        t.generators.push_back(p);
    }
    return t;
}

bool check_commuting(const StabilizerTableau &t) {
    for (size_t i = 0; i < t.generators.size(); i++) {
        for (size_t j = i + 1; j < t.generators.size(); j++) {
            if (!t.generators[i].commutes_with(t.generators[j])) {
                return false;
            }
        }
    }
    return true;
}

bool check_independent(const StabilizerTableau &t) {
    // Rank of the [x|z] matrix; x and z halves fit one uint64_t each, so
    // run a 128-bit elimination as paired words.
    std::vector<std::pair<uint64_t, uint64_t>> rows;
    for (const auto &gen : t.generators) {
        rows.emplace_back(gen.x_bits, gen.z_bits);
    }
    size_t rank = 0;
    for (size_t col = 0; col < 2 * t.n && rank < rows.size(); col++) {
        uint64_t xsel = col < t.n ? (uint64_t{1} << col) : 0;
        uint64_t zsel = col >= t.n ? (uint64_t{1} << (col - t.n)) : 0;
        size_t pivot = rank;
        while (pivot < rows.size() && !((rows[pivot].first & xsel) | (rows[pivot].second & zsel))) {
            pivot++;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[pivot]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != rank && ((rows[r].first & xsel) | (rows[r].second & zsel))) {
                rows[r].first ^= rows[rank].first;
                rows[r].second ^= rows[rank].second;
            }
        }
        rank++;
    }
    return rank == t.generators.size();
}

namespace {

// If +-p lies in the stabilizer group, returns the sign s with s*p in the
// group (the deterministic measurement outcome). Requires p to commute
// with every generator.
std::optional<int> deterministic_sign(const StabilizerTableau &t, const PauliString &p) {
    // Echelonize generator copies over the 2n symplectic columns, using
    // phase-tracked Pauli products so signs survive the elimination.
    std::vector<PauliString> rows = t.generators;
    size_t rank = 0;
    std::vector<size_t> pivot_col;
    for (size_t col = 0; col < 2 * t.n && rank < rows.size(); col++) {
        bool x_half = col < t.n;
        uint64_t sel = uint64_t{1} << (x_half ? col : col - t.n);
        auto has = [&](const PauliString &r) {
            return ((x_half ? r.x_bits : r.z_bits) & sel) != 0;
        };
        size_t piv = rank;
        while (piv < rows.size() && !has(rows[piv])) {
            piv++;
        }
        if (piv == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[piv]);
        for (size_t r = rank + 1; r < rows.size(); r++) {
            if (has(rows[r])) {
                rows[r] = pauli_product(rows[r], rows[rank]);
            }
        }
        pivot_col.push_back(col);
        rank++;
    }
    // Reduce p against the echelon rows.
    PauliString acc = PauliString::identity(t.n);
    uint64_t rx = p.x_bits, rz = p.z_bits;
    for (size_t r = 0; r < rank; r++) {
        size_t col = pivot_col[r];
        bool x_half = col < t.n;
        uint64_t sel = uint64_t{1} << (x_half ? col : col - t.n);
        if (((x_half ? rx : rz) & sel) != 0) {
            acc = pauli_product(acc, rows[r]);
            rx ^= rows[r].x_bits;
            rz ^= rows[r].z_bits;
        }
    }
    if (rx != 0 || rz != 0) {
        return std::nullopt;  // p not in the group up to sign
    }
    return acc.negative == p.negative ? +1 : -1;
}

}  // namespace

MeasurementOutcome measure_pauli(StabilizerTableau &t, const PauliString &p, std::mt19937_64 &rng) {
    if (p.n != t.n) {
        throw std::invalid_argument("measure_pauli: size mismatch");
    }
    // Generators anticommuting with p.
    std::vector<size_t> anti;
    for (size_t i = 0; i < t.generators.size(); i++) {
        if (!t.generators[i].commutes_with(p)) {
            anti.push_back(i);
        }
    }
    MeasurementOutcome out;
    if (anti.empty()) {
        auto sign = deterministic_sign(t, p);
        if (!sign) {
            throw std::logic_error("measure_pauli: commuting Pauli outside the group (tableau corrupt?)");
        }
        out.value = *sign;
        out.deterministic = true;
        return out;
    }
    out.value = (rng() & 1) ? -1 : +1;
    out.deterministic = false;
    size_t pivot = anti[0];
    for (size_t i = 1; i < anti.size(); i++) {
        t.generators[anti[i]] = pauli_product(t.generators[anti[i]], t.generators[pivot]);
    }
    PauliString replacement = p;
    replacement.negative = (out.value == -1) != p.negative;
    t.generators[pivot] = replacement;
    return out;
}

StabilizerTableau apply_lc_unitary(const StabilizerTableau &t, const Graph &g, size_t v) {
    if (v >= t.n || g.n != t.n) {
        throw std::invalid_argument("apply_lc_unitary: vertex out of range or size mismatch");
    }
    // Single-qubit conjugation tables.
    //   centre v (exp(-i pi/4 X)):   X -> X,  Z -> -Y, Y -> Z
    //   neighbour j (exp(i pi/4 Z)): X -> Y,  Z -> Z,  Y -> -X
    StabilizerTableau out;
    out.n = t.n;
    out.generators.reserve(t.generators.size());
    uint64_t nb = g.adj[v];
    for (PauliString p : t.generators) {
        uint64_t affected = nb | (uint64_t{1} << v);
        for (uint64_t m = affected; m; m &= m - 1) {
            size_t q = static_cast<size_t>(std::countr_zero(m));
            uint64_t bit = uint64_t{1} << q;
            bool x = p.x_bits & bit, z = p.z_bits & bit;
            if (!x && !z) {
                continue;
            }
            bool nx, nz, flip;
            if (q == v) {
                if (x && z) {        // Y -> Z
                    nx = false, nz = true, flip = false;
                } else if (x) {      // X -> X
                    nx = true, nz = false, flip = false;
                } else {             // Z -> -Y
                    nx = true, nz = true, flip = true;
                }
            } else {
                if (x && z) {        // Y -> -X
                    nx = true, nz = false, flip = true;
                } else if (x) {      // X -> Y
                    nx = true, nz = true, flip = false;
                } else {             // Z -> Z
                    nx = false, nz = true, flip = false;
                }
            }
            p.x_bits = (p.x_bits & ~bit) | (nx ? bit : 0);
            p.z_bits = (p.z_bits & ~bit) | (nz ? bit : 0);
            p.negative ^= flip;
        }
        out.generators.push_back(p);
    }
    return out;
}

GraphStateIndex read_graph_index(const StabilizerTableau &t, const Graph &g) {
    if (g.n != t.n) {
        throw std::invalid_argument("read_graph_index: size mismatch");
    }
    GraphStateIndex k;
    k.n = g.n;
    StabilizerTableau graph_gens = generators_of(g);
    for (size_t i = 0; i < g.n; i++) {
        const PauliString &ki = graph_gens.generators[i];
        for (const auto &gen : t.generators) {
            if (!gen.commutes_with(ki)) {
                throw std::logic_error("read_graph_index: state is not a basis state of g");
            }
        }
        auto sign = deterministic_sign(t, ki);
        if (!sign) {
            throw std::logic_error("read_graph_index: state is not a basis state of g");
        }
        if (*sign == -1) {
            k.bits |= uint64_t{1} << i;
        }
    }
    return k;
}

}  // namespace graphstate
