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

#include "graphstate/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace graphstate {

PauliString PauliString::identity(size_t n) {
    PauliString p;
    p.n = n;
    return p;
}

PauliString PauliString::single_x(size_t n, size_t qubit) {
    if (qubit >= n) {
        throw std::invalid_argument("single_x: qubit out of range");
    }
    PauliString p;
    p.n = n;
    p.x_bits = uint64_t{1} << qubit;
    return p;
}

PauliString PauliString::single_z(size_t n, size_t qubit) {
    if (qubit >= n) {
        throw std::invalid_argument("single_z: qubit out of range");
    }
    PauliString p;
    p.n = n;
    p.z_bits = uint64_t{1} << qubit;
    return p;
}

bool PauliString::commutes_with(const PauliString &other) const {
    uint64_t cross = (x_bits & other.z_bits) ^ (z_bits & other.x_bits);
    return (std::popcount(cross) & 1) == 0;
}

std::string PauliString::str() const {
    std::string out;
    out.reserve(n + 1);
    out.push_back(negative ? '-' : '+');
    for (size_t q = 0; q < n; q++) {
        bool x = (x_bits >> q) & 1;
        bool z = (z_bits >> q) & 1;
        out.push_back(x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I'));
    }
    return out;
}

PauliString PauliString::parse(const std::string &text) {
    if (text.empty() || (text[0] != '+' && text[0] != '-')) {
        throw std::invalid_argument("PauliString::parse: must start with '+' or '-'");
    }
    PauliString p;
    p.negative = text[0] == '-';
    p.n = text.size() - 1;
    if (p.n < 1 || p.n > 64) {
        throw std::invalid_argument("PauliString::parse: bad length");
    }
    for (size_t q = 0; q < p.n; q++) {
        uint64_t bit = uint64_t{1} << q;
        switch (text[q + 1]) {
            case 'I':
                break;
            case 'X':
                p.x_bits |= bit;
                break;
            case 'Y':
                p.x_bits |= bit;
                p.z_bits |= bit;
                break;
            case 'Z':
                p.z_bits |= bit;
                break;
            default:
                throw std::invalid_argument("PauliString::parse: bad letter");
        }
    }
    return p;
}

PauliString pauli_product(const PauliString &a, const PauliString &b) {
    if (a.n != b.n) {
        throw std::invalid_argument("pauli_product: size mismatch");
    }
    // Accumulate the power of i picked up qubit by qubit when multiplying
    // the Hermitian single-qubit factors.
    int phase = (a.negative ? 2 : 0) + (b.negative ? 2 : 0);
    for (size_t q = 0; q < a.n; q++) {
        int x1 = (a.x_bits >> q) & 1, z1 = (a.z_bits >> q) & 1;
        int x2 = (b.x_bits >> q) & 1, z2 = (b.z_bits >> q) & 1;
        if (x1 && z1) {
            phase += z2 - x2;
        } else if (x1) {
            phase += z2 * (2 * x2 - 1);
        } else if (z1) {
            phase += x2 * (1 - 2 * z2);
        }
    }
    phase = ((phase % 4) + 4) % 4;
    if (phase & 1) {
        throw std::logic_error("pauli_product: anticommuting factors give an imaginary phase");
    }
    PauliString out;
    out.n = a.n;
    out.x_bits = a.x_bits ^ b.x_bits;
    out.z_bits = a.z_bits ^ b.z_bits;
    out.negative = phase == 2;
    return out;
}

}  // namespace graphstate
