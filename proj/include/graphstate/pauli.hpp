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

#ifndef GRAPHSTATE_PAULI_H
#define GRAPHSTATE_PAULI_H

#include <cstdint>
#include <string>

namespace graphstate {

/// n-qubit Pauli operator in binary symplectic form with a real sign.
/// Bit i of x_bits/z_bits gives the X/Z component on qubit i; both set
/// means the Hermitian Y. The represented operator is
/// (-1)^negative * W_0 ... W_{n-1}; phases +-i never arise for the
/// operators built here.
struct PauliString {
    size_t n = 0;
    uint64_t x_bits = 0;
    uint64_t z_bits = 0;
    bool negative = false;

    static PauliString identity(size_t n);
    static PauliString single_x(size_t n, size_t qubit);
    static PauliString single_z(size_t n, size_t qubit);

    int sign() const { return negative ? -1 : +1; }
    bool commutes_with(const PauliString &other) const;

    /// Text form "+XZI" / "-ZXZ": sign then one letter per qubit, qubit 0
    /// first.
    std::string str() const;
    static PauliString parse(const std::string &text);

    friend bool operator==(const PauliString &a, const PauliString &b) = default;
};

/// Product a*b. Throws if the result would carry a +-i phase (the two
/// operators anticommute); callers in this codebase only multiply
/// commuting Paulis.
PauliString pauli_product(const PauliString &a, const PauliString &b);

}  // namespace graphstate

#endif
