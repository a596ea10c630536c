// Copyright 2026 The Tesseract Lab Authors
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

#ifndef TESSERACT_PAULI_H
#define TESSERACT_PAULI_H

#include <cstdint>
#include <string>

#include "tesseract/bitvec.h"

namespace tess {

/// A Hermitian Pauli product `sign * P_0 P_1 ... P_{n-1}` in the (x, z) symplectic representation.
/// Qubit k carries X if x[k] && !z[k], Z if z[k] && !x[k] and Y if both are set.
struct PauliString {
    BitVec xs;
    BitVec zs;
    bool sign = false;

    PauliString() = default;
    explicit PauliString(size_t num_qubits) : xs(num_qubits), zs(num_qubits) {
    }

    size_t num_qubits() const {
        return xs.size();
    }
    /// Parses strings like "+XZ_Y" or "-IXXI". The sign prefix is optional.
    static PauliString from_str(const std::string &text);
    static PauliString from_supports(size_t num_qubits, const BitVec &x, const BitVec &z);
    std::string str() const;

    /// 0 = I, 1 = X, 2 = Y, 3 = Z.
    uint8_t get(size_t q) const;
    void set(size_t q, uint8_t pauli);
    char get_char(size_t q) const;

    size_t weight() const;
    bool commutes(const PauliString &other) const;

    /// Replaces this with `this * rhs` and returns the exponent k of the scalar i^k produced by the product.
    /// The returned exponent already accounts for `rhs.sign`, while `this->sign` is left untouched.
    uint8_t inplace_right_mul_returning_log_i(const PauliString &rhs);
    /// `this = this * rhs`. Throws std::domain_error if the operands anticommute.
    PauliString &operator*=(const PauliString &rhs);

    bool operator==(const PauliString &other) const = default;
};

/// Product of two commuting Pauli strings with its sign.
PauliString multiply(const PauliString &a, const PauliString &b);

}  // namespace tess

#endif
