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

#ifndef TESSERACT_PROPAGATION_H
#define TESSERACT_PROPAGATION_H

#include <algorithm>
#include <cstdint>
#include <vector>

#include "tesseract/bitvec.h"
#include "tesseract/circuit.h"
#include "tesseract/fault.h"
#include "tesseract/pauli.h"

namespace tess {

/// Pauli frame over the qubits of a circuit, one byte per qubit and component.
struct PauliFrame {
    std::vector<uint8_t> x;
    std::vector<uint8_t> z;

    explicit PauliFrame(size_t n = 0) : x(n, 0), z(n, 0) {
    }
    void clear() {
        std::fill(x.begin(), x.end(), 0);
        std::fill(z.begin(), z.end(), 0);
    }
    void apply(uint32_t q, uint8_t pauli) {
        x[q] ^= pauli == 1 || pauli == 2;
        z[q] ^= pauli == 2 || pauli == 3;
    }
    void apply(const FaultEvent &f) {
        apply(f.qubits[0], f.paulis[0]);
        apply(f.qubits[1], f.paulis[1]);
    }
    PauliString to_pauli() const;

    /// Conjugates the frame through one instruction. Measurement outcomes that the frame would flip are
    /// toggled in `flips`. Resets clear the frame on their qubit.
    void step(const Instruction &op, BitVec &flips) {
        const auto &t = op.targets;
        switch (op.gate) {
            case Gate::H:
                std::swap(x[t[0]], z[t[0]]);
                break;
            case Gate::S:
                z[t[0]] ^= x[t[0]];
                break;
            case Gate::CNOT:
                x[t[1]] ^= x[t[0]];
                z[t[0]] ^= z[t[1]];
                break;
            case Gate::PERM:
                permute(t);
                break;
            case Gate::RESET_Z:
            case Gate::RESET_X:
                x[t[0]] = 0;
                z[t[0]] = 0;
                break;
            case Gate::MEAS_Z:
                if (x[t[0]]) {
                    flips.flip(op.record);
                }
                break;
            case Gate::MEAS_X:
                if (z[t[0]]) {
                    flips.flip(op.record);
                }
                break;
            default:
                break;
        }
    }
    void permute(const std::vector<uint32_t> &pairs);
};

struct Propagation {
    PauliString residual;
    BitVec flipped;
};

/// Pushes the faults forward through the rest of the circuit. A record is flipped iff the propagated
/// Pauli anticommutes with the measured observable (or a FLIP fault targets it). The residual is the frame
/// left at the end of the circuit.
Propagation conjugate_through(const Circuit &circuit, const std::vector<FaultEvent> &faults);
Propagation conjugate_through(const Circuit &circuit, const FaultEvent &fault);

/// Every single fault of the circuit-level alphabet on instructions [begin, end): the 15 non-identity
/// two-qubit Paulis after each CNOT, the 3 Paulis after each single-qubit gate, the orthogonal flip after
/// each reset and a record flip on each measurement.
std::vector<FaultEvent> enumerate_fault_locations(const Circuit &circuit, size_t begin = 0, size_t end = SIZE_MAX);

}  // namespace tess

#endif
