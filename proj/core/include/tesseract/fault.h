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

#ifndef TESSERACT_FAULT_H
#define TESSERACT_FAULT_H

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace tess {

/// A single fault attached to instruction `op`. PAULI faults apply `paulis[k]` (0 = I, 1 = X, 2 = Y, 3 = Z)
/// to `qubits[k]` just before or just after the instruction. FLIP faults invert the record written by the
/// measurement instruction `op`.
struct FaultEvent {
    enum Kind : uint8_t { PAULI, FLIP };

    uint32_t op = 0;
    Kind kind = PAULI;
    bool before = false;
    std::array<uint32_t, 2> qubits{0, 0};
    std::array<uint8_t, 2> paulis{0, 0};

    static FaultEvent pauli1(uint32_t op, uint32_t q, uint8_t p, bool before = false) {
        FaultEvent f;
        f.op = op;
        f.before = before;
        f.qubits = {q, q};
        f.paulis = {p, 0};
        return f;
    }
    static FaultEvent pauli2(uint32_t op, uint32_t q0, uint8_t p0, uint32_t q1, uint8_t p1) {
        FaultEvent f;
        f.op = op;
        f.qubits = {q0, q1};
        f.paulis = {p0, p1};
        return f;
    }
    static FaultEvent flip(uint32_t op) {
        FaultEvent f;
        f.op = op;
        f.kind = FLIP;
        return f;
    }

    std::string str() const;
    bool operator==(const FaultEvent &other) const = default;
};

/// Faults grouped by instruction index for quick lookup while stepping through a circuit.
struct FaultSchedule {
    explicit FaultSchedule(size_t num_ops, const std::vector<FaultEvent> &faults);
    std::vector<std::vector<FaultEvent>> before;
    std::vector<std::vector<FaultEvent>> after;
    std::vector<uint8_t> flip;
};

}  // namespace tess

#endif
