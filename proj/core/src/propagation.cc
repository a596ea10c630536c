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

#include "tesseract/propagation.h"

#include <algorithm>

using namespace tess;

PauliString PauliFrame::to_pauli() const {
    PauliString p(x.size());
    for (size_t q = 0; q < x.size(); q++) {
        p.xs.set(q, x[q]);
        p.zs.set(q, z[q]);
    }
    return p;
}

void PauliFrame::permute(const std::vector<uint32_t> &pairs) {
    std::vector<uint8_t> ox(pairs.size() / 2), oz(pairs.size() / 2);
    for (size_t k = 0; k + 1 < pairs.size(); k += 2) {
        ox[k / 2] = x[pairs[k]];
        oz[k / 2] = z[pairs[k]];
    }
    for (size_t k = 0; k + 1 < pairs.size(); k += 2) {
        x[pairs[k + 1]] = ox[k / 2];
        z[pairs[k + 1]] = oz[k / 2];
    }
}

Propagation tess::conjugate_through(const Circuit &circuit, const std::vector<FaultEvent> &faults) {
    PauliFrame frame(circuit.num_qubits());
    BitVec flips(circuit.num_measurements());
    if (faults.empty()) {
        return {frame.to_pauli(), flips};
    }
    FaultSchedule sched(circuit.size(), faults);
    size_t first = circuit.size();
    for (const auto &f : faults) {
        first = std::min<size_t>(first, f.op);
    }
    for (size_t k = first; k < circuit.size(); k++) {
        for (const auto &f : sched.before[k]) {
            frame.apply(f);
        }
        frame.step(circuit[k], flips);
        if (sched.flip[k]) {
            flips.flip(circuit[k].record);
        }
        for (const auto &f : sched.after[k]) {
            frame.apply(f);
        }
    }
    return {frame.to_pauli(), flips};
}

Propagation tess::conjugate_through(const Circuit &circuit, const FaultEvent &fault) {
    return conjugate_through(circuit, std::vector<FaultEvent>{fault});
}

std::vector<FaultEvent> tess::enumerate_fault_locations(const Circuit &circuit, size_t begin, size_t end) {
    std::vector<FaultEvent> out;
    end = std::min(end, circuit.size());
    for (size_t k = begin; k < end; k++) {
        const auto &op = circuit[k];
        uint32_t i = (uint32_t)k;
        if (op.gate == Gate::CNOT) {
            for (uint8_t a = 0; a < 4; a++) {
                for (uint8_t b = 0; b < 4; b++) {
                    if (a || b) {
                        out.push_back(FaultEvent::pauli2(i, op.targets[0], a, op.targets[1], b));
                    }
                }
            }
        } else if (is_single_qubit_unitary(op.gate)) {
            for (uint8_t a = 1; a < 4; a++) {
                out.push_back(FaultEvent::pauli1(i, op.targets[0], a));
            }
        } else if (op.gate == Gate::RESET_Z) {
            out.push_back(FaultEvent::pauli1(i, op.targets[0], 1));
        } else if (op.gate == Gate::RESET_X) {
            out.push_back(FaultEvent::pauli1(i, op.targets[0], 3));
        } else if (is_measurement(op.gate)) {
            out.push_back(FaultEvent::flip(i));
        }
    }
    return out;
}
