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

#include "tesseract/frame_sampler.h"

#include <algorithm>

#include "tesseract/rng.h"
#include "tesseract/tableau.h"

using namespace tess;

FrameSampler::FrameSampler(const NoisyCircuit &model, uint64_t reference_seed) : model_(model) {
    reference_ = simulate(model.circuit(), {}, reference_seed).record;
}

FrameSampler::Scratch FrameSampler::make_scratch() const {
    Scratch s;
    s.frame = PauliFrame(model_.circuit().num_qubits());
    s.flips = BitVec(model_.circuit().num_measurements());
    return s;
}

void FrameSampler::sample(uint64_t seed, uint64_t shot, Scratch &scratch, BitVec &record) const {
    model_.sample_faults(seed, shot, scratch.faults);
    run(scratch.faults, seed, shot, scratch, record);
}

void FrameSampler::sample_with_faults(
    const std::vector<FaultEvent> &faults, uint64_t seed, uint64_t shot, Scratch &scratch, BitVec &record) const {
    std::vector<FaultEvent> sorted = faults;
    std::stable_sort(sorted.begin(), sorted.end(), [](const FaultEvent &a, const FaultEvent &b) {
        return a.op < b.op;
    });
    run(sorted, seed, shot, scratch, record);
}

void FrameSampler::run(
    const std::vector<FaultEvent> &sorted, uint64_t seed, uint64_t shot, Scratch &scratch, BitVec &record) const {
    const Circuit &c = model_.circuit();
    auto &frame = scratch.frame;
    auto &flips = scratch.flips;
    frame.clear();
    flips.clear();
    KeyedRng gauge(seed ^ 0x6761756765ULL, shot);
    size_t next = 0;
    for (size_t k = 0; k < c.size(); k++) {
        const auto &op = c[k];
        size_t j = next;
        while (j < sorted.size() && sorted[j].op == k) {
            if (sorted[j].kind == FaultEvent::PAULI && sorted[j].before) {
                frame.apply(sorted[j]);
            }
            j++;
        }
        frame.step(op, flips);
        switch (op.gate) {
            case Gate::RESET_Z:
            case Gate::MEAS_Z:
                gauge.seek(k);
                frame.z[op.targets[0]] ^= gauge.coin();
                break;
            case Gate::RESET_X:
            case Gate::MEAS_X:
                gauge.seek(k);
                frame.x[op.targets[0]] ^= gauge.coin();
                break;
            default:
                break;
        }
        for (; next < j; next++) {
            const auto &f = sorted[next];
            if (f.kind == FaultEvent::FLIP) {
                flips.flip(op.record);
            } else if (!f.before) {
                frame.apply(f);
            }
        }
    }
    record = reference_;
    record ^= flips;
}
