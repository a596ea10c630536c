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

#ifndef TESSERACT_FRAME_SAMPLER_H
#define TESSERACT_FRAME_SAMPLER_H

#include <cstdint>
#include <vector>

#include "tesseract/bitvec.h"
#include "tesseract/fault.h"
#include "tesseract/noise.h"
#include "tesseract/propagation.h"

namespace tess {

/// Monte Carlo sampler: a noiseless reference record from the tableau simulator, XORed with the
/// measurement flips of a Pauli frame carrying the sampled faults. The frame gets a random Z after Z-basis
/// resets and measurements (and a random X after X-basis ones) so random outcomes are sampled uniformly.
class FrameSampler {
   public:
    FrameSampler(const NoisyCircuit &model, uint64_t reference_seed);

    const BitVec &reference() const {
        return reference_;
    }
    const NoisyCircuit &model() const {
        return model_;
    }

    /// Per-worker scratch space, reused between shots.
    struct Scratch {
        PauliFrame frame;
        BitVec flips;
        std::vector<FaultEvent> faults;
    };
    Scratch make_scratch() const;

    /// Samples one shot: faults from the noise model, then the record. `scratch.faults` holds the faults.
    void sample(uint64_t seed, uint64_t shot, Scratch &scratch, BitVec &record) const;
    /// Record for an explicit fault list (sorted by instruction index or not).
    void sample_with_faults(
        const std::vector<FaultEvent> &faults, uint64_t seed, uint64_t shot, Scratch &scratch, BitVec &record) const;

   private:
    void run(const std::vector<FaultEvent> &sorted, uint64_t seed, uint64_t shot, Scratch &scratch, BitVec &record) const;

    const NoisyCircuit &model_;
    BitVec reference_;
};

}  // namespace tess

#endif
