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

#ifndef TESSERACT_NOISE_H
#define TESSERACT_NOISE_H

#include <cstdint>
#include <string>
#include <vector>

#include "tesseract/circuit.h"
#include "tesseract/fault.h"

namespace tess {

struct NoiseParams {
    double p1 = 2.9e-5;
    double p2 = 1.15e-3;
    double p_spam = 1.47e-3;
    double p_mem = 2.5e-4;
    /// Fraction of p_spam assigned to measurement flips; the rest goes to reset flips.
    double spam_measure_fraction = 0.5;
    bool noisy_permutations = false;

    static NoiseParams h2();
    static NoiseParams zero();
    NoiseParams scaled(double factor) const;
    /// Throws std::invalid_argument if a probability leaves [0, 1].
    void validate() const;

    std::string to_json() const;
    static NoiseParams from_json(const std::string &text);
    /// Applies comma separated `key=value` overrides, e.g. "p2=1e-3,p_mem=0". The key `scale` multiplies
    /// every probability. Throws std::invalid_argument for unknown keys or malformed values.
    NoiseParams with_overrides(const std::string &text) const;
    /// Stable 64 bit fingerprint of the parameter values, printed as 16 hex digits.
    std::string hash() const;
};

enum class Channel : uint8_t {
    DEPOLARIZE1,
    DEPOLARIZE2,
    X_ERROR,
    Z_ERROR,
    RECORD_FLIP,
};

/// One independent fault location. The channel acts right after instruction `op` (a RECORD_FLIP inverts
/// the record of measurement `op`).
struct NoiseSite {
    uint32_t op;
    Channel channel;
    uint32_t q0;
    uint32_t q1;
    double p;
};

class NoisyCircuit {
   public:
    NoisyCircuit(Circuit circuit, std::vector<NoiseSite> sites);

    const Circuit &circuit() const {
        return circuit_;
    }
    const std::vector<NoiseSite> &sites() const {
        return sites_;
    }
    /// Sum of the site probabilities, the expected number of faults per shot.
    double expected_faults() const;
    /// Independent Bernoulli draw per site keyed by (seed, shot). Output is ordered by instruction index.
    void sample_faults(uint64_t seed, uint64_t shot, std::vector<FaultEvent> &out) const;
    std::vector<FaultEvent> sample_faults(uint64_t seed, uint64_t shot) const {
        std::vector<FaultEvent> out;
        sample_faults(seed, shot, out);
        return out;
    }

   private:
    Circuit circuit_;
    std::vector<NoiseSite> sites_;
};

/// Attaches the circuit-level channels: DEPOLARIZE2(p2) after CNOTs, DEPOLARIZE1(p1) after single-qubit
/// gates, reset and record flips splitting p_spam, and DEPOLARIZE1(p_mem) on every live qubit left idle in
/// a layer. A qubit is live from its first instruction until its last measurement and between a
/// measurement and the next reset it is not live. The circuit must be scheduled.
NoisyCircuit instrument(const Circuit &circuit, const NoiseParams &params);

}  // namespace tess

#endif
