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

#ifndef TESSERACT_RNG_H
#define TESSERACT_RNG_H

#include <cstdint>

namespace tess {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Counter based generator: the k-th draw of shot s under seed `seed` depends only on (seed, s, k),
/// so shots can be simulated in any order or on any thread.
class KeyedRng {
   public:
    KeyedRng(uint64_t seed, uint64_t stream) : key_(splitmix64(splitmix64(seed) ^ (stream * 0xD1B54A32D192ED03ULL))) {
    }

    uint64_t next() {
        return splitmix64(key_ ^ splitmix64(counter_++));
    }
    /// Uniform double in [0, 1).
    double uniform() {
        return (double)(next() >> 11) * 0x1.0p-53;
    }
    bool coin() {
        return next() & 1;
    }
    bool bernoulli(double p) {
        return uniform() < p;
    }
    /// Uniform integer in [0, n).
    uint32_t below(uint32_t n) {
        return (uint32_t)(((next() >> 32) * (uint64_t)n) >> 32);
    }
    uint64_t counter() const {
        return counter_;
    }
    void seek(uint64_t counter) {
        counter_ = counter;
    }

   private:
    uint64_t key_;
    uint64_t counter_ = 0;
};

}  // namespace tess

#endif
