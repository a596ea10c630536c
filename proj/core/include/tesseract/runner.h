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

#ifndef TESSERACT_RUNNER_H
#define TESSERACT_RUNNER_H

#include <cstdint>

#include "tesseract/experiments.h"
#include "tesseract/noise.h"
#include "tesseract/stats.h"

namespace tess {

struct RunOptions {
    uint64_t shots = 1000;
    uint64_t seed = 1;
    NoiseParams params;
    /// Worker threads; 0 uses the hardware concurrency. Results do not depend on this.
    int threads = 0;
    double confidence = 0.683;
};

/// Monte Carlo campaign: shot s samples faults keyed by (seed, s), draws the record with the frame
/// sampler and decodes it. Every shot lands in exactly one of prerejected, postrejected, accepted.
TrialStats run_plan(const ExperimentPlan &plan, const RunOptions &options);

}  // namespace tess

#endif
