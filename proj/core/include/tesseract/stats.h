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

#ifndef TESSERACT_STATS_H
#define TESSERACT_STATS_H

#include <cstdint>
#include <string>
#include <utility>

namespace tess {

/// Exact binomial (Clopper-Pearson) interval for `successes` out of `trials` at two-sided confidence
/// `level`. Throws std::invalid_argument if trials == 0 or successes > trials.
std::pair<double, double> confidence_interval(uint64_t successes, uint64_t trials, double level = 0.683);

/// Outcome counts of a Monte Carlo campaign for one plan and setting.
struct TrialStats {
    std::string experiment;
    std::string basis = "-";
    uint64_t trials = 0;
    uint64_t prerejected = 0;
    uint64_t postrejected = 0;
    uint64_t accepted = 0;
    uint64_t errors = 0;
    double acceptance_rate = 0;
    double error_rate = 0;
    double ci_low = 0;
    double ci_high = 0;
    double confidence = 0.683;
    uint64_t seed = 0;
    std::string params_hash;

    /// Fills the rates and the interval from the counts.
    void finish();
    /// Adds the counts of another run of the same plan (seed and hash are kept).
    void merge_counts(const TrialStats &other);
    bool operator==(const TrialStats &other) const = default;
};

}  // namespace tess

#endif
