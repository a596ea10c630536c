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

#include "tesseract/stats.h"

#include <boost/math/distributions/beta.hpp>
#include <stdexcept>

using namespace tess;

std::pair<double, double> tess::confidence_interval(uint64_t k, uint64_t n, double level) {
    if (n == 0) {
        throw std::invalid_argument("confidence interval needs at least one trial");
    }
    if (k > n) {
        throw std::invalid_argument("more successes than trials");
    }
    if (!(level > 0 && level < 1)) {
        throw std::invalid_argument("confidence level must lie in (0, 1)");
    }
    double alpha = 1 - level;
    double lo = 0;
    double hi = 1;
    if (k > 0) {
        boost::math::beta_distribution<double> b((double)k, (double)(n - k + 1));
        lo = boost::math::quantile(b, alpha / 2);
    }
    if (k < n) {
        boost::math::beta_distribution<double> b((double)(k + 1), (double)(n - k));
        hi = boost::math::quantile(b, 1 - alpha / 2);
    }
    return {lo, hi};
}

void TrialStats::finish() {
    acceptance_rate = trials == 0 ? 0 : (double)accepted / (double)trials;
    error_rate = accepted == 0 ? 0 : (double)errors / (double)accepted;
    if (accepted > 0) {
        auto [lo, hi] = confidence_interval(errors, accepted, confidence);
        ci_low = lo;
        ci_high = hi;
    } else {
        ci_low = 0;
        ci_high = 1;
    }
}

void TrialStats::merge_counts(const TrialStats &o) {
    trials += o.trials;
    prerejected += o.prerejected;
    postrejected += o.postrejected;
    accepted += o.accepted;
    errors += o.errors;
    finish();
}
