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

#include "tesseract/verifier.h"

#include <algorithm>

#include "gtest/gtest.h"
#include "tesseract/frame_sampler.h"
#include "tesseract/noise.h"
#include "tesseract/tableau.h"
#include "tesseract/targets.h"

using namespace tess;

namespace {

Tally run(const std::string &name, int order, uint64_t sample = 0) {
    auto t = build_target(name);
    VerifyOptions opt;
    opt.order = order;
    opt.regions = t.fault_regions;
    opt.sample_pairs = sample;
    return enumerate_faults(t.program, opt);
}

}  // namespace

TEST(verifier, target_catalog) {
    const auto &names = target_names();
    EXPECT_EQ(names.size(), 25u);
    for (const auto &n : order2_target_names()) {
        EXPECT_NE(std::find(names.begin(), names.end(), n), names.end()) << n;
    }
    EXPECT_THROW(build_target("nope"), std::invalid_argument);
    EXPECT_EQ(build_target("ec_round/X").name, "ec_round/X");
}

TEST(verifier, single_faults_never_fail) {
    for (const auto &name : target_names()) {
        auto t = run(name, 1);
        EXPECT_GT(t.total, 0u) << name;
        EXPECT_EQ(t.count(FaultClass::LOGICAL_ERROR), 0u) << name;
        EXPECT_EQ(t.count(FaultClass::POST_REJECTED), 0u) << name;
        EXPECT_EQ(t.total, t.counts[0] + t.counts[1] + t.counts[2] + t.counts[3]);
    }
}

TEST(verifier, ec_round_fault_pairs) {
    for (std::string name : {"ec_round/X", "ec_round/Z"}) {
        auto t = run(name, 2);
        EXPECT_EQ(t.count(FaultClass::LOGICAL_ERROR), 0u) << name;
        EXPECT_EQ(t.total, t.locations * (t.locations - 1) / 2);
    }
}

TEST(verifier, sampled_pairs) {
    auto t = run("path4/X", 2, 2000);
    EXPECT_TRUE(t.sampled);
    EXPECT_EQ(t.total, 2000u);
    EXPECT_EQ(t.count(FaultClass::LOGICAL_ERROR), 0u);
}

TEST(verifier, region_filter) {
    auto t = build_target("ec_round/X");
    VerifyOptions opt;
    opt.order = 1;
    // No instruction is tagged with the default region, so there is nothing to inject.
    opt.regions = {"main"};
    auto none = enumerate_faults(t.program, opt);
    EXPECT_EQ(none.locations, 0u);
    EXPECT_EQ(none.total, 0u);
    opt.regions = {"read"};
    auto read = enumerate_faults(t.program, opt);
    EXPECT_GT(read.total, 0u);
    EXPECT_EQ(read.count(FaultClass::LOGICAL_ERROR), 0u);
    opt.regions = {"no-such-region"};
    EXPECT_THROW(enumerate_faults(t.program, opt), std::invalid_argument);
}

TEST(verifier, budget) {
    auto t = build_target("cat12/X");
    VerifyOptions opt;
    opt.order = 2;
    opt.max_locations = 10;
    EXPECT_THROW(enumerate_faults(t.program, opt), BudgetExceeded);
}

TEST(verifier, nonft_measurement_fails_at_order_one) {
    auto r = check_w4_contract(Basis::X, Flavor::NON_FT);
    EXPECT_GT(r.violations, 0u);
    EXPECT_FALSE(r.first_violation.empty());
}

TEST(verifier, classify) {
    DecodeResult r;
    EXPECT_EQ(classify(r), FaultClass::ACCEPTED_CORRECT);
    r.logical_error = true;
    EXPECT_EQ(classify(r), FaultClass::LOGICAL_ERROR);
    r.verdict = Verdict::PRE_REJECTED;
    EXPECT_EQ(classify(r), FaultClass::PRE_REJECTED);
    r.verdict = Verdict::POST_REJECTED;
    EXPECT_EQ(classify(r), FaultClass::POST_REJECTED);
}

// The verifier's propagated flips must agree with the Monte Carlo sampler on the same faults.
TEST(verifier, agrees_with_sampler) {
    auto t = build_target("path4/Z");
    const auto &program = t.program;
    auto model = instrument(program.circuit, NoiseParams::h2().scaled(20));
    FrameSampler sampler(model, 0);
    auto scratch = sampler.make_scratch();
    BitVec rec(program.circuit.num_measurements());
    int compared = 0;
    for (uint64_t shot = 0; shot < 2000; shot++) {
        sampler.sample(8, shot, scratch, rec);
        auto faults = scratch.faults;
        auto full = simulate(program.circuit, faults, 0, 0, &rec);
        // Forced outcomes reproduce the sample exactly when it is consistent with a real execution.
        ASSERT_TRUE(full.consistent) << shot;
        compared++;
    }
    EXPECT_EQ(compared, 2000);
}
