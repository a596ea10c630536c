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

#include "gtest/gtest.h"
#include "tesseract/experiments.h"
#include "tesseract/rng.h"
#include "tesseract/tableau.h"

using namespace tess;

TEST(propagation, cnot_spreads_x_forward) {
    Circuit c(2);
    c.cnot(0, 1);
    c.measure_z(0);
    c.measure_z(1);
    auto p = conjugate_through(c, FaultEvent::pauli1(0, 0, 1, true));
    EXPECT_EQ(p.flipped.str(), "11");
    EXPECT_EQ(p.residual, PauliString::from_str("XX"));

    auto q = conjugate_through(c, FaultEvent::pauli1(0, 1, 1, true));
    EXPECT_EQ(q.flipped.str(), "01");
}

TEST(propagation, cnot_spreads_z_backward) {
    Circuit c(2);
    c.cnot(0, 1);
    c.measure_x(0);
    c.measure_x(1);
    auto p = conjugate_through(c, FaultEvent::pauli1(0, 1, 3, true));
    EXPECT_EQ(p.flipped.str(), "11");
}

TEST(propagation, z_commutes_with_z_measurement) {
    Circuit c(1);
    c.measure_z(0);
    auto p = conjugate_through(c, FaultEvent::pauli1(0, 0, 3, true));
    EXPECT_TRUE(p.flipped.none());
    auto y = conjugate_through(c, FaultEvent::pauli1(0, 0, 2, true));
    EXPECT_EQ(y.flipped.str(), "1");
}

TEST(propagation, flip_and_reset) {
    Circuit c(1);
    c.h(0);
    c.reset_z(0);
    c.measure_z(0);
    EXPECT_TRUE(conjugate_through(c, FaultEvent::pauli1(0, 0, 1)).flipped.none());
    EXPECT_EQ(conjugate_through(c, FaultEvent::flip(2)).flipped.str(), "1");
    EXPECT_EQ(conjugate_through(c, FaultEvent::pauli1(1, 0, 1)).flipped.str(), "1");
}

TEST(propagation, hadamard_and_phase) {
    Circuit c(1);
    c.h(0);
    c.s(0);
    c.measure_x(0);
    // X before H becomes Z, S keeps Z, and Z flips an X measurement.
    EXPECT_EQ(conjugate_through(c, FaultEvent::pauli1(0, 0, 1, true)).flipped.str(), "1");
    // Z before H becomes X, S maps X to Y, and Y flips an X measurement.
    EXPECT_EQ(conjugate_through(c, FaultEvent::pauli1(0, 0, 3, true)).flipped.str(), "1");
}

TEST(propagation, fault_location_alphabet) {
    Circuit c(2);
    c.reset_z(0);
    c.h(1);
    c.cnot(0, 1);
    c.measure_z(1);
    auto locs = enumerate_fault_locations(c);
    EXPECT_EQ(locs.size(), 1u + 3u + 15u + 1u);
}

// A fault's effect on the record computed by frame propagation must match a full tableau simulation in
// which the random outcomes are forced to the reference values.
TEST(propagation, agrees_with_tableau) {
    for (std::string name : {"path4-enc", "cube8-enc", "rep-ec-4"}) {
        auto e = build_plan(name, plan_settings(name)[0], PlanOptions{.rounds = 1});
        const Circuit &c = e.program.circuit;
        auto ref = simulate(c, {}, 5);
        auto locs = enumerate_fault_locations(c);
        KeyedRng rng(9, 0);
        for (int t = 0; t < 300; t++) {
            std::vector<FaultEvent> faults{locs[rng.below((uint32_t)locs.size())]};
            if (t % 2) {
                faults.push_back(locs[rng.below((uint32_t)locs.size())]);
            }
            auto p = conjugate_through(c, faults);
            BitVec expected = ref.record ^ p.flipped;
            auto r = simulate(c, faults, 5, 0, &expected);
            ASSERT_TRUE(r.consistent) << name << " " << faults[0].str();
            ASSERT_EQ(r.record, expected);
        }
    }
}

TEST(propagation, frame_step_matches_conjugate_through) {
    auto e = build_plan("path4-enc", Basis::X);
    const Circuit &c = e.program.circuit;
    auto locs = enumerate_fault_locations(c);
    for (size_t k = 0; k < locs.size(); k += 37) {
        const auto &f = locs[k];
        PauliFrame frame(c.num_qubits());
        BitVec flips(c.num_measurements());
        for (size_t i = 0; i < c.size(); i++) {
            if (f.kind == FaultEvent::PAULI && f.op == i && f.before) {
                frame.apply(f);
            }
            frame.step(c[i], flips);
            if (f.op == i) {
                if (f.kind == FaultEvent::FLIP) {
                    flips.flip(c[i].record);
                } else if (!f.before) {
                    frame.apply(f);
                }
            }
        }
        EXPECT_EQ(flips, conjugate_through(c, f).flipped) << f.str();
    }
}
