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

#include "tesseract/tableau.h"

#include "gtest/gtest.h"
#include "tesseract/experiments.h"

using namespace tess;

namespace {

std::vector<PauliString> parse_all(const std::vector<std::string> &texts) {
    std::vector<PauliString> out;
    for (const auto &t : texts) {
        out.push_back(PauliString::from_str(t));
    }
    return out;
}

// State left by a plan's circuit with its measurements removed.
std::vector<PauliString> unmeasured_state(const std::string &plan) {
    auto e = build_plan(plan, Basis::Z);
    Circuit c(e.program.circuit.num_qubits());
    for (const auto &op : e.program.circuit.ops()) {
        if (!is_measurement(op.gate)) {
            c.append(op.gate, op.targets);
        }
    }
    TableauSimulator sim(c.num_qubits());
    simulate(c, {}, 1, 0, nullptr, &sim);
    std::vector<uint32_t> qs;
    for (uint32_t q = 0; q < c.num_qubits(); q++) {
        qs.push_back(q);
    }
    return stabilizer_group_of(sim, qs);
}

}  // namespace

TEST(tableau, single_qubit_gates) {
    TableauSimulator sim(1);
    EXPECT_EQ(sim.peek_expectation(PauliString::from_str("Z")), 1);
    sim.x(0);
    EXPECT_EQ(sim.peek_expectation(PauliString::from_str("Z")), -1);
    sim.h(0);
    EXPECT_EQ(sim.peek_expectation(PauliString::from_str("X")), -1);
    sim.s(0);
    EXPECT_EQ(sim.peek_expectation(PauliString::from_str("Y")), -1);
    sim.z(0);
    EXPECT_EQ(sim.peek_expectation(PauliString::from_str("Y")), 1);
    EXPECT_EQ(sim.peek_expectation(PauliString::from_str("Z")), 0);
}

TEST(tableau, measurement_determinism) {
    TableauSimulator sim(2);
    bool random = true;
    EXPECT_FALSE(sim.measure_z(0, true, &random));
    EXPECT_FALSE(random);
    sim.x(1);
    EXPECT_TRUE(sim.measure_z(1, false, &random));
    EXPECT_FALSE(random);
    EXPECT_TRUE(sim.measure_x(0, true, &random));
    EXPECT_TRUE(random);
    EXPECT_TRUE(sim.measure_x(0, false, &random));
    EXPECT_FALSE(random);
    sim.reset_z(0);
    EXPECT_EQ(sim.peek_expectation(PauliString::from_str("Z_")), 1);
    sim.reset_x(1);
    EXPECT_EQ(sim.peek_expectation(PauliString::from_str("_X")), 1);
}

TEST(tableau, bell_pairs) {
    Circuit c(2);
    c.h(0);
    c.cnot(0, 1);
    c.measure_z(0);
    c.measure_z(1);
    int ones = 0;
    const int shots = 1000;
    for (int shot = 0; shot < shots; shot++) {
        auto r = simulate(c, {}, 11, shot);
        ASSERT_EQ(r.record[0], r.record[1]);
        EXPECT_TRUE(r.random[0]);
        EXPECT_FALSE(r.random[1]);
        ones += r.record[0];
    }
    // 5 sigma around one half.
    EXPECT_NEAR(ones, shots / 2, 5 * 15.82);

    TableauSimulator sim(2);
    sim.h(0);
    sim.cnot(0, 1);
    EXPECT_EQ(sim.peek_expectation(PauliString::from_str("XX")), 1);
    EXPECT_EQ(sim.peek_expectation(PauliString::from_str("ZZ")), 1);
    EXPECT_EQ(sim.peek_expectation(PauliString::from_str("YY")), -1);
    EXPECT_EQ(sim.peek_expectation(PauliString::from_str("ZI")), 0);
}

TEST(tableau, pauli_measurement_collapses) {
    TableauSimulator sim(3);
    EXPECT_TRUE(sim.measure_pauli(PauliString::from_str("XXX"), true));
    EXPECT_EQ(sim.peek_expectation(PauliString::from_str("XXX")), -1);
    EXPECT_EQ(sim.peek_expectation(PauliString::from_str("ZZ_")), 1);
    sim.apply_pauli(PauliString::from_str("Z__"));
    EXPECT_EQ(sim.peek_expectation(PauliString::from_str("XXX")), 1);
}

TEST(tableau, permute_moves_state) {
    TableauSimulator sim(3);
    sim.x(0);
    sim.permute({0, 2, 2, 0});
    EXPECT_EQ(sim.peek_expectation(PauliString::from_str("__Z")), -1);
    EXPECT_EQ(sim.peek_expectation(PauliString::from_str("Z__")), 1);
}

TEST(tableau, canonical_generators_identify_groups) {
    auto a = canonical_generators(parse_all({"XX__", "_XX_", "__XX"}));
    auto b = canonical_generators(parse_all({"X_X_", "XX__", "X__X"}));
    EXPECT_EQ(a, b);
    auto c = canonical_generators(parse_all({"XX__", "_XX_", "-__XX"}));
    EXPECT_NE(a, c);
}

TEST(tableau, empty_circuit_state) {
    TableauSimulator sim(2);
    EXPECT_EQ(stabilizer_group_of(sim, {0, 1}), canonical_generators(parse_all({"Z_", "_Z"})));
    sim.h(0);
    sim.cnot(0, 1);
    EXPECT_TRUE(stabilizer_group_of(sim, {0}).empty());
}

TEST(tableau, baseline_states) {
    EXPECT_EQ(unmeasured_state("path4-base"), canonical_generators(parse_all({"XX__", "_XXX", "ZZZ_", "__ZZ"})));

    std::vector<std::string> cat;
    for (int k = 0; k < 11; k++) {
        std::string s(12, '_');
        s[k] = 'X';
        s[11] = 'X';
        cat.push_back(s);
    }
    cat.push_back(std::string(12, 'Z'));
    EXPECT_EQ(unmeasured_state("cat12-base"), canonical_generators(parse_all(cat)));

    auto cube = unmeasured_state("cube8-base");
    ASSERT_EQ(cube.size(), 8u);
    // CSS with matching X and Z parts: every generator is all-X or all-Z and the state is pure.
    for (const auto &g : cube) {
        EXPECT_TRUE(g.xs.none() || g.zs.none());
    }
}

TEST(tableau, forced_outcomes) {
    Circuit c(1);
    c.h(0);
    c.measure_z(0);
    c.measure_z(0);
    BitVec forced = BitVec::from_str("11");
    auto r = simulate(c, {}, 1, 0, &forced);
    EXPECT_TRUE(r.consistent);
    EXPECT_EQ(r.record, forced);
    forced = BitVec::from_str("10");
    EXPECT_FALSE(simulate(c, {}, 1, 0, &forced).consistent);
}
