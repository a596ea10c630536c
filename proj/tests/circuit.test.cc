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

#include "tesseract/circuit.h"

#include "gtest/gtest.h"

using namespace tess;

TEST(circuit, append_and_count) {
    Circuit c(3);
    c.h(0);
    c.cnot(0, 1);
    EXPECT_EQ(c.measure_z(1), 0u);
    EXPECT_EQ(c.measure_x(2), 1u);
    EXPECT_EQ(c.append(Gate::S, {2}), UINT32_MAX);
    EXPECT_EQ(c.num_measurements(), 2u);
    EXPECT_EQ(c.count(Gate::CNOT), 1u);
    EXPECT_EQ(c.count(Gate::MEAS_Z), 1u);
    EXPECT_EQ(c.add_qubits(2), 3u);
    EXPECT_EQ(c.num_qubits(), 5u);
}

TEST(circuit, schedule_layers) {
    Circuit c(3);
    c.h(0);
    c.cnot(0, 1);
    c.measure_z(1);
    c.h(2);
    c.schedule();
    c.validate();
    EXPECT_EQ(c.num_layers(), 3u);
    for (const auto &op : c.ops()) {
        if (op.gate == Gate::H && op.targets[0] == 2) {
            EXPECT_EQ(op.layer, 2u);
        }
        if (op.gate == Gate::MEAS_Z) {
            EXPECT_EQ(op.layer, 2u);
        }
    }
}

TEST(circuit, schedule_pulls_measurements_forward) {
    Circuit c(2);
    c.h(0);
    c.measure_x(0);
    c.h(1);
    c.s(1);
    c.h(1);
    std::vector<uint32_t> map;
    c.schedule(&map);
    c.validate();
    EXPECT_EQ(c.num_layers(), 3u);
    for (const auto &op : c.ops()) {
        if (op.gate == Gate::MEAS_X) {
            EXPECT_EQ(op.layer, 2u);
        }
        if (op.gate == Gate::H && op.targets[0] == 0) {
            EXPECT_EQ(op.layer, 1u);
        }
    }
    ASSERT_EQ(map.size(), 1u);
    EXPECT_EQ(map[0], 0u);
}

TEST(circuit, schedule_renumbers_records) {
    Circuit c(2);
    c.h(0);
    c.h(0);
    c.measure_z(0);
    c.measure_z(1);
    std::vector<uint32_t> map;
    c.schedule(&map);
    c.validate();
    EXPECT_EQ(map, (std::vector<uint32_t>{1, 0}));
}

TEST(circuit, validate_rejects_conflicts) {
    Circuit c(1);
    c.h(0);
    c.h(0);
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c.schedule();
    EXPECT_NO_THROW(c.validate());
}

TEST(circuit, text_round_trip) {
    Circuit c(4);
    c.reset_x(0);
    c.reset_z(1);
    c.cnot(0, 1);
    c.permute({2, 3}, {3, 2});
    c.barrier({0, 1, 2, 3});
    c.measure_x(0);
    c.measure_z(1);
    c.s(2);
    c.x(3);
    c.z(2);
    c.schedule();
    std::string text = c.to_text();
    Circuit d = Circuit::from_text(text);
    EXPECT_EQ(c, d);
    EXPECT_EQ(d.to_text(), text);
}

TEST(circuit, append_circuit_offsets_records) {
    Circuit a(1);
    a.measure_z(0);
    Circuit b(1);
    b.measure_x(0);
    a.append_circuit(b);
    EXPECT_EQ(a.num_measurements(), 2u);
    EXPECT_EQ(a.ops().back().record, 1u);
}
