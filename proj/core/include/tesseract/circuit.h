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

#ifndef TESSERACT_CIRCUIT_H
#define TESSERACT_CIRCUIT_H

#include <cstdint>
#include <string>
#include <vector>

namespace tess {

enum class Gate : uint8_t {
    H,
    S,
    X,
    Z,
    CNOT,
    PERM,
    RESET_Z,
    RESET_X,
    MEAS_Z,
    MEAS_X,
    BARRIER,
};

const char *gate_name(Gate g);
bool is_single_qubit_unitary(Gate g);
bool is_reset(Gate g);
bool is_measurement(Gate g);
/// PERM and BARRIER take no time and are allowed to share a layer with anything.
bool is_zero_duration(Gate g);

/// One operation. CNOT targets are (control, target). PERM targets are (from, to) pairs meaning the
/// state of qubit `from` moves to qubit `to`. Measurements carry the index of the record they write.
struct Instruction {
    Gate gate;
    std::vector<uint32_t> targets;
    uint32_t layer = 0;
    uint32_t record = 0;

    bool operator==(const Instruction &other) const = default;
};

class Circuit {
   public:
    explicit Circuit(uint32_t num_qubits = 0) : num_qubits_(num_qubits) {
    }

    uint32_t num_qubits() const {
        return num_qubits_;
    }
    uint32_t num_measurements() const {
        return num_measurements_;
    }
    const std::vector<Instruction> &ops() const {
        return ops_;
    }
    size_t size() const {
        return ops_.size();
    }
    const Instruction &operator[](size_t k) const {
        return ops_[k];
    }
    uint32_t num_layers() const;
    /// Adds `k` fresh qubits and returns the index of the first one.
    uint32_t add_qubits(uint32_t k) {
        num_qubits_ += k;
        return num_qubits_ - k;
    }

    /// Appends one gate. Measurements return their record index, other gates return UINT32_MAX.
    /// Appended instructions get layer 0 until `schedule` is called.
    uint32_t append(Gate gate, std::vector<uint32_t> targets);
    void h(uint32_t q) {
        append(Gate::H, {q});
    }
    void s(uint32_t q) {
        append(Gate::S, {q});
    }
    void x(uint32_t q) {
        append(Gate::X, {q});
    }
    void z(uint32_t q) {
        append(Gate::Z, {q});
    }
    void cnot(uint32_t c, uint32_t t) {
        append(Gate::CNOT, {c, t});
    }
    void reset_z(uint32_t q) {
        append(Gate::RESET_Z, {q});
    }
    void reset_x(uint32_t q) {
        append(Gate::RESET_X, {q});
    }
    uint32_t measure_z(uint32_t q) {
        return append(Gate::MEAS_Z, {q});
    }
    uint32_t measure_x(uint32_t q) {
        return append(Gate::MEAS_X, {q});
    }
    void barrier(std::vector<uint32_t> qubits) {
        append(Gate::BARRIER, std::move(qubits));
    }
    /// `perm[k]` is the qubit that receives the state of qubit `qubits[k]`.
    void permute(const std::vector<uint32_t> &qubits, const std::vector<uint32_t> &images);
    void append_circuit(const Circuit &other);

    /// Layers every instruction as late as possible within the minimum depth, then moves measurements
    /// to just after their predecessor. Instructions are stably reordered by layer and measurement records
    /// are renumbered in the new order. `record_map`, if given, receives old record index -> new record
    /// index, and `op_order` receives the old index of each instruction in the new order.
    void schedule(std::vector<uint32_t> *record_map = nullptr, std::vector<uint32_t> *op_order = nullptr);

    /// Checks the structural invariants: targets in range, layers non-decreasing, records numbered
    /// consecutively and no qubit touched twice in one layer (PERM and BARRIER excepted).
    /// Throws std::invalid_argument describing the first violation.
    void validate() const;

    /// Text format: one instruction per line, "TICK" between layers.
    std::string to_text() const;
    static Circuit from_text(const std::string &text);

    size_t count(Gate g) const;
    bool operator==(const Circuit &other) const = default;

   private:
    uint32_t num_qubits_;
    uint32_t num_measurements_ = 0;
    std::vector<Instruction> ops_;
};

}  // namespace tess

#endif
