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

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

using namespace tess;

const char *tess::gate_name(Gate g) {
    switch (g) {
        case Gate::H:
            return "H";
        case Gate::S:
            return "S";
        case Gate::X:
            return "X";
        case Gate::Z:
            return "Z";
        case Gate::CNOT:
            return "CNOT";
        case Gate::PERM:
            return "PERM";
        case Gate::RESET_Z:
            return "RESET_Z";
        case Gate::RESET_X:
            return "RESET_X";
        case Gate::MEAS_Z:
            return "MEAS_Z";
        case Gate::MEAS_X:
            return "MEAS_X";
        case Gate::BARRIER:
            return "BARRIER";
    }
    return "?";
}

bool tess::is_single_qubit_unitary(Gate g) {
    return g == Gate::H || g == Gate::S || g == Gate::X || g == Gate::Z;
}

bool tess::is_reset(Gate g) {
    return g == Gate::RESET_Z || g == Gate::RESET_X;
}

bool tess::is_measurement(Gate g) {
    return g == Gate::MEAS_Z || g == Gate::MEAS_X;
}

bool tess::is_zero_duration(Gate g) {
    return g == Gate::PERM || g == Gate::BARRIER;
}

uint32_t Circuit::num_layers() const {
    uint32_t n = 0;
    for (const auto &op : ops_) {
        n = std::max(n, op.layer + 1);
    }
    return n;
}

uint32_t Circuit::append(Gate gate, std::vector<uint32_t> targets) {
    size_t arity = 1;
    if (gate == Gate::CNOT) {
        arity = 2;
    }
    if (gate == Gate::PERM) {
        if (targets.size() % 2) {
            throw std::invalid_argument("PERM needs (from, to) pairs");
        }
    } else if (gate != Gate::BARRIER && targets.size() != arity) {
        throw std::invalid_argument(std::string("Wrong number of targets for ") + gate_name(gate));
    }
    for (auto q : targets) {
        if (q >= num_qubits_) {
            throw std::out_of_range("Qubit index out of range");
        }
    }
    if (gate == Gate::CNOT && targets[0] == targets[1]) {
        throw std::invalid_argument("CNOT control equals target");
    }
    Instruction ins{gate, std::move(targets), 0, 0};
    uint32_t rec = UINT32_MAX;
    if (is_measurement(gate)) {
        rec = num_measurements_++;
        ins.record = rec;
    }
    ops_.push_back(std::move(ins));
    return rec;
}

void Circuit::permute(const std::vector<uint32_t> &qubits, const std::vector<uint32_t> &images) {
    if (qubits.size() != images.size()) {
        throw std::invalid_argument("permute: size mismatch");
    }
    std::vector<uint32_t> sorted_a = qubits;
    std::vector<uint32_t> sorted_b = images;
    std::sort(sorted_a.begin(), sorted_a.end());
    std::sort(sorted_b.begin(), sorted_b.end());
    if (sorted_a != sorted_b || std::adjacent_find(sorted_a.begin(), sorted_a.end()) != sorted_a.end()) {
        throw std::invalid_argument("permute: not a permutation");
    }
    std::vector<uint32_t> t;
    for (size_t k = 0; k < qubits.size(); k++) {
        if (qubits[k] != images[k]) {
            t.push_back(qubits[k]);
            t.push_back(images[k]);
        }
    }
    if (!t.empty()) {
        append(Gate::PERM, std::move(t));
    }
}

void Circuit::append_circuit(const Circuit &other) {
    if (other.num_qubits_ > num_qubits_) {
        throw std::invalid_argument("append_circuit: too many qubits");
    }
    for (const auto &op : other.ops_) {
        append(op.gate, op.targets);
    }
}

void Circuit::schedule(std::vector<uint32_t> *record_map, std::vector<uint32_t> *op_order) {
    std::vector<uint32_t> ready(num_qubits_, 0);
    for (auto &op : ops_) {
        uint32_t layer = 0;
        for (auto q : op.targets) {
            layer = std::max(layer, ready[q]);
        }
        op.layer = layer;
        uint32_t next = is_zero_duration(op.gate) ? layer : layer + 1;
        for (auto q : op.targets) {
            ready[q] = next;
        }
    }
    // Everything moves as late as possible within the ASAP depth, so qubits start as late as their
    // consumers allow. Measurements are then pulled back to just after their predecessor.
    uint32_t depth = 0;
    for (const auto &op : ops_) {
        depth = std::max(depth, op.layer + 1);
    }
    std::vector<uint32_t> limit(num_qubits_, depth);
    for (size_t k = ops_.size(); k-- > 0;) {
        auto &op = ops_[k];
        uint32_t layer = depth;
        for (auto q : op.targets) {
            layer = std::min(layer, limit[q]);
        }
        if (!is_zero_duration(op.gate)) {
            layer--;
        }
        op.layer = layer;
        for (auto q : op.targets) {
            limit[q] = layer;
        }
    }
    std::vector<uint32_t> by_layer(ops_.size());
    std::iota(by_layer.begin(), by_layer.end(), 0);
    std::stable_sort(by_layer.begin(), by_layer.end(), [&](uint32_t a, uint32_t b) {
        return ops_[a].layer < ops_[b].layer;
    });
    std::fill(ready.begin(), ready.end(), 0);
    for (auto k : by_layer) {
        auto &op = ops_[k];
        if (is_measurement(op.gate)) {
            op.layer = ready[op.targets[0]];
        }
        uint32_t next = is_zero_duration(op.gate) ? op.layer : op.layer + 1;
        for (auto q : op.targets) {
            ready[q] = next;
        }
    }
    std::vector<uint32_t> order(ops_.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
        return ops_[a].layer < ops_[b].layer;
    });
    std::vector<Instruction> sorted;
    sorted.reserve(ops_.size());
    for (auto k : order) {
        sorted.push_back(std::move(ops_[k]));
    }
    ops_ = std::move(sorted);
    if (op_order != nullptr) {
        *op_order = std::move(order);
    }
    std::vector<uint32_t> map(num_measurements_, 0);
    uint32_t r = 0;
    for (auto &op : ops_) {
        if (is_measurement(op.gate)) {
            map[op.record] = r;
            op.record = r++;
        }
    }
    if (record_map != nullptr) {
        *record_map = std::move(map);
    }
}

void Circuit::validate() const {
    uint32_t prev_layer = 0;
    uint32_t next_record = 0;
    std::vector<uint32_t> last_layer(num_qubits_, UINT32_MAX);
    for (size_t k = 0; k < ops_.size(); k++) {
        const auto &op = ops_[k];
        std::string where = "instruction " + std::to_string(k) + " (" + gate_name(op.gate) + ")";
        if (op.layer < prev_layer) {
            throw std::invalid_argument(where + ": layer decreases");
        }
        prev_layer = op.layer;
        for (auto q : op.targets) {
            if (q >= num_qubits_) {
                throw std::invalid_argument(where + ": qubit out of range");
            }
        }
        if (is_measurement(op.gate)) {
            if (op.record != next_record) {
                throw std::invalid_argument(where + ": measurement record out of order");
            }
            next_record++;
        }
        if (is_zero_duration(op.gate)) {
            continue;
        }
        for (auto q : op.targets) {
            if (last_layer[q] == op.layer) {
                throw std::invalid_argument(where + ": qubit " + std::to_string(q) + " used twice in layer");
            }
            last_layer[q] = op.layer;
        }
    }
    if (next_record != num_measurements_) {
        throw std::invalid_argument("measurement count mismatch");
    }
}

std::string Circuit::to_text() const {
    std::ostringstream out;
    out << "QUBITS " << num_qubits_ << "\n";
    uint32_t layer = 0;
    for (const auto &op : ops_) {
        while (layer < op.layer) {
            out << "TICK\n";
            layer++;
        }
        if (is_measurement(op.gate)) {
            out << "MEAS " << (op.gate == Gate::MEAS_X ? "X" : "Z") << " " << op.targets[0] << " -> r" << op.record
                << "\n";
            continue;
        }
        out << gate_name(op.gate);
        for (auto q : op.targets) {
            out << " " << q;
        }
        out << "\n";
    }
    return out.str();
}

Circuit Circuit::from_text(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    Circuit c;
    bool have_header = false;
    uint32_t layer = 0;
    size_t line_no = 0;
    auto fail = [&](const std::string &msg) {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": " + msg);
    };
    while (std::getline(in, line)) {
        line_no++;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.resize(hash);
        }
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) {
            continue;
        }
        if (word == "QUBITS") {
            uint32_t n;
            if (have_header || !(ls >> n)) {
                fail("bad QUBITS header");
            }
            c.num_qubits_ = n;
            have_header = true;
            continue;
        }
        if (!have_header) {
            fail("missing QUBITS header");
        }
        if (word == "TICK") {
            layer++;
            continue;
        }
        if (word == "MEAS") {
            std::string basis, arrow, rec;
            uint32_t q;
            if (!(ls >> basis >> q >> arrow >> rec) || arrow != "->" || rec.size() < 2 || rec[0] != 'r') {
                fail("bad MEAS line");
            }
            if (basis != "X" && basis != "Z") {
                fail("bad measurement basis");
            }
            uint32_t k = c.append(basis == "X" ? Gate::MEAS_X : Gate::MEAS_Z, {q});
            if (std::to_string(k) != rec.substr(1)) {
                fail("measurement record index out of order");
            }
            c.ops_.back().layer = layer;
            continue;
        }
        Gate g;
        static const Gate all[] = {Gate::H, Gate::S, Gate::X, Gate::Z, Gate::CNOT, Gate::PERM,
                                   Gate::RESET_Z, Gate::RESET_X, Gate::BARRIER};
        bool found = false;
        for (auto cand : all) {
            if (word == gate_name(cand)) {
                g = cand;
                found = true;
            }
        }
        if (!found) {
            fail("unknown gate '" + word + "'");
        }
        std::vector<uint32_t> targets;
        uint32_t q;
        while (ls >> q) {
            targets.push_back(q);
        }
        if (!ls.eof()) {
            fail("bad qubit index");
        }
        c.append(g, std::move(targets));
        c.ops_.back().layer = layer;
    }
    c.validate();
    return c;
}

size_t Circuit::count(Gate g) const {
    return std::count_if(ops_.begin(), ops_.end(), [&](const Instruction &op) {
        return op.gate == g;
    });
}
