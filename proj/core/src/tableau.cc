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

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "tesseract/rng.h"

using namespace tess;

std::string FaultEvent::str() const {
    std::ostringstream out;
    out << (kind == FLIP ? "FLIP" : "PAULI") << "@" << op << (before ? "-" : "+");
    if (kind == PAULI) {
        for (size_t k = 0; k < 2; k++) {
            if (paulis[k]) {
                out << " " << "_XYZ"[paulis[k]] << qubits[k];
            }
        }
    }
    return out.str();
}

FaultSchedule::FaultSchedule(size_t num_ops, const std::vector<FaultEvent> &faults)
    : before(num_ops), after(num_ops), flip(num_ops, 0) {
    for (const auto &f : faults) {
        if (f.op >= num_ops) {
            throw std::out_of_range("fault instruction index out of range");
        }
        if (f.kind == FaultEvent::FLIP) {
            flip[f.op] ^= 1;
        } else if (f.before) {
            before[f.op].push_back(f);
        } else {
            after[f.op].push_back(f);
        }
    }
}

TableauSimulator::TableauSimulator(size_t num_qubits)
    : n_(num_qubits), xcol_(num_qubits, BitVec(2 * num_qubits)), zcol_(num_qubits, BitVec(2 * num_qubits)),
      signs_(2 * num_qubits) {
    for (size_t q = 0; q < n_; q++) {
        xcol_[q].set(q, true);
        zcol_[q].set(q + n_, true);
    }
}

void TableauSimulator::h(size_t q) {
    auto *x = xcol_[q].words();
    auto *z = zcol_[q].words();
    auto *r = signs_.words();
    for (size_t k = 0; k < signs_.num_words(); k++) {
        r[k] ^= x[k] & z[k];
        std::swap(x[k], z[k]);
    }
}

void TableauSimulator::s(size_t q) {
    auto *x = xcol_[q].words();
    auto *z = zcol_[q].words();
    auto *r = signs_.words();
    for (size_t k = 0; k < signs_.num_words(); k++) {
        r[k] ^= x[k] & z[k];
        z[k] ^= x[k];
    }
}

void TableauSimulator::x(size_t q) {
    signs_ ^= zcol_[q];
}

void TableauSimulator::z(size_t q) {
    signs_ ^= xcol_[q];
}

void TableauSimulator::cnot(size_t c, size_t t) {
    auto *xc = xcol_[c].words();
    auto *zc = zcol_[c].words();
    auto *xt = xcol_[t].words();
    auto *zt = zcol_[t].words();
    auto *r = signs_.words();
    for (size_t k = 0; k < signs_.num_words(); k++) {
        r[k] ^= xc[k] & zt[k] & ~(xt[k] ^ zc[k]);
        xt[k] ^= xc[k];
        zc[k] ^= zt[k];
    }
}

void TableauSimulator::permute(const std::vector<uint32_t> &pairs) {
    std::vector<BitVec> xs = xcol_;
    std::vector<BitVec> zs = zcol_;
    for (size_t k = 0; k + 1 < pairs.size(); k += 2) {
        xcol_[pairs[k + 1]] = xs[pairs[k]];
        zcol_[pairs[k + 1]] = zs[pairs[k]];
    }
}

void TableauSimulator::apply_pauli(size_t q, uint8_t pauli) {
    if (pauli == 1 || pauli == 2) {
        x(q);
    }
    if (pauli == 2 || pauli == 3) {
        z(q);
    }
}

void TableauSimulator::apply_pauli(const PauliString &p) {
    for (size_t q = 0; q < n_; q++) {
        apply_pauli(q, p.get(q));
    }
}

PauliString TableauSimulator::row(size_t r) const {
    PauliString p(n_);
    for (size_t q = 0; q < n_; q++) {
        p.xs.set(q, xcol_[q].get(r));
        p.zs.set(q, zcol_[q].get(r));
    }
    p.sign = signs_.get(r);
    return p;
}

void TableauSimulator::set_row(size_t r, const PauliString &p) {
    for (size_t q = 0; q < n_; q++) {
        xcol_[q].set(r, p.xs.get(q));
        zcol_[q].set(r, p.zs.get(q));
    }
    signs_.set(r, p.sign);
}

void TableauSimulator::row_mul(size_t target, size_t source) {
    PauliString t = row(target);
    PauliString s = row(source);
    uint8_t log_i = t.inplace_right_mul_returning_log_i(s);
    t.sign ^= (log_i & 2) != 0;
    set_row(target, t);
}

BitVec TableauSimulator::anticommuting_rows(const PauliString &p) const {
    BitVec acc(2 * n_);
    for (size_t q = 0; q < n_; q++) {
        if (p.xs.get(q)) {
            acc ^= zcol_[q];
        }
        if (p.zs.get(q)) {
            acc ^= xcol_[q];
        }
    }
    return acc;
}

int TableauSimulator::peek_expectation(const PauliString &p) const {
    BitVec anti = anticommuting_rows(p);
    for (size_t r = n_; r < 2 * n_; r++) {
        if (anti.get(r)) {
            return 0;
        }
    }
    PauliString scratch(n_);
    for (size_t i = 0; i < n_; i++) {
        if (anti.get(i)) {
            scratch *= row(i + n_);
        }
    }
    return (scratch.sign ^ p.sign) ? -1 : +1;
}

bool TableauSimulator::measure_pauli(const PauliString &p, bool random_bit, bool *was_random) {
    if (p.num_qubits() != n_) {
        throw std::invalid_argument("measure_pauli: size mismatch");
    }
    BitVec anti = anticommuting_rows(p);
    size_t pivot = SIZE_MAX;
    for (size_t r = n_; r < 2 * n_; r++) {
        if (anti.get(r)) {
            pivot = r;
            break;
        }
    }
    if (pivot == SIZE_MAX) {
        if (was_random != nullptr) {
            *was_random = false;
        }
        PauliString scratch(n_);
        for (size_t i = 0; i < n_; i++) {
            if (anti.get(i)) {
                scratch *= row(i + n_);
            }
        }
        return scratch.sign ^ p.sign;
    }
    if (was_random != nullptr) {
        *was_random = true;
    }
    for (size_t r = 0; r < 2 * n_; r++) {
        if (r != pivot && anti.get(r)) {
            row_mul(r, pivot);
        }
    }
    set_row(pivot - n_, row(pivot));
    PauliString np = p;
    np.sign ^= random_bit;
    set_row(pivot, np);
    return random_bit;
}

bool TableauSimulator::measure_z(size_t q, bool random_bit, bool *was_random) {
    PauliString p(n_);
    p.set(q, 3);
    return measure_pauli(p, random_bit, was_random);
}

bool TableauSimulator::measure_x(size_t q, bool random_bit, bool *was_random) {
    PauliString p(n_);
    p.set(q, 1);
    return measure_pauli(p, random_bit, was_random);
}

void TableauSimulator::reset_z(size_t q) {
    if (measure_z(q, false)) {
        x(q);
    }
}

void TableauSimulator::reset_x(size_t q) {
    if (measure_x(q, false)) {
        z(q);
    }
}

PauliString TableauSimulator::stabilizer(size_t k) const {
    return row(k + n_);
}

PauliString TableauSimulator::destabilizer(size_t k) const {
    return row(k);
}

std::vector<PauliString> TableauSimulator::stabilizers() const {
    std::vector<PauliString> out;
    for (size_t k = 0; k < n_; k++) {
        out.push_back(stabilizer(k));
    }
    return out;
}

namespace {

// Gaussian elimination over the symplectic columns given in `order` (each entry is 2q for x_q, 2q+1
// for z_q). Returns the number of pivots found; pivot rows are moved to the front.
size_t eliminate(std::vector<PauliString> &rows, const std::vector<size_t> &order) {
    size_t rank = 0;
    for (size_t col : order) {
        size_t q = col >> 1;
        auto bit = [&](const PauliString &p) {
            return (col & 1) ? p.zs.get(q) : p.xs.get(q);
        };
        size_t pick = SIZE_MAX;
        for (size_t r = rank; r < rows.size(); r++) {
            if (bit(rows[r])) {
                pick = r;
                break;
            }
        }
        if (pick == SIZE_MAX) {
            continue;
        }
        std::swap(rows[rank], rows[pick]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != rank && bit(rows[r])) {
                rows[r] *= rows[rank];
            }
        }
        rank++;
    }
    return rank;
}

}  // namespace

std::vector<PauliString> tess::canonical_generators(std::vector<PauliString> gens) {
    if (gens.empty()) {
        return gens;
    }
    size_t n = gens[0].num_qubits();
    std::vector<size_t> order;
    for (size_t q = 0; q < n; q++) {
        order.push_back(2 * q);
    }
    for (size_t q = 0; q < n; q++) {
        order.push_back(2 * q + 1);
    }
    size_t rank = eliminate(gens, order);
    for (size_t r = rank; r < gens.size(); r++) {
        if (gens[r].sign) {
            throw std::invalid_argument("canonical_generators: generators contain -I");
        }
    }
    gens.resize(rank);
    return gens;
}

std::vector<PauliString> tess::stabilizer_group_of(const TableauSimulator &sim, const std::vector<uint32_t> &qubits) {
    size_t n = sim.num_qubits();
    std::vector<uint8_t> inside(n, 0);
    for (auto q : qubits) {
        inside[q] = 1;
    }
    std::vector<size_t> order;
    for (size_t q = 0; q < n; q++) {
        if (!inside[q]) {
            order.push_back(2 * q);
            order.push_back(2 * q + 1);
        }
    }
    std::vector<PauliString> rows = sim.stabilizers();
    size_t rank = eliminate(rows, order);
    std::vector<PauliString> local;
    for (size_t r = rank; r < rows.size(); r++) {
        PauliString p(qubits.size());
        p.sign = rows[r].sign;
        for (size_t k = 0; k < qubits.size(); k++) {
            p.set(k, rows[r].get(qubits[k]));
        }
        local.push_back(p);
    }
    return canonical_generators(local);
}

SimulationResult tess::simulate(
    const Circuit &circuit,
    const std::vector<FaultEvent> &faults,
    uint64_t seed,
    uint64_t shot,
    const BitVec *forced,
    TableauSimulator *final_state) {
    TableauSimulator sim(circuit.num_qubits());
    FaultSchedule sched(circuit.size(), faults);
    SimulationResult result;
    result.record = BitVec(circuit.num_measurements());
    result.random = BitVec(circuit.num_measurements());
    KeyedRng rng(seed, shot);
    auto apply_faults = [&](const std::vector<FaultEvent> &fs) {
        for (const auto &f : fs) {
            sim.apply_pauli(f.qubits[0], f.paulis[0]);
            sim.apply_pauli(f.qubits[1], f.paulis[1]);
        }
    };
    for (size_t k = 0; k < circuit.size(); k++) {
        const auto &op = circuit[k];
        apply_faults(sched.before[k]);
        const auto &t = op.targets;
        switch (op.gate) {
            case Gate::H:
                sim.h(t[0]);
                break;
            case Gate::S:
                sim.s(t[0]);
                break;
            case Gate::X:
                sim.x(t[0]);
                break;
            case Gate::Z:
                sim.z(t[0]);
                break;
            case Gate::CNOT:
                sim.cnot(t[0], t[1]);
                break;
            case Gate::PERM:
                sim.permute(t);
                break;
            case Gate::RESET_Z:
                sim.reset_z(t[0]);
                break;
            case Gate::RESET_X:
                sim.reset_x(t[0]);
                break;
            case Gate::MEAS_Z:
            case Gate::MEAS_X: {
                rng.seek(op.record);
                bool want = forced != nullptr ? forced->get(op.record) ^ (bool)sched.flip[k] : rng.coin();
                bool was_random = false;
                bool m = op.gate == Gate::MEAS_Z ? sim.measure_z(t[0], want, &was_random)
                                                 : sim.measure_x(t[0], want, &was_random);
                m ^= (bool)sched.flip[k];
                result.record.set(op.record, m);
                result.random.set(op.record, was_random);
                if (forced != nullptr && m != forced->get(op.record)) {
                    result.consistent = false;
                }
                break;
            }
            case Gate::BARRIER:
                break;
        }
        apply_faults(sched.after[k]);
    }
    if (final_state != nullptr) {
        *final_state = std::move(sim);
    }
    return result;
}
