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

#include "tesseract/gadgets.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

using namespace tess;
using namespace tess::code;

std::vector<uint32_t> BlockHandle::data() const {
    std::vector<uint32_t> out(kNumQubits);
    for (int k = 0; k < kNumQubits; k++) {
        out[k] = base + (uint32_t)k;
    }
    return out;
}

std::vector<uint32_t> BlockHandle::all_qubits() const {
    auto out = data();
    out.insert(out.end(), ancillas.begin(), ancillas.end());
    return out;
}

BlockHandle Program::add_block(int num_ancillas) {
    if (finalized_) {
        throw std::logic_error("program already finalized");
    }
    BlockHandle b;
    b.index = plan.num_blocks++;
    b.base = circuit.add_qubits((uint32_t)(kNumQubits + num_ancillas));
    for (int k = 0; k < num_ancillas; k++) {
        b.ancillas.push_back(b.base + kNumQubits + (uint32_t)k);
    }
    blocks.push_back(b);
    return b;
}

uint32_t Program::add_qubits(uint32_t k) {
    return circuit.add_qubits(k);
}

void Program::set_region(const std::string &name) {
    auto it = std::find(region_names.begin(), region_names.end(), name);
    if (it == region_names.end()) {
        region_names.push_back(name);
        region_ = (uint32_t)region_names.size() - 1;
    } else {
        region_ = (uint32_t)(it - region_names.begin());
    }
}

void Program::op(Gate g, std::vector<uint32_t> targets) {
    if (finalized_) {
        throw std::logic_error("program already finalized");
    }
    if (is_measurement(g)) {
        throw std::invalid_argument("use Program::measure for measurements");
    }
    circuit.append(g, std::move(targets));
    op_region.push_back(region_);
}

uint32_t Program::measure(Basis b, uint32_t q, RecordRole role, int32_t block, std::string label) {
    if (finalized_) {
        throw std::logic_error("program already finalized");
    }
    uint32_t r = circuit.append(b == Basis::X ? Gate::MEAS_X : Gate::MEAS_Z, {q});
    op_region.push_back(region_);
    plan.records.push_back({role, block, std::move(label)});
    return r;
}

void Program::finalize() {
    if (finalized_) {
        return;
    }
    std::vector<uint32_t> record_map, op_order;
    circuit.schedule(&record_map, &op_order);
    std::vector<uint32_t> regions(op_order.size());
    for (size_t k = 0; k < op_order.size(); k++) {
        regions[k] = op_region[op_order[k]];
    }
    op_region = std::move(regions);
    plan.remap_records(record_map);
    circuit.validate();
    plan.validate(circuit.num_measurements());
    finalized_ = true;
}

std::vector<bool> Program::ops_in_regions(const std::vector<std::string> &names) const {
    std::vector<bool> wanted(region_names.size(), false);
    for (const auto &n : names) {
        auto it = std::find(region_names.begin(), region_names.end(), n);
        if (it == region_names.end()) {
            throw std::invalid_argument("unknown region '" + n + "'");
        }
        wanted[it - region_names.begin()] = true;
    }
    std::vector<bool> out(op_region.size());
    for (size_t k = 0; k < op_region.size(); k++) {
        out[k] = wanted[op_region[k]];
    }
    return out;
}

const char *tess::prep_state_name(PrepState s) {
    switch (s) {
        case PrepState::PLUS_ZERO:
            return "plus_zero";
        case PrepState::PLUS_PLUS_ZERO:
            return "plus_plus_zero";
        case PrepState::ZERO_ZERO_PLUS:
            return "zero_zero_plus";
    }
    return "?";
}

namespace {

Mask support_mask(const std::array<int, 4> &s) {
    Mask m = 0;
    for (int q : s) {
        m |= (Mask)(1u << q);
    }
    return m;
}

Mask position_pair(const std::array<int, 4> &s, int i, int j) {
    return (Mask)((1u << s[i]) | (1u << s[j]));
}

struct CheckRecords {
    uint32_t syndrome;
    int64_t flag = -1;
};

/// Stabilizer check with an optional flag qubit whose CNOTs sit before position `fa` and after `fb`.
/// Z checks are the dual circuit.
CheckRecords stabilizer_check(Program &p, int32_t block, Basis kind, const std::vector<uint32_t> &qubits,
                              uint32_t anc, int64_t flag, int fa, int fb, RecordRole role, const std::string &label) {
    bool x = kind == Basis::X;
    p.op(x ? Gate::RESET_X : Gate::RESET_Z, {anc});
    if (flag >= 0) {
        p.op(x ? Gate::RESET_Z : Gate::RESET_X, {(uint32_t)flag});
    }
    auto flag_cnot = [&]() {
        if (x) {
            p.op(Gate::CNOT, {anc, (uint32_t)flag});
        } else {
            p.op(Gate::CNOT, {(uint32_t)flag, anc});
        }
    };
    for (int j = 0; j < (int)qubits.size(); j++) {
        if (flag >= 0 && j == fa) {
            flag_cnot();
        }
        if (x) {
            p.op(Gate::CNOT, {anc, qubits[j]});
        } else {
            p.op(Gate::CNOT, {qubits[j], anc});
        }
        if (flag >= 0 && j == fb) {
            flag_cnot();
        }
    }
    CheckRecords out;
    out.syndrome = p.measure(kind, anc, role, block, label);
    if (flag >= 0) {
        out.flag = p.measure(dual(kind), (uint32_t)flag, role == RecordRole::PREP_CHECK ? role : RecordRole::FLAG, block,
                             label + ".flag");
    }
    return out;
}

void prepare_plus_zero(Program &p, const BlockHandle &b, PrepCheckStep &step) {
    uint32_t anc = b.ancillas.at(0), fl = b.ancillas.at(1);
    int32_t blk = (int32_t)b.index;
    for (int o : {0, 8}) {
        auto q = [&](int v) {
            return b.q(o + v);
        };
        for (int v : {0, 1, 2, 4}) {
            p.op(Gate::RESET_X, {q(v)});
        }
        for (int v : {3, 5, 6, 7}) {
            p.op(Gate::RESET_Z, {q(v)});
        }
        for (auto [c, t] : std::vector<std::pair<int, int>>{
                 {0, 1}, {2, 3}, {0, 2}, {1, 3}, {4, 5}, {4, 6}, {4, 7}, {0, 4}, {1, 5}, {2, 6}, {3, 7}}) {
            p.op(Gate::CNOT, {q(c), q(t)});
        }
    }
    // Z checks run in parallel, one per half, without flags.
    for (int o : {0, 8}) {
        auto r = stabilizer_check(p, blk, Basis::Z,
                                  {b.q(o + 2), b.q(o + 3), b.q(o + 4), b.q(o + 5)}, o == 0 ? anc : fl, -1, -1, -1,
                                  RecordRole::PREP_CHECK, "prep.z" + std::to_string(o / 8));
        step.records.push_back(r.syndrome);
    }
    for (int o : {0, 8}) {
        auto r = stabilizer_check(p, blk, Basis::X, {b.q(o + 0), b.q(o + 3), b.q(o + 5), b.q(o + 6)}, anc, fl, 0, 2,
                                  RecordRole::PREP_CHECK, "prep.x" + std::to_string(o / 8));
        step.records.push_back(r.syndrome);
        step.records.push_back((uint32_t)r.flag);
    }
}

void prepare_pp0000(Program &p, const BlockHandle &b, bool dual_circuit, PrepCheckStep &step) {
    uint32_t anc = b.ancillas.at(0), fl = b.ancillas.at(1);
    int32_t blk = (int32_t)b.index;
    Perm t = dual_circuit ? transpose_perm() : identity_perm();
    auto q = [&](int v) {
        return b.q(t[v]);
    };
    Gate plus = dual_circuit ? Gate::RESET_Z : Gate::RESET_X;
    Gate zero = dual_circuit ? Gate::RESET_X : Gate::RESET_Z;
    Mask plus_mask = mask_of({0, 1, 2, 3, 4, 8, 12});
    for (int v = 0; v < kNumQubits; v++) {
        p.op((plus_mask >> v) & 1 ? plus : zero, {q(v)});
    }
    auto cx = [&](int c, int tt) {
        if (dual_circuit) {
            p.op(Gate::CNOT, {q(tt), q(c)});
        } else {
            p.op(Gate::CNOT, {q(c), q(tt)});
        }
    };
    for (int r = 1; r < 4; r++) {
        for (int c = 1; c < 4; c++) {
            cx(4 * r, 4 * r + c);
            cx(c, 4 * r + c);
            cx(0, 4 * r + c);
        }
    }
    struct Spec {
        Basis kind;
        std::array<int, 4> support;
    };
    std::array<Spec, 3> checks{{
        {Basis::X, {0, 4, 8, 12}},
        {Basis::Z, {0, 1, 4, 5}},
        {Basis::Z, {10, 11, 14, 15}},
    }};
    int k = 0;
    for (const auto &c : checks) {
        Basis kind = dual_circuit ? dual(c.kind) : c.kind;
        std::vector<uint32_t> qs;
        for (int v : c.support) {
            qs.push_back(q(v));
        }
        auto r = stabilizer_check(p, blk, kind, qs, anc, fl, 0, 2, RecordRole::PREP_CHECK,
                                  "prep.check" + std::to_string(k++));
        step.records.push_back(r.syndrome);
        step.records.push_back((uint32_t)r.flag);
    }
}

}  // namespace

void tess::prepare(Program &p, const BlockHandle &b, PrepState state) {
    PrepCheckStep step;
    step.block = b.index;
    switch (state) {
        case PrepState::PLUS_ZERO:
            prepare_plus_zero(p, b, step);
            break;
        case PrepState::PLUS_PLUS_ZERO:
            prepare_pp0000(p, b, false, step);
            break;
        case PrepState::ZERO_ZERO_PLUS:
            prepare_pp0000(p, b, true, step);
            break;
    }
    p.add_step(step);
}

RepMeasurement tess::measure_w4(Program &p, const BlockHandle &b, std::array<int, 4> support, Basis basis,
                                Flavor flavor, const std::string &label, unsigned rotation) {
    int32_t blk = (int32_t)b.index;
    size_t used = flavor == Flavor::TWO_FLAG ? 3 : 2;
    if (b.ancillas.size() < used) {
        throw std::invalid_argument("block has too few ancillas for this flavor");
    }
    auto anc = [&](size_t role) {
        return b.ancillas[(role + rotation) % used];
    };
    std::vector<uint32_t> qs;
    for (int v : support) {
        qs.push_back(b.q(v));
    }
    RepMeasurement m;
    m.support = support_mask(support);
    m.flavor = flavor;
    bool x = basis == Basis::X;
    switch (flavor) {
        case Flavor::NON_FT: {
            auto r = stabilizer_check(p, blk, basis, qs, anc(0), -1, -1, -1, RecordRole::SYNDROME, label);
            m.record = r.syndrome;
            break;
        }
        case Flavor::ONE_FLAG: {
            // A single ancilla fault that spreads to two data qubits leaves {d2,d3}, equal to {d0,d1} up to
            // the measured operator, and always fires the flag.
            uint32_t a = anc(0), f = anc(1);
            p.op(x ? Gate::RESET_X : Gate::RESET_Z, {a});
            p.op(x ? Gate::RESET_Z : Gate::RESET_X, {f});
            auto data = [&](int j) {
                p.op(Gate::CNOT, x ? std::vector<uint32_t>{a, qs[j]} : std::vector<uint32_t>{qs[j], a});
            };
            auto flag = [&]() {
                p.op(Gate::CNOT, x ? std::vector<uint32_t>{a, f} : std::vector<uint32_t>{f, a});
            };
            data(0);
            flag();
            data(1);
            data(2);
            flag();
            data(3);
            m.record = p.measure(basis, a, RecordRole::SYNDROME, blk, label);
            m.flag0 = p.measure(dual(basis), f, RecordRole::FLAG, blk, label + ".flag");
            m.hook_pair = position_pair(support, 0, 1);
            break;
        }
        case Flavor::TWO_FLAG: {
            uint32_t a = anc(0), f = anc(1), g = anc(2);
            p.op(x ? Gate::RESET_X : Gate::RESET_Z, {a});
            p.op(x ? Gate::RESET_Z : Gate::RESET_X, {f});
            p.op(x ? Gate::RESET_Z : Gate::RESET_X, {g});
            auto cx = [&](uint32_t other) {
                p.op(Gate::CNOT, x ? std::vector<uint32_t>{a, other} : std::vector<uint32_t>{other, a});
            };
            cx(qs[0]);
            cx(f);
            cx(g);
            cx(qs[1]);
            cx(qs[2]);
            cx(f);
            cx(g);
            cx(qs[3]);
            m.record = p.measure(basis, a, RecordRole::SYNDROME, blk, label);
            m.flag0 = p.measure(dual(basis), f, RecordRole::FLAG, blk, label + ".flag0");
            m.flag1 = p.measure(dual(basis), g, RecordRole::FLAG, blk, label + ".flag1");
            m.two_flag_fix = position_pair(support, 0, 1);
            break;
        }
        case Flavor::JOINT:
            throw std::invalid_argument("use measure_w4_joint for the joint gadget");
    }
    return m;
}

std::array<RepMeasurement, 2> tess::measure_w4_joint(Program &p, const BlockHandle &b, std::array<int, 4> support,
                                                     const std::string &label, bool swap_ancillas) {
    int32_t blk = (int32_t)b.index;
    uint32_t a = b.ancillas.at(0), z = b.ancillas.at(1);
    if (swap_ancillas) {
        std::swap(a, z);
    }
    p.op(Gate::RESET_X, {a});
    p.op(Gate::RESET_Z, {z});
    auto A = [&](int j) {
        p.op(Gate::CNOT, {a, b.q(support[j])});
    };
    auto B = [&](int j) {
        p.op(Gate::CNOT, {b.q(support[j]), z});
    };
    A(0);
    B(0);
    B(1);
    A(1);
    A(2);
    B(2);
    B(3);
    A(3);
    std::array<RepMeasurement, 2> out;
    out[0].record = p.measure(Basis::X, a, RecordRole::SYNDROME, blk, label + ".x");
    out[1].record = p.measure(Basis::Z, z, RecordRole::SYNDROME, blk, label + ".z");
    for (auto &m : out) {
        m.support = support_mask(support);
        m.flavor = Flavor::JOINT;
        m.hook_pair = position_pair(support, 0, 1);
    }
    return out;
}

void tess::joint_groups(Program &p, const BlockHandle &b, const std::array<std::array<int, 4>, 4> &reps,
                        const std::string &label, GroupTarget x_group, GroupTarget z_group) {
    GroupStep gx, gz;
    gx.block = gz.block = b.index;
    gx.basis = Basis::X;
    gz.basis = Basis::Z;
    gx.ec_rule = gz.ec_rule = true;
    for (int k = 0; k < 4; k++) {
        auto ms = measure_w4_joint(p, b, reps[k], label + "[" + std::to_string(k) + "]", k % 2 == 1);
        gx.reps[k] = ms[0];
        gz.reps[k] = ms[1];
    }
    gx.fix_x = x_group.fix_x;
    gx.fix_z = x_group.fix_z;
    gx.slot = x_group.slot;
    gz.fix_x = z_group.fix_x;
    gz.fix_z = z_group.fix_z;
    gz.slot = z_group.slot;
    gx.label = label + ".X";
    gz.label = label + ".Z";
    p.add_step(gx);
    p.add_step(gz);
}

void tess::ec_round(Program &p, const BlockHandle &b) {
    std::array<std::array<int, 4>, 4> rows{}, cols{};
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            rows[i][j] = 4 * i + j;
            cols[i][j] = i + 4 * j;
        }
    }
    joint_groups(p, b, rows, "ec.rows");
    joint_groups(p, b, cols, "ec.cols");
}

std::array<std::array<int, 4>, 4> tess::ordered_family(const std::array<Mask, 4> &family,
                                                       const std::vector<Mask> &next) {
    std::array<std::array<int, 4>, 4> out{};
    for (int k = 0; k < 4; k++) {
        auto qs = qubits_of(family[k]);
        if (qs.size() != 4) {
            throw std::invalid_argument("representative must have weight 4");
        }
        auto key = [&](int q) {
            for (size_t i = 0; i < next.size(); i++) {
                if ((next[i] >> q) & 1) {
                    return (int)i * kNumQubits + q;
                }
            }
            return (int)next.size() * kNumQubits + q;
        };
        std::sort(qs.begin(), qs.end(), [&](int a, int c) {
            return key(a) < key(c);
        });
        std::copy(qs.begin(), qs.end(), out[k].begin());
    }
    return out;
}

std::array<Mask, 4> tess::choose_family(Mask coset, const std::vector<Mask> &previous) {
    if (previous.empty()) {
        return disjoint_representatives(coset);
    }
    for (const auto &fam : disjoint_families(coset)) {
        bool ok = true;
        for (Mask r : fam) {
            for (Mask o : previous) {
                ok &= std::popcount((unsigned)(r & o)) == 1;
            }
        }
        if (ok) {
            auto sorted = fam;
            std::sort(sorted.begin(), sorted.end(), [](Mask a, Mask c) {
                return std::countr_zero((unsigned)a) < std::countr_zero((unsigned)c);
            });
            return sorted;
        }
    }
    return disjoint_representatives(coset);
}

void tess::logical_measure(Program &p, const BlockHandle &b, const LogicalMeasureSpec &spec) {
    GroupStep g;
    g.block = b.index;
    g.basis = spec.basis;
    g.ec_rule = false;
    for (int k = 0; k < 4; k++) {
        g.reps[k] = measure_w4(p, b, spec.reps[k], spec.basis, spec.flavor, spec.label + "[" + std::to_string(k) + "]",
                               (unsigned)k);
    }
    g.fix_x = spec.target.fix_x;
    g.fix_z = spec.target.fix_z;
    g.slot = spec.target.slot;
    g.label = spec.label;
    p.add_step(g);
}

void tess::mb_cnot(Program &p, const BlockHandle &b, int control, int target, int gauge, Flavor flavor) {
    auto f1 = choose_family(canonical_x(logicals({gauge, target})));
    auto f2 = choose_family(canonical_z(logicals({gauge, control})), {f1.begin(), f1.end()});
    auto f3 = choose_family(canonical_x(logicals({gauge})), {f2.begin(), f2.end()});
    std::string g = std::to_string(gauge);
    LogicalMeasureSpec s1{Basis::X, ordered_family(f1, {f2.begin(), f2.end()}), flavor,
                          {0, canonical_z(logicals({gauge})), -1}, "mb_cnot.X" + g + "X" + std::to_string(target)};
    LogicalMeasureSpec s2{Basis::Z, ordered_family(f2, {f3.begin(), f3.end()}), flavor,
                          {canonical_x(logicals({gauge, target})), 0, -1},
                          "mb_cnot.Z" + g + "Z" + std::to_string(control)};
    LogicalMeasureSpec s3{Basis::X, ordered_family(f3), flavor, {0, canonical_z(logicals({gauge, control})), -1},
                          "mb_cnot.X" + g};
    logical_measure(p, b, s1);
    logical_measure(p, b, s2);
    logical_measure(p, b, s3);
}

void tess::permute_block(Program &p, const BlockHandle &b, const Perm &perm) {
    std::vector<uint32_t> targets;
    for (int k = 0; k < kNumQubits; k++) {
        if (perm[k] != k) {
            targets.push_back(b.q(k));
            targets.push_back(b.q(perm[k]));
        }
    }
    if (targets.empty()) {
        return;
    }
    p.op(Gate::PERM, targets);
    p.add_step(PermuteStep{b.index, perm});
}

void tess::transversal_cnot(Program &p, const BlockHandle &control, const BlockHandle &target, const Perm &perm) {
    permute_block(p, target, perm);
    for (int k = 0; k < kNumQubits; k++) {
        p.op(Gate::CNOT, {control.q(k), target.q(k)});
    }
    p.add_step(CnotStep{control.index, target.index});
}

void tess::measure_transversal(Program &p, const BlockHandle &b, Basis basis,
                               const std::vector<std::pair<int32_t, Mask>> &outputs) {
    TransversalReadStep step;
    step.block = b.index;
    step.basis = basis;
    for (int k = 0; k < kNumQubits; k++) {
        step.records[k] = p.measure(basis, b.q(k), RecordRole::DATA, (int32_t)b.index,
                                    std::string("read.") + basis_char(basis) + std::to_string(k));
    }
    for (const auto &[slot, m] : outputs) {
        step.outputs.push_back({slot, m});
    }
    p.add_step(step);
}

void tess::measure_split(Program &p, const BlockHandle &b, const std::vector<std::pair<int, int>> &row_pairs,
                         const std::vector<std::pair<int32_t, Mask>> &x_outputs,
                         const std::vector<std::pair<int32_t, Mask>> &z_outputs) {
    std::vector<Mask> supports;
    for (auto [rc, rt] : row_pairs) {
        for (int c = 0; c < 4; c++) {
            p.op(Gate::CNOT, {b.q(4 * rc + c), b.q(4 * rt + c)});
            supports.push_back((Mask)((1u << (4 * rc + c)) | (1u << (4 * rt + c))));
        }
    }
    std::vector<uint32_t> xr, zr;
    int32_t blk = (int32_t)b.index;
    for (auto [rc, rt] : row_pairs) {
        for (int c = 0; c < 4; c++) {
            xr.push_back(p.measure(Basis::X, b.q(4 * rc + c), RecordRole::DATA, blk, "split.X" + std::to_string(4 * rc + c)));
            zr.push_back(p.measure(Basis::Z, b.q(4 * rt + c), RecordRole::DATA, blk, "split.Z" + std::to_string(4 * rt + c)));
        }
    }
    SplitReadStep step;
    step.block = b.index;
    step.sides[0] = make_split_side(Basis::X, supports, xr, x_outputs);
    step.sides[1] = make_split_side(Basis::Z, supports, zr, z_outputs);
    p.add_step(step);
}

void tess::cat_merge(Program &p, const BlockHandle &b, Flavor flavor) {
    auto fam = disjoint_representatives(canonical_z(logicals({4, 6})));
    LogicalMeasureSpec s{Basis::Z, ordered_family(fam), flavor, {canonical_x(logicals({3, 6})), 0, -1}, "cat.Z4Z6"};
    logical_measure(p, b, s);
}

Perm tess::bell_perm() {
    return swap_rows(1, 2);
}
