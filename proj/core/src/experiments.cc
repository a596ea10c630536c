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

#include "tesseract/experiments.h"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <stdexcept>

using namespace tess;
using namespace tess::code;

namespace {

using Outputs = std::vector<std::pair<int32_t, Mask>>;

/// Adds one slot per logical in `which` for a transversal read and returns them by logical.
std::map<int, int32_t> read_slots(Program &p, Basis basis, const std::vector<int> &which,
                                  Outputs &outputs, const std::string &prefix) {
    std::map<int, int32_t> slots;
    for (int l : which) {
        std::string label = prefix + basis_char(basis) + std::to_string(l);
        int32_t s = p.plan.add_slot(label);
        slots[l] = s;
        Mask m = basis == Basis::X ? canonical_x(logicals({l})) : canonical_z(logicals({l}));
        outputs.push_back({s, m});
    }
    return slots;
}

void add_slot_check(Program &p, std::vector<int32_t> slots, const std::string &label) {
    Check c;
    c.slots = std::move(slots);
    c.label = label;
    p.add_check(c);
}

void add_record_check(Program &p, std::vector<uint32_t> records, const std::string &label) {
    Check c;
    c.records = std::move(records);
    c.label = label;
    p.add_check(c);
}

/// Logical action of a permutation as a map position -> new position for logicals 1..6.
std::array<int, kNumLogical + 1> logical_motion(const Perm &perm) {
    auto action = logical_action_of(perm);
    if (!action.is_permutation()) {
        throw std::logic_error("permutation does not permute logicals");
    }
    std::array<int, kNumLogical + 1> out{};
    for (int i = 0; i < kNumLogical; i++) {
        out[i + 1] = std::countr_zero((unsigned)action.x_image[i]) + 1;
    }
    return out;
}

ExperimentPlan path4_enc(Basis basis, const PlanOptions &opt) {
    ExperimentPlan e{"path4-enc", basis, true, {}};
    Program &p = e.program;
    auto b = p.add_block(opt.flavor == Flavor::TWO_FLAG ? 3 : 2);
    p.set_region("prep");
    prepare(p, b, PrepState::PLUS_ZERO);
    p.set_region("bell");
    permute_block(p, b, bell_perm());
    p.set_region("mb_cnot");
    // Measures X2X6, Z2Z5, X2.
    mb_cnot(p, b, 5, 6, 2, opt.flavor);
    p.set_region("read");
    Outputs outs;
    auto s = read_slots(p, basis, {3, 4, 5, 6}, outs, "");
    measure_transversal(p, b, basis, outs);
    // Path 3 - 6 - 5 - 4.
    if (basis == Basis::X) {
        add_slot_check(p, {s[3], s[6]}, "X3X6");
        add_slot_check(p, {s[6], s[5], s[4]}, "X6X5X4");
    } else {
        add_slot_check(p, {s[3], s[6], s[5]}, "Z3Z6Z5");
        add_slot_check(p, {s[5], s[4]}, "Z5Z4");
    }
    return e;
}

/// Unencoded circuits: every qubit measured in the setting's basis, checks over raw records.
std::vector<uint32_t> measure_all(Program &p, const std::vector<uint32_t> &qubits, Basis basis) {
    std::vector<uint32_t> r;
    for (auto q : qubits) {
        r.push_back(p.measure(basis, q, RecordRole::DATA, -1, std::string("m") + std::to_string(q)));
    }
    return r;
}

ExperimentPlan path4_base(Basis basis) {
    ExperimentPlan e{"path4-base", basis, false, {}};
    Program &p = e.program;
    p.add_qubits(4);
    p.op(Gate::RESET_X, {0});
    p.op(Gate::RESET_X, {1});
    p.op(Gate::RESET_Z, {2});
    p.op(Gate::RESET_Z, {3});
    p.op(Gate::CNOT, {1, 2});
    p.op(Gate::CNOT, {1, 3});
    p.op(Gate::CNOT, {0, 1});
    auto r = measure_all(p, {0, 1, 2, 3}, basis);
    if (basis == Basis::X) {
        add_record_check(p, {r[0], r[1]}, "XXII");
        add_record_check(p, {r[1], r[2], r[3]}, "IXXX");
    } else {
        add_record_check(p, {r[0], r[1], r[2]}, "ZZZI");
        add_record_check(p, {r[2], r[3]}, "IIZZ");
    }
    return e;
}

ExperimentPlan cube8_enc(Basis basis) {
    ExperimentPlan e{"cube8-enc", basis, true, {}};
    Program &p = e.program;
    auto a = p.add_block();
    auto b = p.add_block();
    p.set_region("prep");
    prepare(p, a, PrepState::ZERO_ZERO_PLUS);
    prepare(p, b, PrepState::PLUS_PLUS_ZERO);
    // content_at[pos] = which original target logical sits at position pos of block b.
    std::array<int, kNumLogical + 1> content_at{0, 1, 2, 3, 4, 5, 6};
    std::vector<std::pair<int, int>> edges;
    std::array<Perm, 3> perms{identity_perm(), swap_rows(1, 3), swap_cols(1, 3)};
    for (int round = 0; round < 3; round++) {
        if (round > 0) {
            p.set_region("ec" + std::to_string(round));
            ec_round(p, a);
            ec_round(p, b);
        }
        p.set_region("cnot" + std::to_string(round + 1));
        auto motion = logical_motion(perms[round]);
        std::array<int, kNumLogical + 1> moved{};
        for (int pos = 1; pos <= kNumLogical; pos++) {
            moved[motion[pos]] = content_at[pos];
        }
        content_at = moved;
        transversal_cnot(p, a, b, perms[round]);
        for (int l = 3; l <= 6; l++) {
            edges.push_back({l, content_at[l]});
        }
    }
    p.set_region("read");
    Outputs oa, ob;
    auto sa = read_slots(p, basis, {3, 4, 5, 6}, oa, "A.");
    auto sb = read_slots(p, basis, {3, 4, 5, 6}, ob, "B.");
    measure_transversal(p, a, basis, oa);
    measure_transversal(p, b, basis, ob);
    std::array<int, kNumLogical + 1> position_of{};
    for (int pos = 1; pos <= kNumLogical; pos++) {
        position_of[content_at[pos]] = pos;
    }
    // Control vertices carry X stabilizers, target vertices Z stabilizers.
    for (int v = 3; v <= 6; v++) {
        std::vector<int32_t> slots;
        std::string label = basis == Basis::X ? "XA" + std::to_string(v) : "ZB" + std::to_string(v);
        if (basis == Basis::X) {
            slots.push_back(sa[v]);
        } else {
            slots.push_back(sb[position_of[v]]);
        }
        for (auto [ctrl, tgt] : edges) {
            if (basis == Basis::X && ctrl == v) {
                slots.push_back(sb[position_of[tgt]]);
            } else if (basis == Basis::Z && tgt == v) {
                slots.push_back(sa[ctrl]);
            }
        }
        add_slot_check(p, slots, label);
    }
    return e;
}

ExperimentPlan cube8_base(Basis basis) {
    ExperimentPlan e{"cube8-base", basis, false, {}};
    Program &p = e.program;
    p.add_qubits(8);
    auto even = [](uint32_t v) {
        return std::popcount(v) % 2 == 0;
    };
    for (uint32_t v = 0; v < 8; v++) {
        p.op(even(v) ? Gate::RESET_X : Gate::RESET_Z, {v});
    }
    for (int axis : {2, 1, 0}) {
        for (uint32_t v = 0; v < 8; v++) {
            if (even(v)) {
                p.op(Gate::CNOT, {v, v ^ (1u << axis)});
            }
        }
    }
    auto r = measure_all(p, {0, 1, 2, 3, 4, 5, 6, 7}, basis);
    for (uint32_t v = 0; v < 8; v++) {
        if (even(v) == (basis == Basis::X)) {
            add_record_check(p, {r[v], r[v ^ 1], r[v ^ 2], r[v ^ 4]},
                             std::string(1, basis_char(basis)) + "v" + std::to_string(v));
        }
    }
    return e;
}

ExperimentPlan cat12_enc(Basis basis, const PlanOptions &opt) {
    ExperimentPlan e{"cat12-enc", basis, true, {}};
    Program &p = e.program;
    auto b0 = p.add_block(opt.flavor == Flavor::TWO_FLAG ? 3 : 2);
    auto b1 = p.add_block();
    auto b2 = p.add_block();
    p.set_region("prep");
    prepare(p, b0, PrepState::PLUS_ZERO);
    prepare(p, b1, PrepState::PLUS_PLUS_ZERO);
    prepare(p, b2, PrepState::PLUS_PLUS_ZERO);
    p.set_region("bell");
    permute_block(p, b0, bell_perm());
    p.set_region("merge");
    cat_merge(p, b0, opt.flavor);
    p.set_region("cnot");
    transversal_cnot(p, b0, b1);
    transversal_cnot(p, b0, b2);
    p.set_region("read");
    std::vector<int32_t> order;
    int k = 0;
    for (const auto *b : {&b0, &b1, &b2}) {
        Outputs outs;
        auto s = read_slots(p, basis, {3, 4, 5, 6}, outs, "b" + std::to_string(k++) + ".");
        measure_transversal(p, *b, basis, outs);
        for (int l = 3; l <= 6; l++) {
            order.push_back(s[l]);
        }
    }
    if (basis == Basis::X) {
        add_slot_check(p, order, "X^12");
    } else {
        for (size_t i = 0; i + 1 < order.size(); i++) {
            add_slot_check(p, {order[i], order[i + 1]}, "ZZ" + std::to_string(i));
        }
    }
    return e;
}

ExperimentPlan cat12_base(Basis basis) {
    // The dual cat state |+...+> + |-...->: the Hadamard conjugate of the 11 CNOT cat tree.
    ExperimentPlan e{"cat12-base", basis, false, {}};
    Program &p = e.program;
    p.add_qubits(12);
    p.op(Gate::RESET_Z, {0});
    for (uint32_t q = 1; q < 12; q++) {
        p.op(Gate::RESET_X, {q});
    }
    std::vector<std::pair<uint32_t, uint32_t>> tree{{0, 1}, {0, 2}, {1, 3}, {0, 4}, {1, 5}, {2, 6},
                                                    {3, 7}, {0, 8}, {1, 9}, {2, 10}, {3, 11}};
    for (auto [parent, child] : tree) {
        p.op(Gate::CNOT, {child, parent});
    }
    std::vector<uint32_t> qs(12);
    for (uint32_t q = 0; q < 12; q++) {
        qs[q] = q;
    }
    auto r = measure_all(p, qs, basis);
    if (basis == Basis::X) {
        for (size_t i = 0; i + 1 < r.size(); i++) {
            add_record_check(p, {r[i], r[i + 1]}, "XX" + std::to_string(i));
        }
    } else {
        add_record_check(p, r, "Z^12");
    }
    return e;
}

/// Cyclic teleportation through the code block: after preparing |+0+0+0>, measuring Z_1 and X_2 leaves
/// |0++0+0>. Each round teleports logical 3 into 1 and 4 into 2, then the 3-cycle automorphism rotates
/// the labels back.
void rep_ec_block(Program &p, const BlockHandle &b, int rounds, const std::string &prefix) {
    p.set_region(prefix + "prep");
    prepare(p, b, PrepState::PLUS_ZERO);
    std::array<std::array<int, 4>, 4> cols{}, x13{};
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            cols[i][j] = i + 4 * j;
        }
    }
    auto fam = disjoint_representatives(canonical_x(logicals({1, 3})));
    std::vector<Mask> col_masks;
    for (int c = 0; c < 4; c++) {
        col_masks.push_back(col_mask(c));
    }
    // The hook pair must straddle two columns once the 3-cycle has moved it.
    Perm back = inverse(pi_perm());
    for (auto &m : col_masks) {
        m = apply_perm(back, m);
    }
    x13 = ordered_family(fam, col_masks);
    p.set_region(prefix + "init");
    joint_groups(p, b, cols, prefix + "init", {0, canonical_z(logicals({2})), -1},
                 {canonical_x(logicals({1})), 0, -1});
    for (int r = 0; r < rounds; r++) {
        p.set_region(prefix + "round" + std::to_string(r));
        std::string tag = prefix + "r" + std::to_string(r);
        joint_groups(p, b, x13, tag + ".X1X3", {0, canonical_z(logicals({1})), -1},
                     {canonical_x(logicals({2})), 0, -1});
        permute_block(p, b, pi_perm());
        joint_groups(p, b, cols, tag + ".cols", {0, canonical_z(logicals({2, 6})), -1},
                     {canonical_x(logicals({1, 5})), 0, -1});
    }
}

void rep_ec_read(Program &p, const BlockHandle &b, const std::string &prefix) {
    p.set_region(prefix + "read");
    int32_t x3 = p.plan.add_slot(prefix + "X3");
    int32_t x5 = p.plan.add_slot(prefix + "X5");
    int32_t z4 = p.plan.add_slot(prefix + "Z4");
    int32_t z6 = p.plan.add_slot(prefix + "Z6");
    measure_split(p, b, {{0, 1}, {3, 2}},
                  {{x3, canonical_x(logicals({3}))}, {x5, canonical_x(logicals({5}))}},
                  {{z4, canonical_z(logicals({4}))}, {z6, canonical_z(logicals({6}))}});
    add_slot_check(p, {x3}, prefix + "X3");
    add_slot_check(p, {z4}, prefix + "Z4");
    add_slot_check(p, {x5}, prefix + "X5");
    add_slot_check(p, {z6}, prefix + "Z6");
}

ExperimentPlan rep_ec(int copies, const PlanOptions &opt) {
    ExperimentPlan e{copies == 1 ? "rep-ec-4" : "rep-ec-8", std::nullopt, true, {}};
    Program &p = e.program;
    std::vector<BlockHandle> blocks;
    for (int c = 0; c < copies; c++) {
        blocks.push_back(p.add_block());
    }
    for (int c = 0; c < copies; c++) {
        rep_ec_block(p, blocks[c], opt.rounds, copies == 1 ? "" : "b" + std::to_string(c) + ".");
    }
    if (copies > 1) {
        std::vector<uint32_t> data;
        for (const auto &b : blocks) {
            auto d = b.data();
            data.insert(data.end(), d.begin(), d.end());
        }
        p.op(Gate::BARRIER, data);
    }
    for (int c = 0; c < copies; c++) {
        rep_ec_read(p, blocks[c], copies == 1 ? "" : "b" + std::to_string(c) + ".");
    }
    return e;
}

/// Unencoded analogue of the repeated teleportation: six qubits in positions 1..6, data in 3..6, fresh
/// |0> at 1 and |+> at 2. Each round teleports 3 into 1 and 4 into 2 and relabels by (3,1,5)(4,2,6).
void teleport_copy(Program &p, uint32_t base, int rounds, const std::string &prefix, std::vector<uint32_t> &final_qubits,
                   std::vector<std::vector<uint32_t>> &content_records, std::vector<Basis> &content_basis) {
    std::array<uint32_t, 7> at{};
    for (int pos = 1; pos <= 6; pos++) {
        at[pos] = base + (uint32_t)pos - 1;
    }
    // content id per position; contents 0..3 start at positions 3, 5, 4, 6.
    std::array<int, 7> content{-1, -1, -1, 0, 2, 1, 3};
    content_basis = {Basis::X, Basis::X, Basis::Z, Basis::Z};
    content_records.assign(4, {});
    p.op(Gate::RESET_X, {at[3]});
    p.op(Gate::RESET_X, {at[5]});
    p.op(Gate::RESET_Z, {at[4]});
    p.op(Gate::RESET_Z, {at[6]});
    p.op(Gate::RESET_Z, {at[1]});
    p.op(Gate::RESET_X, {at[2]});
    const std::array<int, 7> sigma{0, 5, 6, 1, 2, 3, 4};
    for (int r = 0; r < rounds; r++) {
        std::string tag = prefix + "r" + std::to_string(r);
        p.op(Gate::CNOT, {at[3], at[1]});
        p.op(Gate::CNOT, {at[2], at[4]});
        uint32_t mx = p.measure(Basis::X, at[3], RecordRole::DATA, -1, tag + ".mx");
        uint32_t mz = p.measure(Basis::Z, at[4], RecordRole::DATA, -1, tag + ".mz");
        content_records[content[3]].push_back(mx);
        content_records[content[4]].push_back(mz);
        content[1] = content[3];
        content[2] = content[4];
        content[3] = content[4] = -1;
        p.op(Gate::RESET_Z, {at[3]});
        p.op(Gate::RESET_X, {at[4]});
        std::array<uint32_t, 7> at2{};
        std::array<int, 7> content2{};
        for (int pos = 1; pos <= 6; pos++) {
            at2[sigma[pos]] = at[pos];
            content2[sigma[pos]] = content[pos];
        }
        at = at2;
        content = content2;
    }
    final_qubits.assign(4, 0);
    for (int pos = 3; pos <= 6; pos++) {
        final_qubits[content[pos]] = at[pos];
    }
}

ExperimentPlan teleport_base(int copies, const PlanOptions &opt) {
    ExperimentPlan e{copies == 1 ? "teleport-base-1" : "teleport-base-2", std::nullopt, false, {}};
    Program &p = e.program;
    struct Copy {
        std::vector<uint32_t> final_qubits;
        std::vector<std::vector<uint32_t>> records;
        std::vector<Basis> basis;
    };
    std::vector<Copy> cs(copies);
    for (int c = 0; c < copies; c++) {
        uint32_t base = p.add_qubits(6);
        teleport_copy(p, base, opt.rounds, "c" + std::to_string(c) + ".", cs[c].final_qubits, cs[c].records,
                      cs[c].basis);
    }
    if (copies > 1) {
        std::vector<uint32_t> all;
        for (const auto &c : cs) {
            all.insert(all.end(), c.final_qubits.begin(), c.final_qubits.end());
        }
        p.op(Gate::BARRIER, all);
    }
    for (int c = 0; c < copies; c++) {
        for (int k = 0; k < 4; k++) {
            auto &cp = cs[c];
            uint32_t r = p.measure(cp.basis[k], cp.final_qubits[k], RecordRole::DATA, -1,
                                   "c" + std::to_string(c) + ".final" + std::to_string(k));
            auto recs = cp.records[k];
            recs.push_back(r);
            add_record_check(p, recs, "c" + std::to_string(c) + "." + basis_char(cp.basis[k]) + std::to_string(k));
        }
    }
    return e;
}

}  // namespace

const std::vector<std::string> &tess::plan_names() {
    static const std::vector<std::string> names{
        "path4-enc", "path4-base", "cube8-enc", "cube8-base", "cat12-enc", "cat12-base",
        "rep-ec-4",  "rep-ec-8",   "teleport-base-1", "teleport-base-2"};
    return names;
}

std::vector<std::optional<Basis>> tess::plan_settings(const std::string &name) {
    const auto &names = plan_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) {
        throw std::invalid_argument("unknown plan '" + name + "'");
    }
    if (name.rfind("rep-ec", 0) == 0 || name.rfind("teleport", 0) == 0) {
        return {std::nullopt};
    }
    return {Basis::X, Basis::Z};
}

ExperimentPlan tess::build_plan(const std::string &name, std::optional<Basis> basis, const PlanOptions &options) {
    auto settings = plan_settings(name);
    if (std::find(settings.begin(), settings.end(), basis) == settings.end()) {
        throw std::invalid_argument("plan '" + name + "' does not support basis " +
                                    (basis.has_value() ? std::string(1, basis_char(*basis)) : std::string("-")));
    }
    if (options.rounds < 0) {
        throw std::invalid_argument("rounds must be non-negative");
    }
    ExperimentPlan e;
    if (name == "path4-enc") {
        e = path4_enc(*basis, options);
    } else if (name == "path4-base") {
        e = path4_base(*basis);
    } else if (name == "cube8-enc") {
        e = cube8_enc(*basis);
    } else if (name == "cube8-base") {
        e = cube8_base(*basis);
    } else if (name == "cat12-enc") {
        e = cat12_enc(*basis, options);
    } else if (name == "cat12-base") {
        e = cat12_base(*basis);
    } else if (name == "rep-ec-4") {
        e = rep_ec(1, options);
    } else if (name == "rep-ec-8") {
        e = rep_ec(2, options);
    } else if (name == "teleport-base-1") {
        e = teleport_base(1, options);
    } else {
        e = teleport_base(2, options);
    }
    e.program.finalize();
    return e;
}
