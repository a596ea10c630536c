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

#include "tesseract/targets.h"

#include <algorithm>
#include <stdexcept>

#include "tesseract/experiments.h"

using namespace tess;
using namespace tess::code;

namespace {

void check_slots(Program &p, const std::vector<int32_t> &slots, const std::string &label) {
    Check c;
    c.slots = slots;
    c.label = label;
    p.add_check(c);
}

/// Transversal read of `b` with one slot per logical product; each product must read 0.
void read_and_check(Program &p, const BlockHandle &b, Basis basis, const std::vector<std::vector<int>> &products,
                    const std::string &prefix = "") {
    std::vector<std::pair<int32_t, Mask>> outs;
    for (const auto &prod : products) {
        LogicalSet s = 0;
        std::string label = prefix + basis_char(basis);
        for (int l : prod) {
            s |= logicals({l});
            label += std::to_string(l);
        }
        int32_t slot = p.plan.add_slot(label);
        outs.push_back({slot, basis == Basis::X ? canonical_x(s) : canonical_z(s)});
        check_slots(p, {slot}, label);
    }
    measure_transversal(p, b, basis, outs);
}

VerificationTarget prep_target(PrepState state, Basis basis) {
    VerificationTarget t;
    t.name = std::string("prep/") + prep_state_name(state) + "/" + basis_char(basis);
    t.fault_regions = {"gadget"};
    Program &p = t.program;
    auto b = p.add_block();
    p.set_region("gadget");
    prepare(p, b, state);
    p.set_region("read");
    std::vector<std::vector<int>> x, z;
    switch (state) {
        case PrepState::PLUS_ZERO:
            x = {{1}, {3}, {5}};
            z = {{2}, {4}, {6}};
            break;
        case PrepState::PLUS_PLUS_ZERO:
            x = {{1}, {2}};
            z = {{3}, {4}, {5}, {6}};
            break;
        case PrepState::ZERO_ZERO_PLUS:
            x = {{3}, {4}, {5}, {6}};
            z = {{1}, {2}};
            break;
    }
    read_and_check(p, b, basis, basis == Basis::X ? x : z);
    return t;
}

/// Logical measurement of X3 (or Z4) on |+0+0+0> with the given flavor, then a readout in the other basis.
VerificationTarget w4_target(Flavor flavor, Basis basis) {
    VerificationTarget t;
    t.name = std::string("measure_w4/") + flavor_name(flavor) + "/" + basis_char(basis);
    t.fault_regions = {"gadget"};
    Program &p = t.program;
    auto b = p.add_block(flavor == Flavor::TWO_FLAG ? 3 : 2);
    p.set_region("prep");
    prepare(p, b, PrepState::PLUS_ZERO);
    p.set_region("gadget");
    LogicalMeasureSpec spec;
    spec.basis = basis;
    spec.flavor = flavor;
    Mask m = basis == Basis::X ? canonical_x(logicals({3})) : canonical_z(logicals({4}));
    spec.reps = ordered_family(disjoint_representatives(m));
    spec.target.slot = p.plan.add_slot(basis == Basis::X ? "X3" : "Z4");
    spec.label = basis == Basis::X ? "X3" : "Z4";
    logical_measure(p, b, spec);
    check_slots(p, {spec.target.slot}, spec.label);
    p.set_region("read");
    if (basis == Basis::X) {
        read_and_check(p, b, Basis::Z, {{2}, {4}, {6}});
    } else {
        read_and_check(p, b, Basis::X, {{1}, {3}, {5}});
    }
    return t;
}

VerificationTarget ec_target(Basis basis) {
    VerificationTarget t;
    t.name = std::string("ec_round/") + basis_char(basis);
    t.fault_regions = {"gadget"};
    Program &p = t.program;
    auto b = p.add_block();
    p.set_region("prep");
    prepare(p, b, PrepState::PLUS_ZERO);
    p.set_region("gadget");
    ec_round(p, b);
    p.set_region("read");
    if (basis == Basis::X) {
        read_and_check(p, b, Basis::X, {{3}, {5}});
    } else {
        read_and_check(p, b, Basis::Z, {{4}, {6}});
    }
    return t;
}

VerificationTarget mb_cnot_target(Basis basis) {
    VerificationTarget t;
    t.name = std::string("mb_cnot/") + basis_char(basis);
    t.fault_regions = {"mb_cnot"};
    t.program = std::move(build_plan("path4-enc", basis).program);
    return t;
}

VerificationTarget cat_merge_target(Basis basis) {
    VerificationTarget t;
    t.name = std::string("cat_merge/") + basis_char(basis);
    t.fault_regions = {"gadget"};
    Program &p = t.program;
    auto b = p.add_block();
    p.set_region("prep");
    prepare(p, b, PrepState::PLUS_ZERO);
    permute_block(p, b, bell_perm());
    p.set_region("gadget");
    cat_merge(p, b);
    p.set_region("read");
    if (basis == Basis::X) {
        read_and_check(p, b, Basis::X, {{3, 4, 5, 6}});
    } else {
        read_and_check(p, b, Basis::Z, {{3, 4}, {4, 5}, {5, 6}});
    }
    return t;
}

/// |+0+0+0> into |++0000> through one transversal CNOT.
VerificationTarget cnot_target(Basis basis) {
    VerificationTarget t;
    t.name = std::string("transversal_cnot/") + basis_char(basis);
    t.fault_regions = {"gadget"};
    Program &p = t.program;
    auto c = p.add_block();
    auto g = p.add_block();
    p.set_region("prep");
    prepare(p, c, PrepState::PLUS_ZERO);
    prepare(p, g, PrepState::PLUS_PLUS_ZERO);
    p.set_region("gadget");
    transversal_cnot(p, c, g);
    p.set_region("read");
    std::vector<std::pair<int32_t, Mask>> oc, og;
    auto slot = [&](std::vector<std::pair<int32_t, Mask>> &outs, const std::string &label, int l) {
        int32_t s = p.plan.add_slot(label);
        outs.push_back({s, basis == Basis::X ? canonical_x(logicals({l})) : canonical_z(logicals({l}))});
        return s;
    };
    if (basis == Basis::X) {
        for (int l : {3, 5}) {
            int32_t a = slot(oc, "c.X" + std::to_string(l), l);
            int32_t b = slot(og, "t.X" + std::to_string(l), l);
            check_slots(p, {a, b}, "X" + std::to_string(l) + "X" + std::to_string(l));
        }
    } else {
        for (int l : {4, 6}) {
            check_slots(p, {slot(oc, "c.Z" + std::to_string(l), l)}, "c.Z" + std::to_string(l));
            check_slots(p, {slot(og, "t.Z" + std::to_string(l), l)}, "t.Z" + std::to_string(l));
        }
        for (int l : {3, 5}) {
            int32_t a = slot(oc, "c.Z" + std::to_string(l), l);
            int32_t b = slot(og, "t.Z" + std::to_string(l), l);
            check_slots(p, {a, b}, "Z" + std::to_string(l) + "Z" + std::to_string(l));
        }
    }
    measure_transversal(p, c, basis, oc);
    measure_transversal(p, g, basis, og);
    return t;
}

VerificationTarget plan_target(const std::string &name, const std::string &plan, std::optional<Basis> basis) {
    VerificationTarget t;
    t.name = name;
    t.program = std::move(build_plan(plan, basis).program);
    return t;
}

}  // namespace

const std::vector<std::string> &tess::target_names() {
    static const std::vector<std::string> names{
        "prep/plus_zero/X",        "prep/plus_zero/Z",       "prep/plus_plus_zero/X", "prep/plus_plus_zero/Z",
        "prep/zero_zero_plus/X",   "prep/zero_zero_plus/Z",  "measure_w4/one_flag/X", "measure_w4/one_flag/Z",
        "measure_w4/two_flag/X",   "measure_w4/two_flag/Z",  "ec_round/X",            "ec_round/Z",
        "mb_cnot/X",               "mb_cnot/Z",              "cat_merge/X",           "cat_merge/Z",
        "transversal_cnot/X",      "transversal_cnot/Z",     "path4/X",               "path4/Z",
        "cube8/X",                 "cube8/Z",                "cat12/X",               "cat12/Z",
        "rep-ec-4",
    };
    return names;
}

const std::vector<std::string> &tess::order2_target_names() {
    static const std::vector<std::string> names{
        "ec_round/X", "ec_round/Z", "measure_w4/one_flag/X", "measure_w4/one_flag/Z", "measure_w4/two_flag/X",
        "measure_w4/two_flag/Z", "mb_cnot/X", "mb_cnot/Z", "path4/X", "path4/Z",
    };
    return names;
}

VerificationTarget tess::build_target(const std::string &name) {
    auto slash = name.rfind('/');
    std::string head = slash == std::string::npos ? name : name.substr(0, slash);
    std::string tail = slash == std::string::npos ? "" : name.substr(slash + 1);
    Basis basis = tail == "Z" ? Basis::Z : Basis::X;
    const auto &names = target_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) {
        throw std::invalid_argument("unknown verification target '" + name + "'");
    }
    VerificationTarget t;
    if (head == "prep/plus_zero") {
        t = prep_target(PrepState::PLUS_ZERO, basis);
    } else if (head == "prep/plus_plus_zero") {
        t = prep_target(PrepState::PLUS_PLUS_ZERO, basis);
    } else if (head == "prep/zero_zero_plus") {
        t = prep_target(PrepState::ZERO_ZERO_PLUS, basis);
    } else if (head == "measure_w4/one_flag") {
        t = w4_target(Flavor::ONE_FLAG, basis);
    } else if (head == "measure_w4/two_flag") {
        t = w4_target(Flavor::TWO_FLAG, basis);
    } else if (head == "ec_round") {
        t = ec_target(basis);
    } else if (head == "mb_cnot") {
        t = mb_cnot_target(basis);
    } else if (head == "cat_merge") {
        t = cat_merge_target(basis);
    } else if (head == "transversal_cnot") {
        t = cnot_target(basis);
    } else if (head == "path4") {
        t = plan_target(name, "path4-enc", basis);
    } else if (head == "cube8") {
        t = plan_target(name, "cube8-enc", basis);
    } else if (head == "cat12") {
        t = plan_target(name, "cat12-enc", basis);
    } else {
        t = plan_target(name, "rep-ec-4", std::nullopt);
    }
    t.name = name;
    t.program.finalize();
    return t;
}
