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

#include "tesseract/decoder.h"

#include <bit>
#include <sstream>
#include <stdexcept>

using namespace tess;
using namespace tess::code;

const char *tess::role_name(RecordRole r) {
    switch (r) {
        case RecordRole::PREP_CHECK:
            return "prep_check";
        case RecordRole::SYNDROME:
            return "syndrome";
        case RecordRole::FLAG:
            return "flag";
        case RecordRole::DATA:
            return "data";
    }
    return "?";
}

const char *tess::flavor_name(Flavor f) {
    switch (f) {
        case Flavor::NON_FT:
            return "nonft";
        case Flavor::ONE_FLAG:
            return "one-flag";
        case Flavor::TWO_FLAG:
            return "two-flag";
        case Flavor::JOINT:
            return "joint";
    }
    return "?";
}

const char *tess::verdict_name(Verdict v) {
    switch (v) {
        case Verdict::ACCEPTED:
            return "accepted";
        case Verdict::PRE_REJECTED:
            return "prerejected";
        case Verdict::POST_REJECTED:
            return "postrejected";
    }
    return "?";
}

int32_t DecodePlan::add_slot(std::string label) {
    slot_labels.push_back(std::move(label));
    return (int32_t)slot_labels.size() - 1;
}

namespace {

inline bool parity(uint32_t m) {
    return std::popcount(m) & 1;
}

template <typename F>
void for_each_record(DecodePlan &plan, F &&f) {
    for (auto &step : plan.steps) {
        if (auto *p = std::get_if<PrepCheckStep>(&step)) {
            for (auto &r : p->records) {
                f(r);
            }
        } else if (auto *g = std::get_if<GroupStep>(&step)) {
            for (auto &rep : g->reps) {
                f(rep.record);
                if (rep.flag0 >= 0) {
                    uint32_t r = (uint32_t)rep.flag0;
                    f(r);
                    rep.flag0 = r;
                }
                if (rep.flag1 >= 0) {
                    uint32_t r = (uint32_t)rep.flag1;
                    f(r);
                    rep.flag1 = r;
                }
            }
        } else if (auto *t = std::get_if<TransversalReadStep>(&step)) {
            for (auto &r : t->records) {
                f(r);
            }
        } else if (auto *s = std::get_if<SplitReadStep>(&step)) {
            for (auto &side : s->sides) {
                for (auto &r : side.records) {
                    f(r);
                }
            }
        }
    }
    for (auto &c : plan.checks) {
        for (auto &r : c.records) {
            f(r);
        }
    }
}

std::string bits_str(const std::array<uint8_t, 4> &m) {
    std::string s;
    for (auto b : m) {
        s.push_back(b ? '1' : '0');
    }
    return s;
}

// Row and column parity vectors of a 16 bit pattern, each taken modulo the all-ones vector.
uint8_t grid_syndrome(Mask m) {
    uint8_t rows = 0;
    uint8_t cols = 0;
    for (int k = 0; k < 4; k++) {
        rows |= (uint8_t)(parity(m & row_mask(k)) << k);
        cols |= (uint8_t)(parity(m & col_mask(k)) << k);
    }
    if (rows & 1) {
        rows ^= 0xF;
    }
    if (cols & 1) {
        cols ^= 0xF;
    }
    return (uint8_t)(rows | (cols << 4));
}

}  // namespace

void DecodePlan::remap_records(const std::vector<uint32_t> &map) {
    for_each_record(*this, [&](uint32_t &r) {
        r = map.at(r);
    });
    std::vector<RecordInfo> moved(records.size());
    for (size_t k = 0; k < records.size(); k++) {
        moved[map.at(k)] = records[k];
    }
    records = std::move(moved);
}

void DecodePlan::validate(uint32_t num_records) const {
    if (records.size() != num_records) {
        throw std::invalid_argument("decode plan classifies " + std::to_string(records.size()) + " records, circuit has " +
                                    std::to_string(num_records));
    }
    DecodePlan copy = *this;
    for_each_record(copy, [&](uint32_t &r) {
        if (r >= num_records) {
            throw std::invalid_argument("decode plan references a missing record");
        }
    });
    std::vector<std::vector<Flag>> possible_x(num_blocks), possible_z(num_blocks);
    auto check_crossing = [](const std::vector<Flag> &flags, const GroupStep &g) {
        for (const auto &f : flags) {
            for (const auto &rep : g.reps) {
                if (std::popcount((unsigned)(f.support & rep.support)) != 1) {
                    throw std::invalid_argument(
                        "group '" + g.label + "' cannot consume flag on " + mask_str(f.support) + ": rep " +
                        mask_str(rep.support) + " does not cross it once");
                }
            }
        }
    };
    for (const auto &step : steps) {
        if (auto *g = std::get_if<GroupStep>(&step)) {
            auto &consume = g->basis == Basis::X ? possible_z[g->block] : possible_x[g->block];
            check_crossing(consume, *g);
            consume.clear();
            if (g->ec_rule) {
                for (const auto &rep : g->reps) {
                    consume.push_back({rep.support, rep.hook_pair});
                }
            }
            auto &raise = g->basis == Basis::X ? possible_x[g->block] : possible_z[g->block];
            for (const auto &rep : g->reps) {
                if (rep.flavor == Flavor::ONE_FLAG) {
                    raise.push_back({rep.support, rep.hook_pair});
                }
            }
        } else if (auto *p = std::get_if<PermuteStep>(&step)) {
            for (auto *v : {&possible_x[p->block], &possible_z[p->block]}) {
                for (auto &f : *v) {
                    f.support = apply_perm(p->perm, f.support);
                    f.pair = apply_perm(p->perm, f.pair);
                }
            }
        } else if (auto *c = std::get_if<CnotStep>(&step)) {
            auto cx = possible_x[c->control];
            possible_x[c->target].insert(possible_x[c->target].end(), cx.begin(), cx.end());
            auto tz = possible_z[c->target];
            possible_z[c->control].insert(possible_z[c->control].end(), tz.begin(), tz.end());
        }
    }
}

std::optional<Mask> tess::transversal_correction(Mask bits, const std::optional<Flag> &flag) {
    uint8_t target = grid_syndrome(bits);
    if (target == 0) {
        return Mask{0};
    }
    Mask singles = flag.has_value() ? flag->support : (Mask)0xFFFF;
    for (int q = 0; q < kNumQubits; q++) {
        if (((singles >> q) & 1) && grid_syndrome((Mask)(1u << q)) == target) {
            return (Mask)(1u << q);
        }
    }
    if (flag.has_value() && grid_syndrome(flag->pair) == target) {
        return flag->pair;
    }
    return std::nullopt;
}

SplitSide tess::make_split_side(
    Basis basis,
    std::vector<Mask> pair_supports,
    std::vector<uint32_t> records,
    const std::vector<std::pair<int32_t, Mask>> &outputs) {
    SplitSide side;
    side.basis = basis;
    size_t n = pair_supports.size();
    if (n > 16 || records.size() != n) {
        throw std::invalid_argument("make_split_side: bad sizes");
    }
    auto union_of = [&](uint32_t u) {
        Mask m = 0;
        for (size_t k = 0; k < n; k++) {
            if ((u >> k) & 1) {
                m ^= pair_supports[k];
            }
        }
        return m;
    };
    // Basis of the readable stabilizers by elimination over the pair-bit vectors.
    std::vector<uint32_t> basis_vecs;
    for (uint32_t u = 1; u < (1u << n); u++) {
        if (!in_stabilizer(union_of(u))) {
            continue;
        }
        uint32_t v = u;
        for (uint32_t b : basis_vecs) {
            v = std::min(v, v ^ b);
        }
        if (v) {
            basis_vecs.push_back(v);
            std::sort(basis_vecs.rbegin(), basis_vecs.rend());
        }
    }
    side.checks = basis_vecs;
    side.syndrome_fix.assign((size_t)1 << side.checks.size(), -1);
    std::vector<int> hits(side.syndrome_fix.size(), 0);
    for (size_t k = 0; k < n; k++) {
        uint32_t s = 0;
        for (size_t c = 0; c < side.checks.size(); c++) {
            s |= ((side.checks[c] >> k) & 1) << c;
        }
        if (s) {
            hits[s]++;
            side.syndrome_fix[s] = (int)k;
        }
    }
    for (size_t s = 0; s < hits.size(); s++) {
        if (hits[s] > 1) {
            side.syndrome_fix[s] = -1;
        }
    }
    for (const auto &[slot, mask] : outputs) {
        uint32_t u = 0;
        for (size_t k = 0; k < n; k++) {
            if ((pair_supports[k] & mask) == pair_supports[k]) {
                u |= 1u << k;
            }
        }
        if (union_of(u) != mask) {
            throw std::invalid_argument("split output " + mask_str(mask) + " is not a union of pairs");
        }
        side.outputs.push_back({slot, u});
    }
    side.pair_supports = std::move(pair_supports);
    side.records = std::move(records);
    return side;
}

GroupOutcome tess::process_group(
    const GroupStep &g, const BitVec &record, BlockFrame &f, std::vector<TraceEvent> *trace, std::string *reject_reason) {
    auto note = [&](const char *kind, int32_t block, const std::string &detail) {
        if (trace != nullptr) {
            trace->push_back({kind, block, detail});
        }
    };
    auto reject = [&](int32_t block, const std::string &why) -> GroupOutcome {
        if (reject_reason != nullptr) {
            *reject_reason = why;
        }
        note("reject", block, why);
        return {true, 0};
    };
    auto rec = [&](int64_t r) {
        return record.get((size_t)r);
    };
    auto toggle = [&](BlockFrame &fr, bool x_type, Mask m, int32_t block, const char *why) {
        if (m == 0) {
            return;
        }
        (x_type ? fr.fx : fr.fz) ^= m;
        note("frame_toggle", block, std::string(x_type ? "X" : "Z") + mask_str(m) + " " + why);
    };
    int32_t b = (int32_t)g.block;
    bool x_basis = g.basis == Basis::X;
    // X outcomes are flipped by Z errors and vice versa.
    const Mask &anti = x_basis ? f.fz : f.fx;
    std::optional<Flag> &consume = x_basis ? f.flag_z : f.flag_x;
    std::optional<Flag> &raise = x_basis ? f.flag_x : f.flag_z;
    bool pending_at_start = f.flag_x.has_value() || f.flag_z.has_value();

    std::array<uint8_t, 4> m{};
    for (int k = 0; k < 4; k++) {
        m[k] = rec(g.reps[k].record) ^ parity(g.reps[k].support & anti);
    }
    note("group", b, g.label + " " + basis_char(g.basis) + " outcomes=" + bits_str(m));

    for (const auto &rep : g.reps) {
        if (rep.flavor == Flavor::TWO_FLAG && rec(rep.flag0) && rec(rep.flag1)) {
            // The ancilla spreads errors of the measured type; the fix commutes with the measurement.
            toggle(f, x_basis, rep.two_flag_fix, b, "two-flag fix");
        }
    }

    int sum = m[0] + m[1] + m[2] + m[3];
    bool consumed = false;
    if (consume.has_value()) {
        const Flag fl = *consume;
        consume.reset();
        consumed = true;
        note("flag_consume", b, std::string(x_basis ? "Z" : "X") + mask_str(fl.support));
        if (sum == 1 || sum == 3) {
            int odd = 0;
            for (int k = 0; k < 4; k++) {
                if ((sum == 1) == (m[k] == 1)) {
                    odd = k;
                }
            }
            toggle(f, !x_basis, fl.support & g.reps[odd].support, b, "flag single");
            m[odd] ^= 1;
        } else if (sum == 2) {
            Mask cross = 0;
            for (int k = 0; k < 4; k++) {
                if (m[k] == m[0]) {
                    cross |= fl.support & g.reps[k].support;
                }
            }
            if (cross != fl.pair && cross != (Mask)(fl.support ^ fl.pair)) {
                return reject(b, g.label + ": disagreement not explained by flag");
            }
            toggle(f, !x_basis, cross, b, "flag pair");
            uint8_t first = m[0];
            for (int k = 0; k < 4; k++) {
                if (m[k] == first) {
                    m[k] ^= 1;
                }
            }
        }
    } else if (sum == 2) {
        return reject(b, g.label + ": tie");
    }
    sum = m[0] + m[1] + m[2] + m[3];
    uint8_t value = sum >= 3 ? 1 : 0;

    if (g.ec_rule) {
        if (!consumed && (sum == 1 || sum == 3)) {
            for (int k = 0; k < 4; k++) {
                if (m[k] != value) {
                    consume = Flag{g.reps[k].support, g.reps[k].hook_pair};
                    note("flag_raise", b, std::string(x_basis ? "Z" : "X") + mask_str(g.reps[k].support));
                }
            }
        }
    } else {
        int raised = -1;
        int count = 0;
        for (int k = 0; k < 4; k++) {
            if (g.reps[k].flavor == Flavor::ONE_FLAG && rec(g.reps[k].flag0)) {
                raised = k;
                count++;
            }
        }
        if (count > 1) {
            return reject(b, g.label + ": two flags in one group");
        }
        if (count == 1) {
            if (pending_at_start || raise.has_value()) {
                return reject(b, g.label + ": flag raised while another is pending");
            }
            raise = Flag{g.reps[raised].support, g.reps[raised].hook_pair};
            note("flag_raise", b, std::string(x_basis ? "X" : "Z") + mask_str(g.reps[raised].support));
        }
    }

    note("group_value", b, g.label + "=" + std::to_string(value));
    if (value) {
        toggle(f, true, g.fix_x, b, "conditional correction");
        toggle(f, false, g.fix_z, b, "conditional correction");
    }
    return {false, value};
}


namespace {

struct Decoder {
    const DecodePlan &plan;
    const BitVec &record;
    std::vector<TraceEvent> *trace;
    std::vector<BlockFrame> frames;
    DecodeResult result;

    void note(const char *kind, int32_t block, const std::string &detail) {
        if (trace != nullptr) {
            trace->push_back({kind, block, detail});
        }
    }
    bool reject(Verdict v, int32_t block, const std::string &why) {
        result.verdict = v;
        result.reject_reason = why;
        note("reject", block, why);
        return false;
    }
    bool rec(int64_t r) const {
        return record.get((size_t)r);
    }
    void toggle(BlockFrame &f, bool x_type, Mask m, int32_t block, const char *why) {
        if (m == 0) {
            return;
        }
        (x_type ? f.fx : f.fz) ^= m;
        note("frame_toggle", block, std::string(x_type ? "X" : "Z") + mask_str(m) + " " + why);
    }

    bool run_group(const GroupStep &g) {
        std::string why;
        auto out = process_group(g, record, frames[g.block], trace, &why);
        if (out.rejected) {
            result.verdict = Verdict::POST_REJECTED;
            result.reject_reason = why;
            return false;
        }
        if (g.slot >= 0) {
            result.slots[g.slot] = (int8_t)out.value;
        }
        return true;
    }

    bool run_transversal(const TransversalReadStep &t) {
        BlockFrame &f = frames[t.block];
        int32_t b = (int32_t)t.block;
        bool x_basis = t.basis == Basis::X;
        Mask bits = 0;
        for (int q = 0; q < kNumQubits; q++) {
            bits |= (Mask)(rec(t.records[q]) << q);
        }
        bits ^= x_basis ? f.fz : f.fx;
        const auto &flag = x_basis ? f.flag_z : f.flag_x;
        auto corr = transversal_correction(bits, flag);
        if (!corr.has_value()) {
            return reject(Verdict::POST_REJECTED, b, std::string("transversal ") + basis_char(t.basis) + " read: uncorrectable");
        }
        if (*corr) {
            note("read_correction", b, mask_str(*corr));
        }
        bits ^= *corr;
        for (const auto &o : t.outputs) {
            result.slots[o.slot] = (int8_t)parity(bits & o.support);
        }
        return true;
    }

    bool run_split(const SplitReadStep &s) {
        BlockFrame &f = frames[s.block];
        int32_t b = (int32_t)s.block;
        for (const auto &side : s.sides) {
            Mask anti = side.basis == Basis::X ? f.fz : f.fx;
            uint32_t bits = 0;
            for (size_t k = 0; k < side.records.size(); k++) {
                bits |= (uint32_t)(rec(side.records[k]) ^ parity(anti & side.pair_supports[k])) << k;
            }
            uint32_t syn = 0;
            for (size_t c = 0; c < side.checks.size(); c++) {
                syn |= (uint32_t)parity(side.checks[c] & bits) << c;
            }
            if (syn) {
                int fix = side.syndrome_fix[syn];
                if (fix < 0) {
                    return reject(Verdict::POST_REJECTED, b, std::string("split ") + basis_char(side.basis) + " read: uncorrectable");
                }
                bits ^= 1u << fix;
                note("read_correction", b, std::string("pair ") + std::to_string(fix));
            }
            for (const auto &[slot, u] : side.outputs) {
                result.slots[slot] = (int8_t)parity(bits & u);
            }
        }
        return true;
    }

    bool run_cnot(const CnotStep &c) {
        BlockFrame &C = frames[c.control];
        BlockFrame &T = frames[c.target];
        T.fx ^= C.fx;
        C.fz ^= T.fz;
        if (C.flag_x.has_value()) {
            if (T.flag_x.has_value()) {
                return reject(Verdict::POST_REJECTED, (int32_t)c.target, "X flag collision at transversal CNOT");
            }
            T.flag_x = C.flag_x;
            note("flag_copy", (int32_t)c.target, "X" + mask_str(C.flag_x->support));
        }
        if (T.flag_z.has_value()) {
            if (C.flag_z.has_value()) {
                return reject(Verdict::POST_REJECTED, (int32_t)c.control, "Z flag collision at transversal CNOT");
            }
            C.flag_z = T.flag_z;
            note("flag_copy", (int32_t)c.control, "Z" + mask_str(T.flag_z->support));
        }
        return true;
    }

    void run_permute(const PermuteStep &p) {
        BlockFrame &f = frames[p.block];
        f.fx = apply_perm(p.perm, f.fx);
        f.fz = apply_perm(p.perm, f.fz);
        for (auto *fl : {&f.flag_x, &f.flag_z}) {
            if (fl->has_value()) {
                (*fl)->support = apply_perm(p.perm, (*fl)->support);
                (*fl)->pair = apply_perm(p.perm, (*fl)->pair);
            }
        }
    }

    bool run() {
        for (const auto &step : plan.steps) {
            bool ok = true;
            if (auto *p = std::get_if<PrepCheckStep>(&step)) {
                for (auto r : p->records) {
                    if (rec(r)) {
                        return reject(Verdict::PRE_REJECTED, (int32_t)p->block, "preparation check fired");
                    }
                }
            } else if (auto *g = std::get_if<GroupStep>(&step)) {
                ok = run_group(*g);
            } else if (auto *pm = std::get_if<PermuteStep>(&step)) {
                run_permute(*pm);
            } else if (auto *c = std::get_if<CnotStep>(&step)) {
                ok = run_cnot(*c);
            } else if (auto *t = std::get_if<TransversalReadStep>(&step)) {
                ok = run_transversal(*t);
            } else if (auto *s = std::get_if<SplitReadStep>(&step)) {
                ok = run_split(*s);
            }
            if (!ok) {
                return false;
            }
        }
        return true;
    }
};

}  // namespace

DecodeResult tess::decode(const DecodePlan &plan, const BitVec &record, std::vector<TraceEvent> *trace) {
    Decoder d{plan, record, trace, std::vector<BlockFrame>(plan.num_blocks), {}};
    d.result.slots.assign(plan.slot_labels.size(), -1);
    if (!d.run()) {
        return std::move(d.result);
    }
    for (const auto &c : plan.checks) {
        bool v = c.expected;
        for (auto s : c.slots) {
            if (d.result.slots[s] < 0) {
                throw std::logic_error("check reads an unset slot");
            }
            v ^= d.result.slots[s] != 0;
        }
        for (auto r : c.records) {
            v ^= record.get(r);
        }
        if (v) {
            d.result.logical_error = true;
            d.note("check_failed", -1, c.label);
        }
    }
    return std::move(d.result);
}
