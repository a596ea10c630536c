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

#include "tesseract/verifier.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <thread>
#include <unordered_map>

#include "json.hpp"
#include "tesseract/propagation.h"
#include "tesseract/rng.h"
#include "tesseract/tableau.h"

using namespace tess;
using namespace tess::code;

const char *tess::fault_class_name(FaultClass c) {
    switch (c) {
        case FaultClass::ACCEPTED_CORRECT:
            return "accepted_correct";
        case FaultClass::PRE_REJECTED:
            return "prerejected";
        case FaultClass::POST_REJECTED:
            return "postrejected";
        case FaultClass::LOGICAL_ERROR:
            return "accepted_logical_error";
    }
    return "?";
}

FaultClass tess::classify(const DecodeResult &r) {
    switch (r.verdict) {
        case Verdict::PRE_REJECTED:
            return FaultClass::PRE_REJECTED;
        case Verdict::POST_REJECTED:
            return FaultClass::POST_REJECTED;
        case Verdict::ACCEPTED:
            break;
    }
    return r.logical_error ? FaultClass::LOGICAL_ERROR : FaultClass::ACCEPTED_CORRECT;
}

std::string Tally::to_json() const {
    nlohmann::ordered_json j;
    j["order"] = order;
    j["sampled"] = sampled;
    j["locations"] = locations;
    j["distinct_effects"] = distinct_effects;
    j["total"] = total;
    nlohmann::ordered_json c, f;
    for (size_t k = 0; k < 4; k++) {
        c[fault_class_name((FaultClass)k)] = counts[k];
        f[fault_class_name((FaultClass)k)] = flagged_counts[k];
    }
    j["counts"] = c;
    j["flagged_plus_one"] = {{"total", flagged_total}, {"counts", f}};
    auto ex = nlohmann::ordered_json::array();
    for (const auto &e : examples) {
        nlohmann::ordered_json x;
        x["class"] = fault_class_name(e.cls);
        x["reason"] = e.reason;
        auto fs = nlohmann::ordered_json::array();
        for (const auto &fe : e.faults) {
            fs.push_back(fe.str());
        }
        x["faults"] = fs;
        auto tr = nlohmann::ordered_json::array();
        for (const auto &t : e.trace) {
            tr.push_back({{"kind", t.kind}, {"block", t.block}, {"detail", t.detail}});
        }
        x["trace"] = tr;
        ex.push_back(x);
    }
    j["examples"] = ex;
    return j.dump(2);
}

namespace {

struct Effect {
    BitVec flips;
    uint64_t multiplicity = 0;
    FaultEvent representative;
    bool flags = false;
};

/// Candidate example: (effect i, effect j) or a sampled pair of locations.
struct Candidate {
    FaultClass cls;
    uint64_t key;
    std::vector<FaultEvent> faults;
};

struct Partial {
    uint64_t total = 0;
    std::array<uint64_t, 4> counts{};
    uint64_t flagged_total = 0;
    std::array<uint64_t, 4> flagged_counts{};
    std::vector<Candidate> candidates;

    void add(FaultClass c, uint64_t n, bool flagged) {
        total += n;
        counts[(size_t)c] += n;
        if (flagged) {
            flagged_total += n;
            flagged_counts[(size_t)c] += n;
        }
    }
    void merge(const Partial &o) {
        total += o.total;
        flagged_total += o.flagged_total;
        for (size_t k = 0; k < 4; k++) {
            counts[k] += o.counts[k];
            flagged_counts[k] += o.flagged_counts[k];
        }
        candidates.insert(candidates.end(), o.candidates.begin(), o.candidates.end());
    }
};

int worker_count(int requested) {
    if (requested > 0) {
        return requested;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs body(item, partial) for item in [0, n) across workers and merges the partial tallies.
Partial parallel_tally(uint64_t n, int threads, const std::function<void(uint64_t, Partial &)> &body) {
    int w = (int)std::min<uint64_t>((uint64_t)worker_count(threads), std::max<uint64_t>(n, 1));
    std::vector<Partial> parts(w);
    std::atomic<uint64_t> next{0};
    auto run = [&](int k) {
        while (true) {
            uint64_t item = next.fetch_add(1);
            if (item >= n) {
                break;
            }
            body(item, parts[k]);
        }
    };
    std::vector<std::thread> pool;
    for (int k = 1; k < w; k++) {
        pool.emplace_back(run, k);
    }
    run(0);
    for (auto &t : pool) {
        t.join();
    }
    Partial out;
    for (const auto &p : parts) {
        out.merge(p);
    }
    return out;
}

bool is_bad(FaultClass c) {
    return c == FaultClass::LOGICAL_ERROR || c == FaultClass::POST_REJECTED;
}

}  // namespace

Tally tess::enumerate_faults(const Program &program, const VerifyOptions &opt) {
    if (!program.finalized()) {
        throw std::logic_error("enumerate_faults needs a finalized program");
    }
    if (opt.order < 0 || opt.order > 2) {
        throw std::invalid_argument("fault order must be 0, 1 or 2");
    }
    const Circuit &circuit = program.circuit;
    const DecodePlan &plan = program.plan;
    std::vector<bool> allowed =
        opt.regions.empty() ? std::vector<bool>(circuit.size(), true) : program.ops_in_regions(opt.regions);
    std::vector<FaultEvent> locations;
    for (const auto &f : enumerate_fault_locations(circuit)) {
        if (allowed[f.op]) {
            locations.push_back(f);
        }
    }
    BitVec reference = simulate(circuit, {}, opt.reference_seed).record;
    std::vector<uint8_t> is_flag(circuit.num_measurements(), 0);
    for (size_t r = 0; r < plan.records.size(); r++) {
        is_flag[r] = plan.records[r].role == RecordRole::FLAG;
    }

    std::vector<Effect> effects;
    std::vector<uint32_t> effect_of(locations.size());
    {
        std::unordered_map<BitVec, uint32_t, BitVecHash> index;
        for (size_t k = 0; k < locations.size(); k++) {
            BitVec flips = conjugate_through(circuit, locations[k]).flipped;
            auto [it, fresh] = index.try_emplace(flips, (uint32_t)effects.size());
            if (fresh) {
                Effect e;
                e.flips = flips;
                e.representative = locations[k];
                for (size_t r = 0; r < is_flag.size(); r++) {
                    e.flags |= is_flag[r] && flips.get(r);
                }
                effects.push_back(std::move(e));
            }
            effects[it->second].multiplicity++;
            effect_of[k] = it->second;
        }
    }

    Tally tally;
    tally.order = opt.order;
    tally.locations = locations.size();
    tally.distinct_effects = effects.size();

    auto decode_flips = [&](const BitVec &flips, BitVec &scratch) {
        scratch = reference;
        scratch ^= flips;
        return classify(decode(plan, scratch));
    };
    auto note_candidate = [&](Partial &part, FaultClass c, uint64_t key, std::vector<FaultEvent> faults) {
        if (!is_bad(c)) {
            return;
        }
        part.candidates.push_back({c, key, std::move(faults)});
        // Keep the per-worker list short; the smallest keys per class survive.
        if (part.candidates.size() > 8 * opt.max_examples + 8) {
            std::sort(part.candidates.begin(), part.candidates.end(), [](const Candidate &a, const Candidate &b) {
                return std::make_pair(a.cls != FaultClass::LOGICAL_ERROR, a.key) <
                       std::make_pair(b.cls != FaultClass::LOGICAL_ERROR, b.key);
            });
            part.candidates.resize(4 * opt.max_examples + 4);
        }
    };

    Partial result;
    if (opt.order == 0) {
        BitVec scratch;
        result.add(decode_flips(BitVec(circuit.num_measurements()), scratch), 1, false);
    } else if (opt.order == 1) {
        result = parallel_tally(effects.size(), opt.threads, [&](uint64_t i, Partial &part) {
            BitVec scratch;
            FaultClass c = decode_flips(effects[i].flips, scratch);
            part.add(c, effects[i].multiplicity, effects[i].flags);
            note_candidate(part, c, i, {effects[i].representative});
        });
    } else if (opt.sample_pairs == 0) {
        if (locations.size() > opt.max_locations) {
            throw BudgetExceeded("exhaustive order-2 enumeration over " + std::to_string(locations.size()) +
                                 " fault locations exceeds the budget of " + std::to_string(opt.max_locations));
        }
        BitVec scratch;
        FaultClass empty_class = decode_flips(BitVec(circuit.num_measurements()), scratch);
        uint64_t m = effects.size();
        result = parallel_tally(m, opt.threads, [&](uint64_t i, Partial &part) {
            BitVec scratch_local, flips;
            const Effect &a = effects[i];
            // Two different faults with identical effects cancel.
            uint64_t same = a.multiplicity * (a.multiplicity - 1) / 2;
            if (same > 0) {
                part.add(empty_class, same, a.flags);
            }
            for (uint64_t j = i + 1; j < m; j++) {
                const Effect &b = effects[j];
                flips = a.flips;
                flips ^= b.flips;
                FaultClass c = decode_flips(flips, scratch_local);
                part.add(c, a.multiplicity * b.multiplicity, a.flags || b.flags);
                note_candidate(part, c, i * m + j, {a.representative, b.representative});
            }
        });
    } else {
        tally.sampled = true;
        uint64_t L = locations.size();
        if (L < 2) {
            throw std::invalid_argument("sampling pairs needs at least two fault locations");
        }
        result = parallel_tally(opt.sample_pairs, opt.threads, [&](uint64_t t, Partial &part) {
            KeyedRng rng(opt.seed, t);
            uint32_t a = rng.below((uint32_t)L);
            uint32_t b = rng.below((uint32_t)L - 1);
            if (b >= a) {
                b++;
            }
            const Effect &ea = effects[effect_of[a]];
            const Effect &eb = effects[effect_of[b]];
            BitVec flips = ea.flips;
            flips ^= eb.flips;
            BitVec scratch;
            FaultClass c = decode_flips(flips, scratch);
            part.add(c, 1, ea.flags || eb.flags);
            note_candidate(part, c, t, {locations[a], locations[b]});
        });
    }

    tally.total = result.total;
    tally.counts = result.counts;
    tally.flagged_total = result.flagged_total;
    tally.flagged_counts = result.flagged_counts;
    auto &cands = result.candidates;
    std::sort(cands.begin(), cands.end(), [](const Candidate &a, const Candidate &b) {
        return std::make_pair(a.cls != FaultClass::LOGICAL_ERROR, a.key) <
               std::make_pair(b.cls != FaultClass::LOGICAL_ERROR, b.key);
    });
    for (size_t k = 0; k < cands.size() && k < opt.max_examples; k++) {
        FaultExample ex;
        ex.faults = cands[k].faults;
        BitVec flips = conjugate_through(circuit, ex.faults).flipped;
        BitVec rec = reference;
        rec ^= flips;
        auto d = decode(plan, rec, &ex.trace);
        ex.cls = classify(d);
        ex.reason = d.reject_reason;
        tally.examples.push_back(std::move(ex));
    }
    return tally;
}

namespace {

Mask span_min_weight(Mask e, const std::vector<Mask> &gens) {
    std::vector<Mask> span{0};
    for (Mask g : gens) {
        size_t n = span.size();
        bool present = std::find(span.begin(), span.end(), g) != span.end();
        if (present) {
            continue;
        }
        for (size_t k = 0; k < n; k++) {
            span.push_back(span[k] ^ g);
        }
    }
    int best = 99;
    Mask arg = e;
    for (Mask s : span) {
        int w = std::popcount((unsigned)(e ^ s));
        if (w < best) {
            best = w;
            arg = (Mask)(e ^ s);
        }
    }
    return arg;
}

std::pair<Mask, Mask> data_residual(const PauliString &p, const BlockHandle &b) {
    Mask x = 0, z = 0;
    for (int k = 0; k < kNumQubits; k++) {
        uint8_t v = p.get(b.q(k));
        if (v == 1 || v == 2) {
            x |= (Mask)(1u << k);
        }
        if (v == 2 || v == 3) {
            z |= (Mask)(1u << k);
        }
    }
    return {x, z};
}

int weight(Mask m) {
    return std::popcount((unsigned)m);
}

}  // namespace

ContractReport tess::check_prep_contract(PrepState state) {
    ContractReport rep;
    rep.name = std::string("prep/") + prep_state_name(state);
    Program p;
    auto b = p.add_block();
    prepare(p, b, state);
    p.finalize();
    LogicalSet xs = 0, zs = 0;
    switch (state) {
        case PrepState::PLUS_ZERO:
            xs = logicals({1, 3, 5});
            zs = logicals({2, 4, 6});
            break;
        case PrepState::PLUS_PLUS_ZERO:
            xs = logicals({1, 2});
            zs = logicals({3, 4, 5, 6});
            break;
        case PrepState::ZERO_ZERO_PLUS:
            xs = logicals({3, 4, 5, 6});
            zs = logicals({1, 2});
            break;
    }
    std::vector<Mask> xg = stabilizer_generators(), zg = stabilizer_generators();
    for (int i = 0; i < kNumLogical; i++) {
        if ((xs >> i) & 1) {
            xg.push_back(logical_basis().x[i]);
        }
        if ((zs >> i) & 1) {
            zg.push_back(logical_basis().z[i]);
        }
    }
    BitVec reference = simulate(p.circuit, {}, 0).record;
    for (const auto &f : enumerate_fault_locations(p.circuit)) {
        rep.faults++;
        auto prop = conjugate_through(p.circuit, f);
        BitVec rec = reference;
        rec ^= prop.flipped;
        if (decode(p.plan, rec).verdict == Verdict::PRE_REJECTED) {
            continue;
        }
        auto [ex, ez] = data_residual(prop.residual, b);
        Mask rx = span_min_weight(ex, xg), rz = span_min_weight(ez, zg);
        if (weight(rx) > 1 || weight(rz) > 1) {
            if (rep.violations++ == 0) {
                rep.first_violation = f.str() + " leaves X" + mask_str(rx) + " Z" + mask_str(rz);
            }
        }
    }
    return rep;
}

ContractReport tess::check_w4_contract(Basis basis, Flavor flavor) {
    ContractReport rep;
    rep.name = std::string("measure_w4/") + flavor_name(flavor) + "/" + basis_char(basis);
    Program p;
    auto b = p.add_block(3);
    std::array<int, 4> support{0, 1, 2, 3};
    RepMeasurement m = measure_w4(p, b, support, basis, flavor, "m");
    Mask S = m.support;
    bool x_spread = basis == Basis::X;
    for (const auto &f : enumerate_fault_locations(p.circuit)) {
        rep.faults++;
        auto prop = conjugate_through(p.circuit, f);
        auto [ex, ez] = data_residual(prop.residual, b);
        Mask spread = x_spread ? ex : ez;
        Mask other = x_spread ? ez : ex;
        bool f0 = m.flag0 >= 0 && prop.flipped.get((size_t)m.flag0);
        bool f1 = m.flag1 >= 0 && prop.flipped.get((size_t)m.flag1);
        if (flavor == Flavor::TWO_FLAG && f0 && f1) {
            spread ^= m.two_flag_fix;
        }
        Mask reduced = span_min_weight(spread, {S});
        bool ok = weight(other) <= 1 && weight(reduced) <= 1;
        if (!ok && flavor == Flavor::ONE_FLAG && f0 && weight(other) <= 1) {
            ok = spread == m.hook_pair || spread == (Mask)(S ^ m.hook_pair);
        }
        if (!ok && rep.violations++ == 0) {
            rep.first_violation = f.str() + " leaves X" + mask_str(ex) + " Z" + mask_str(ez);
        }
    }
    return rep;
}

ContractReport tess::check_joint_contract() {
    ContractReport rep;
    rep.name = "measure_w4_joint";
    Program p;
    auto b = p.add_block();
    auto ms = measure_w4_joint(p, b, {0, 1, 2, 3}, "j");
    Mask S = ms[0].support;
    Mask pair = ms[0].hook_pair;
    for (const auto &f : enumerate_fault_locations(p.circuit)) {
        rep.faults++;
        auto prop = conjugate_through(p.circuit, f);
        auto [ex, ez] = data_residual(prop.residual, b);
        bool ok = true;
        for (Mask e : {ex, ez}) {
            Mask reduced = span_min_weight(e, {S});
            ok &= weight(reduced) <= 1 || e == pair || e == (Mask)(S ^ pair);
        }
        if (!ok && rep.violations++ == 0) {
            rep.first_violation = f.str() + " leaves X" + mask_str(ex) + " Z" + mask_str(ez);
        }
    }
    return rep;
}

int tess::check_distance(size_t n, const std::vector<PauliString> &stabilizers, const std::vector<PauliString> &logicals,
                         int max_weight, PauliFilter filter) {
    std::vector<uint8_t> choices;
    switch (filter) {
        case PauliFilter::ANY:
            choices = {1, 2, 3};
            break;
        case PauliFilter::X_ONLY:
            choices = {1};
            break;
        case PauliFilter::Z_ONLY:
            choices = {3};
            break;
    }
    for (int w = 1; w <= max_weight && w <= (int)n; w++) {
        std::vector<size_t> idx(w);
        for (int k = 0; k < w; k++) {
            idx[k] = (size_t)k;
        }
        while (true) {
            std::vector<size_t> digit(w, 0);
            while (true) {
                PauliString p(n);
                for (int k = 0; k < w; k++) {
                    p.set(idx[k], choices[digit[k]]);
                }
                bool in_normalizer = std::all_of(stabilizers.begin(), stabilizers.end(), [&](const PauliString &s) {
                    return s.commutes(p);
                });
                if (in_normalizer && std::any_of(logicals.begin(), logicals.end(), [&](const PauliString &l) {
                        return !l.commutes(p);
                    })) {
                    return w;
                }
                int k = 0;
                while (k < w && ++digit[k] == choices.size()) {
                    digit[k++] = 0;
                }
                if (k == w) {
                    break;
                }
            }
            int k = w - 1;
            while (k >= 0 && idx[k] == n - (size_t)(w - k)) {
                k--;
            }
            if (k < 0) {
                break;
            }
            idx[k]++;
            for (int j = k + 1; j < w; j++) {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    return max_weight + 1;
}

namespace {

PauliString mask_pauli(Mask m, uint8_t pauli) {
    PauliString p(kNumQubits);
    for (int q = 0; q < kNumQubits; q++) {
        if ((m >> q) & 1) {
            p.set((size_t)q, pauli);
        }
    }
    return p;
}

}  // namespace

std::vector<PauliString> tess::tesseract_stabilizers() {
    std::vector<PauliString> out;
    for (Mask m : stabilizer_generators()) {
        out.push_back(mask_pauli(m, 1));
    }
    for (Mask m : stabilizer_generators()) {
        out.push_back(mask_pauli(m, 3));
    }
    return out;
}

std::vector<PauliString> tess::tesseract_logicals() {
    std::vector<PauliString> out;
    for (int i = 0; i < kNumLogical; i++) {
        out.push_back(mask_pauli(logical_basis().x[i], 1));
        out.push_back(mask_pauli(logical_basis().z[i], 3));
    }
    return out;
}
