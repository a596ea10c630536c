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

#include "tesseract/noise.h"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"
#include "tesseract/rng.h"

using namespace tess;

NoiseParams NoiseParams::h2() {
    return NoiseParams{};
}

NoiseParams NoiseParams::zero() {
    NoiseParams p;
    p.p1 = 0;
    p.p2 = 0;
    p.p_spam = 0;
    p.p_mem = 0;
    return p;
}

NoiseParams NoiseParams::scaled(double factor) const {
    NoiseParams p = *this;
    p.p1 *= factor;
    p.p2 *= factor;
    p.p_spam *= factor;
    p.p_mem *= factor;
    p.validate();
    return p;
}

void NoiseParams::validate() const {
    auto check = [](double v, const char *name) {
        if (!(v >= 0 && v <= 1)) {
            throw std::invalid_argument(std::string("noise parameter ") + name + " out of [0, 1]");
        }
    };
    check(p1, "p1");
    check(p2, "p2");
    check(p_spam, "p_spam");
    check(p_mem, "p_mem");
    check(spam_measure_fraction, "spam_measure_fraction");
}

std::string NoiseParams::to_json() const {
    nlohmann::json j;
    j["p1"] = p1;
    j["p2"] = p2;
    j["p_spam"] = p_spam;
    j["p_mem"] = p_mem;
    j["spam_measure_fraction"] = spam_measure_fraction;
    j["noisy_permutations"] = noisy_permutations;
    return j.dump(2);
}

NoiseParams NoiseParams::from_json(const std::string &text) {
    auto j = nlohmann::json::parse(text);
    NoiseParams p;
    p.p1 = j.value("p1", p.p1);
    p.p2 = j.value("p2", p.p2);
    p.p_spam = j.value("p_spam", p.p_spam);
    p.p_mem = j.value("p_mem", p.p_mem);
    p.spam_measure_fraction = j.value("spam_measure_fraction", p.spam_measure_fraction);
    p.noisy_permutations = j.value("noisy_permutations", p.noisy_permutations);
    p.validate();
    return p;
}

NoiseParams NoiseParams::with_overrides(const std::string &text) const {
    NoiseParams p = *this;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find(',', pos);
        if (end == std::string::npos) {
            end = text.size();
        }
        std::string item = text.substr(pos, end - pos);
        pos = end + 1;
        if (item.empty()) {
            continue;
        }
        size_t eq = item.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("noise override '" + item + "' is not key=value");
        }
        std::string key = item.substr(0, eq);
        std::string val = item.substr(eq + 1);
        if (key == "noisy_permutations") {
            if (val != "0" && val != "1" && val != "true" && val != "false") {
                throw std::invalid_argument("noisy_permutations must be 0, 1, true or false");
            }
            p.noisy_permutations = val == "1" || val == "true";
            continue;
        }
        size_t used = 0;
        double v;
        try {
            v = std::stod(val, &used);
        } catch (const std::exception &) {
            throw std::invalid_argument("bad number in noise override '" + item + "'");
        }
        if (used != val.size()) {
            throw std::invalid_argument("bad number in noise override '" + item + "'");
        }
        if (key == "p1") {
            p.p1 = v;
        } else if (key == "p2") {
            p.p2 = v;
        } else if (key == "p_spam") {
            p.p_spam = v;
        } else if (key == "p_mem") {
            p.p_mem = v;
        } else if (key == "spam_measure_fraction") {
            p.spam_measure_fraction = v;
        } else if (key == "scale") {
            p = p.scaled(v);
        } else {
            throw std::invalid_argument("unknown noise parameter '" + key + "'");
        }
    }
    p.validate();
    return p;
}

std::string NoiseParams::hash() const {
    // FNV-1a over the printed values so the fingerprint does not depend on the platform's std::hash.
    char buf[256];
    std::snprintf(
        buf, sizeof(buf), "%.17g|%.17g|%.17g|%.17g|%.17g|%d", p1, p2, p_spam, p_mem, spam_measure_fraction,
        (int)noisy_permutations);
    uint64_t h = 0xcbf29ce484222325ULL;
    for (const char *c = buf; *c; c++) {
        h ^= (uint8_t)*c;
        h *= 0x100000001b3ULL;
    }
    char out[17];
    std::snprintf(out, sizeof(out), "%016llx", (unsigned long long)h);
    return out;
}

NoisyCircuit::NoisyCircuit(Circuit circuit, std::vector<NoiseSite> sites)
    : circuit_(std::move(circuit)), sites_(std::move(sites)) {
    std::stable_sort(sites_.begin(), sites_.end(), [](const NoiseSite &a, const NoiseSite &b) {
        return a.op < b.op;
    });
}

double NoisyCircuit::expected_faults() const {
    double t = 0;
    for (const auto &s : sites_) {
        t += s.p;
    }
    return t;
}

void NoisyCircuit::sample_faults(uint64_t seed, uint64_t shot, std::vector<FaultEvent> &out) const {
    out.clear();
    KeyedRng rng(seed ^ 0x6E6F697365ULL, shot);
    for (const auto &s : sites_) {
        if (s.p <= 0 || !rng.bernoulli(s.p)) {
            continue;
        }
        switch (s.channel) {
            case Channel::DEPOLARIZE1:
                out.push_back(FaultEvent::pauli1(s.op, s.q0, (uint8_t)(1 + rng.below(3))));
                break;
            case Channel::DEPOLARIZE2: {
                uint32_t k = 1 + rng.below(15);
                out.push_back(FaultEvent::pauli2(s.op, s.q0, (uint8_t)(k >> 2), s.q1, (uint8_t)(k & 3)));
                break;
            }
            case Channel::X_ERROR:
                out.push_back(FaultEvent::pauli1(s.op, s.q0, 1));
                break;
            case Channel::Z_ERROR:
                out.push_back(FaultEvent::pauli1(s.op, s.q0, 3));
                break;
            case Channel::RECORD_FLIP:
                out.push_back(FaultEvent::flip(s.op));
                break;
        }
    }
}

NoisyCircuit tess::instrument(const Circuit &circuit, const NoiseParams &params) {
    params.validate();
    circuit.validate();
    std::vector<NoiseSite> sites;
    double p_meas = params.p_spam * params.spam_measure_fraction;
    double p_reset = params.p_spam - p_meas;
    size_t n = circuit.num_qubits();

    // For each qubit, the durational instructions touching it in order.
    std::vector<std::vector<uint32_t>> touches(n);
    uint32_t num_layers = circuit.num_layers();
    std::vector<uint32_t> last_op_of_layer(num_layers, 0);
    for (uint32_t k = 0; k < circuit.size(); k++) {
        const auto &op = circuit[k];
        last_op_of_layer[op.layer] = k;
        if (!is_zero_duration(op.gate)) {
            for (auto q : op.targets) {
                touches[q].push_back(k);
            }
        }
        switch (op.gate) {
            case Gate::CNOT:
                if (params.p2 > 0) {
                    sites.push_back({k, Channel::DEPOLARIZE2, op.targets[0], op.targets[1], params.p2});
                }
                break;
            case Gate::H:
            case Gate::S:
            case Gate::X:
            case Gate::Z:
                if (params.p1 > 0) {
                    sites.push_back({k, Channel::DEPOLARIZE1, op.targets[0], 0, params.p1});
                }
                break;
            case Gate::RESET_Z:
                if (p_reset > 0) {
                    sites.push_back({k, Channel::X_ERROR, op.targets[0], 0, p_reset});
                }
                break;
            case Gate::RESET_X:
                if (p_reset > 0) {
                    sites.push_back({k, Channel::Z_ERROR, op.targets[0], 0, p_reset});
                }
                break;
            case Gate::MEAS_Z:
            case Gate::MEAS_X:
                if (p_meas > 0) {
                    sites.push_back({k, Channel::RECORD_FLIP, op.targets[0], 0, p_meas});
                }
                break;
            case Gate::PERM:
                if (params.noisy_permutations && params.p1 > 0) {
                    for (size_t j = 1; j < op.targets.size(); j += 2) {
                        sites.push_back({k, Channel::DEPOLARIZE1, op.targets[j], 0, params.p1});
                    }
                }
                break;
            case Gate::BARRIER:
                break;
        }
    }

    if (params.p_mem > 0) {
        for (uint32_t q = 0; q < n; q++) {
            const auto &t = touches[q];
            for (size_t j = 0; j + 1 < t.size(); j++) {
                const auto &cur = circuit[t[j]];
                const auto &next = circuit[t[j + 1]];
                // Not live between a measurement and the following reset, or before a reset.
                if (is_reset(next.gate)) {
                    continue;
                }
                for (uint32_t layer = cur.layer + 1; layer < next.layer; layer++) {
                    sites.push_back({last_op_of_layer[layer], Channel::DEPOLARIZE1, q, 0, params.p_mem});
                }
            }
        }
    }
    return NoisyCircuit(circuit, std::move(sites));
}
