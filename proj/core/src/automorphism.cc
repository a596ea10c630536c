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

#include "tesseract/automorphism.h"

#include <unordered_set>

using namespace tess;
using namespace tess::code;

namespace {

uint64_t key_of(const Perm &p) {
    uint64_t k = 0;
    for (int q = 0; q < kNumQubits; q++) {
        k |= (uint64_t)p[q] << (4 * q);
    }
    return k;
}

}  // namespace

std::vector<Perm> code::automorphism_generators() {
    std::vector<Perm> gens;
    for (int a = 0; a < 3; a++) {
        gens.push_back(swap_rows(a, a + 1));
        gens.push_back(swap_cols(a, a + 1));
    }
    gens.push_back(transpose_perm());
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            if (i == j) {
                continue;
            }
            Perm p;
            for (int q = 0; q < kNumQubits; q++) {
                p[q] = (uint8_t)(q ^ (((q >> j) & 1) << i));
            }
            if (is_automorphism(p)) {
                gens.push_back(p);
            }
        }
    }
    return gens;
}

const std::vector<Perm> &code::automorphism_group() {
    static const std::vector<Perm> group = [] {
        std::vector<Perm> gens = automorphism_generators();
        std::vector<Perm> out{identity_perm()};
        std::unordered_set<uint64_t> seen{key_of(out[0])};
        for (size_t k = 0; k < out.size(); k++) {
            for (const auto &g : gens) {
                Perm next = compose(out[k], g);
                if (seen.insert(key_of(next)).second) {
                    out.push_back(next);
                }
            }
        }
        return out;
    }();
    return group;
}

std::optional<Perm> code::find_automorphism(const LogicalAction &target) {
    for (const auto &p : automorphism_group()) {
        if (logical_action_of(p) == target) {
            return p;
        }
    }
    return std::nullopt;
}
