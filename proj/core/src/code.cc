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

#include "tesseract/code.h"

#include <algorithm>
#include <bit>
#include <bitset>
#include <sstream>
#include <stdexcept>

using namespace tess;
using namespace tess::code;

Mask code::mask_of(std::initializer_list<int> qubits) {
    Mask m = 0;
    for (int q : qubits) {
        m |= (Mask)(1u << q);
    }
    return m;
}

std::vector<int> code::qubits_of(Mask m) {
    std::vector<int> out;
    for (int q = 0; q < kNumQubits; q++) {
        if ((m >> q) & 1) {
            out.push_back(q);
        }
    }
    return out;
}

std::string code::mask_str(Mask m) {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (int q : qubits_of(m)) {
        out << (first ? "" : ",") << q;
        first = false;
    }
    out << "}";
    return out.str();
}

namespace {

// Indicator of the qubits whose index has bit i set.
Mask coordinate(int i) {
    Mask m = 0;
    for (int q = 0; q < kNumQubits; q++) {
        if ((q >> i) & 1) {
            m |= (Mask)(1u << q);
        }
    }
    return m;
}

struct Tables {
    std::bitset<65536> rm1;
    std::bitset<65536> rm2;
    std::vector<Mask> gens;
    Tables() {
        Mask all = 0xFFFF;
        gens = {all, (Mask)(row_mask(0) | row_mask(1)), (Mask)(row_mask(0) | row_mask(2)),
                (Mask)(col_mask(0) | col_mask(1)), (Mask)(col_mask(0) | col_mask(2))};
        std::vector<Mask> basis2 = gens;
        for (int i = 0; i < 4; i++) {
            for (int j = i + 1; j < 4; j++) {
                basis2.push_back(coordinate(i) & coordinate(j));
            }
        }
        for (uint32_t bits = 0; bits < (1u << basis2.size()); bits++) {
            Mask v = 0;
            for (size_t k = 0; k < basis2.size(); k++) {
                if ((bits >> k) & 1) {
                    v ^= basis2[k];
                }
            }
            rm2.set(v);
            if (bits < 32) {
                rm1.set(v);
            }
        }
    }
};

const Tables &tables() {
    static const Tables t;
    return t;
}

bool parity(Mask m) {
    return std::popcount((unsigned)m) & 1;
}

}  // namespace

const std::vector<Mask> &code::stabilizer_generators() {
    return tables().gens;
}

bool code::in_stabilizer(Mask m) {
    return tables().rm1.test(m);
}

bool code::in_normalizer(Mask m) {
    return tables().rm2.test(m);
}

Perm code::identity_perm() {
    Perm p;
    for (int q = 0; q < kNumQubits; q++) {
        p[q] = (uint8_t)q;
    }
    return p;
}

Perm code::compose(const Perm &first, const Perm &second) {
    Perm r;
    for (int q = 0; q < kNumQubits; q++) {
        r[q] = second[first[q]];
    }
    return r;
}

Perm code::inverse(const Perm &p) {
    Perm r;
    for (int q = 0; q < kNumQubits; q++) {
        r[p[q]] = (uint8_t)q;
    }
    return r;
}

Perm code::perm_from_cycles(const std::vector<std::vector<int>> &cycles) {
    Perm p = identity_perm();
    std::vector<bool> seen(kNumQubits, false);
    for (const auto &c : cycles) {
        for (size_t k = 0; k < c.size(); k++) {
            if (c[k] < 0 || c[k] >= kNumQubits || seen[c[k]]) {
                throw std::invalid_argument("perm_from_cycles: bad cycle");
            }
            seen[c[k]] = true;
            p[c[k]] = (uint8_t)c[(k + 1) % c.size()];
        }
    }
    return p;
}

std::string code::perm_str(const Perm &p) {
    std::ostringstream out;
    std::vector<bool> seen(kNumQubits, false);
    bool any = false;
    for (int q = 0; q < kNumQubits; q++) {
        if (seen[q] || p[q] == q) {
            continue;
        }
        any = true;
        out << "(";
        int cur = q;
        bool first = true;
        while (!seen[cur]) {
            seen[cur] = true;
            out << (first ? "" : ",") << cur;
            first = false;
            cur = p[cur];
        }
        out << ")";
    }
    if (!any) {
        out << "()";
    }
    return out.str();
}

Mask code::apply_perm(const Perm &p, Mask m) {
    Mask r = 0;
    for (int q = 0; q < kNumQubits; q++) {
        if ((m >> q) & 1) {
            r |= (Mask)(1u << p[q]);
        }
    }
    return r;
}

Perm code::pi_perm() {
    return perm_from_cycles({{0, 2, 5}, {3, 6, 4}, {8, 15, 10}, {9, 12, 14}});
}

Perm code::swap_rows(int a, int b) {
    Perm p = identity_perm();
    for (int c = 0; c < 4; c++) {
        p[4 * a + c] = (uint8_t)(4 * b + c);
        p[4 * b + c] = (uint8_t)(4 * a + c);
    }
    return p;
}

Perm code::swap_cols(int a, int b) {
    Perm p = identity_perm();
    for (int r = 0; r < 4; r++) {
        p[4 * r + a] = (uint8_t)(4 * r + b);
        p[4 * r + b] = (uint8_t)(4 * r + a);
    }
    return p;
}

Perm code::transpose_perm() {
    Perm p;
    for (int q = 0; q < kNumQubits; q++) {
        p[q] = (uint8_t)(4 * col_of(q) + row_of(q));
    }
    return p;
}

LogicalBasis code::derive_logical_basis() {
    std::vector<Mask> squares;
    for (int r = 0; r < 3; r++) {
        for (int c = 0; c < 3; c++) {
            int q = 4 * r + c;
            squares.push_back(mask_of({q, q + 1, q + 4, q + 5}));
        }
    }
    std::sort(squares.begin(), squares.end());
    auto pick = [&](Mask coset) -> Mask {
        for (Mask s : squares) {
            if (in_stabilizer(s ^ coset)) {
                return s;
            }
        }
        throw std::logic_error("derive_logical_basis: no square in coset " + mask_str(coset));
    };
    auto require = [](bool ok, const char *what) {
        if (!ok) {
            throw std::logic_error(std::string("derive_logical_basis: ") + what);
        }
    };

    Perm pi = pi_perm();
    require(is_automorphism(pi), "anchor permutation is not an automorphism");
    LogicalBasis b{};
    b.x[0] = row_mask(0);
    b.x[1] = col_mask(0);
    b.z[0] = col_mask(0);
    b.z[1] = row_mask(0);
    b.x[2] = mask_of({0, 1, 4, 5});
    // The anchor permutation cycles X_3 -> X_1 -> X_5 -> X_3 and X_4 -> X_2 -> X_6 -> X_4, same for Z.
    b.x[4] = pick(apply_perm(pi, b.x[0]));
    require(in_stabilizer(apply_perm(pi, b.x[4]) ^ b.x[2]), "X_5 does not map to X_3");
    require(in_stabilizer(apply_perm(pi, b.x[2]) ^ b.x[0]), "X_3 does not map to X_1");
    b.x[5] = pick(apply_perm(pi, b.x[1]));
    b.x[3] = pick(apply_perm(pi, b.x[5]));
    require(in_stabilizer(apply_perm(pi, b.x[3]) ^ b.x[1]), "X_4 does not map to X_2");
    b.z[4] = pick(apply_perm(pi, b.z[0]));
    b.z[2] = pick(apply_perm(pi, b.z[4]));
    require(in_stabilizer(apply_perm(pi, b.z[2]) ^ b.z[0]), "Z_3 does not map to Z_1");
    b.z[5] = pick(apply_perm(pi, b.z[1]));
    b.z[3] = pick(apply_perm(pi, b.z[5]));
    require(in_stabilizer(apply_perm(pi, b.z[3]) ^ b.z[1]), "Z_4 does not map to Z_2");

    for (int i = 0; i < kNumLogical; i++) {
        require(in_normalizer(b.x[i]) && !in_stabilizer(b.x[i]), "X logical outside the normalizer");
        require(in_normalizer(b.z[i]) && !in_stabilizer(b.z[i]), "Z logical outside the normalizer");
        for (int j = 0; j < kNumLogical; j++) {
            require(parity(b.x[i] & b.z[j]) == (i == j), "basis is not symplectic");
        }
    }
    return b;
}

const LogicalBasis &code::logical_basis() {
    static const LogicalBasis b = derive_logical_basis();
    return b;
}

LogicalSet code::logicals(std::initializer_list<int> one_based) {
    LogicalSet s = 0;
    for (int i : one_based) {
        if (i < 1 || i > kNumLogical) {
            throw std::out_of_range("logical index out of range");
        }
        s |= (LogicalSet)(1u << (i - 1));
    }
    return s;
}

Mask code::canonical_x(LogicalSet s) {
    Mask m = 0;
    for (int i = 0; i < kNumLogical; i++) {
        if ((s >> i) & 1) {
            m ^= logical_basis().x[i];
        }
    }
    return m;
}

Mask code::canonical_z(LogicalSet s) {
    Mask m = 0;
    for (int i = 0; i < kNumLogical; i++) {
        if ((s >> i) & 1) {
            m ^= logical_basis().z[i];
        }
    }
    return m;
}

LogicalSet code::x_coordinates(Mask x_support) {
    LogicalSet s = 0;
    for (int j = 0; j < kNumLogical; j++) {
        if (parity(x_support & logical_basis().z[j])) {
            s |= (LogicalSet)(1u << j);
        }
    }
    return s;
}

LogicalSet code::z_coordinates(Mask z_support) {
    LogicalSet s = 0;
    for (int j = 0; j < kNumLogical; j++) {
        if (parity(z_support & logical_basis().x[j])) {
            s |= (LogicalSet)(1u << j);
        }
    }
    return s;
}

std::vector<Mask> code::weight4_representatives(Mask m) {
    std::vector<Mask> out;
    for (uint32_t v = 0; v < 65536; v++) {
        if (std::popcount(v) == 4 && in_stabilizer((Mask)v ^ m)) {
            out.push_back((Mask)v);
        }
    }
    return out;
}

std::vector<std::array<Mask, 4>> code::disjoint_families(Mask m) {
    std::vector<Mask> reps = weight4_representatives(m);
    std::vector<std::array<Mask, 4>> out;
    // Each family is found once by always covering the lowest uncovered qubit next.
    std::array<Mask, 4> cur{};
    auto rec = [&](auto &&self, int depth, Mask used) -> void {
        if (depth == 4) {
            out.push_back(cur);
            return;
        }
        int low = std::countr_zero((unsigned)(Mask)~used);
        for (Mask r : reps) {
            if ((r & used) == 0 && ((r >> low) & 1)) {
                cur[depth] = r;
                self(self, depth + 1, (Mask)(used | r));
            }
        }
    };
    rec(rec, 0, 0);
    return out;
}

std::array<Mask, 4> code::disjoint_representatives(Mask m) {
    auto fams = disjoint_families(m);
    if (fams.empty()) {
        throw std::invalid_argument("no disjoint weight-4 representatives for " + mask_str(m));
    }
    std::sort(fams.begin(), fams.end());
    return fams.front();
}

const std::vector<CatalogEntry> &code::logical_measurement_catalog() {
    static const std::vector<CatalogEntry> cat = [] {
        std::vector<CatalogEntry> out;
        for (int s = 1; s < (1 << kNumLogical); s++) {
            Mask m = canonical_x((LogicalSet)s);
            auto fams = disjoint_families(m);
            if (!fams.empty()) {
                std::sort(fams.begin(), fams.end());
                out.push_back({(LogicalSet)s, fams.front()});
            }
        }
        return out;
    }();
    return cat;
}

bool code::is_automorphism(const Perm &p) {
    std::array<bool, kNumQubits> seen{};
    for (int q = 0; q < kNumQubits; q++) {
        if (p[q] >= kNumQubits || seen[p[q]]) {
            return false;
        }
        seen[p[q]] = true;
    }
    for (Mask g : stabilizer_generators()) {
        if (!in_stabilizer(apply_perm(p, g))) {
            return false;
        }
    }
    return true;
}

LogicalAction code::logical_action_of(const Perm &p) {
    if (!is_automorphism(p)) {
        throw std::invalid_argument("not an automorphism: " + perm_str(p));
    }
    LogicalAction a;
    for (int i = 0; i < kNumLogical; i++) {
        a.x_image[i] = x_coordinates(apply_perm(p, logical_basis().x[i]));
        a.z_image[i] = z_coordinates(apply_perm(p, logical_basis().z[i]));
    }
    return a;
}

bool LogicalAction::is_permutation() const {
    for (int i = 0; i < kNumLogical; i++) {
        if (std::popcount((unsigned)x_image[i]) != 1 || z_image[i] != x_image[i]) {
            return false;
        }
    }
    return true;
}

std::string LogicalAction::str() const {
    std::ostringstream out;
    if (is_permutation()) {
        std::array<int, kNumLogical> img;
        for (int i = 0; i < kNumLogical; i++) {
            img[i] = std::countr_zero((unsigned)x_image[i]);
        }
        std::array<bool, kNumLogical> seen{};
        bool any = false;
        for (int i = 0; i < kNumLogical; i++) {
            if (seen[i] || img[i] == i) {
                continue;
            }
            any = true;
            out << "(";
            int cur = i;
            bool first = true;
            while (!seen[cur]) {
                seen[cur] = true;
                out << (first ? "" : ",") << cur + 1;
                first = false;
                cur = img[cur];
            }
            out << ")";
        }
        if (!any) {
            out << "()";
        }
        return out.str();
    }
    auto term = [&](char pauli, LogicalSet s) {
        std::string t;
        for (int j = 0; j < kNumLogical; j++) {
            if ((s >> j) & 1) {
                t += pauli;
                t += std::to_string(j + 1);
            }
        }
        return t;
    };
    bool first = true;
    for (int i = 0; i < kNumLogical; i++) {
        if (x_image[i] != (1u << i)) {
            out << (first ? "" : " ") << "X" << i + 1 << "->" << term('X', x_image[i]);
            first = false;
        }
        if (z_image[i] != (1u << i)) {
            out << (first ? "" : " ") << "Z" << i + 1 << "->" << term('Z', z_image[i]);
            first = false;
        }
    }
    return first ? "()" : out.str();
}
