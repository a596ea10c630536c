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

#include "tesseract/pauli.h"

#include <stdexcept>

using namespace tess;

PauliString PauliString::from_str(const std::string &text) {
    size_t start = 0;
    bool sign = false;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
        sign = text[0] == '-';
        start = 1;
    }
    PauliString p(text.size() - start);
    p.sign = sign;
    for (size_t k = start; k < text.size(); k++) {
        switch (text[k]) {
            case 'I':
            case '_':
                break;
            case 'X':
                p.set(k - start, 1);
                break;
            case 'Y':
                p.set(k - start, 2);
                break;
            case 'Z':
                p.set(k - start, 3);
                break;
            default:
                throw std::invalid_argument("Bad Pauli character in '" + text + "'");
        }
    }
    return p;
}

PauliString PauliString::from_supports(size_t num_qubits, const BitVec &x, const BitVec &z) {
    PauliString p(num_qubits);
    p.xs = x;
    p.zs = z;
    p.xs.resize(num_qubits);
    p.zs.resize(num_qubits);
    return p;
}

std::string PauliString::str() const {
    std::string s = sign ? "-" : "+";
    for (size_t q = 0; q < num_qubits(); q++) {
        s.push_back(get_char(q));
    }
    return s;
}

uint8_t PauliString::get(size_t q) const {
    bool x = xs.get(q);
    bool z = zs.get(q);
    if (x && z) {
        return 2;
    }
    return x ? 1 : (z ? 3 : 0);
}

void PauliString::set(size_t q, uint8_t pauli) {
    xs.set(q, pauli == 1 || pauli == 2);
    zs.set(q, pauli == 2 || pauli == 3);
}

char PauliString::get_char(size_t q) const {
    return "_XYZ"[get(q)];
}

size_t PauliString::weight() const {
    size_t n = 0;
    for (size_t k = 0; k < xs.num_words(); k++) {
        n += std::popcount(xs.words()[k] | zs.words()[k]);
    }
    return n;
}

bool PauliString::commutes(const PauliString &other) const {
    return xs.dot(other.zs) == zs.dot(other.xs);
}

uint8_t PauliString::inplace_right_mul_returning_log_i(const PauliString &rhs) {
    if (rhs.num_qubits() != num_qubits()) {
        throw std::invalid_argument("PauliString size mismatch");
    }
    // Count the +i / -i contributions of every qubit mod 4 using two bit planes.
    uint64_t cnt1 = 0;
    uint64_t cnt2 = 0;
    uint8_t s = 0;
    uint64_t *x1 = xs.words();
    uint64_t *z1 = zs.words();
    const uint64_t *x2 = rhs.xs.words();
    const uint64_t *z2 = rhs.zs.words();
    for (size_t k = 0; k < xs.num_words(); k++) {
        uint64_t old_x1 = x1[k];
        uint64_t old_z1 = z1[k];
        x1[k] ^= x2[k];
        z1[k] ^= z2[k];
        uint64_t x1z2 = old_x1 & z2[k];
        uint64_t anti_commutes = (x2[k] & old_z1) ^ x1z2;
        cnt2 ^= (cnt1 ^ x1[k] ^ z1[k] ^ x1z2) & anti_commutes;
        cnt1 ^= anti_commutes;
        s += std::popcount(cnt1);
        s ^= (uint8_t)(std::popcount(cnt2) << 1);
        s &= 3;
        // Fold the per-word counters into the scalar so the planes can be reused.
        cnt1 = 0;
        cnt2 = 0;
    }
    s ^= (uint8_t)rhs.sign << 1;
    return s & 3;
}

PauliString &PauliString::operator*=(const PauliString &rhs) {
    uint8_t log_i = inplace_right_mul_returning_log_i(rhs);
    if (log_i & 1) {
        throw std::domain_error("Product of anticommuting Pauli strings is not Hermitian");
    }
    sign ^= (log_i & 2) != 0;
    return *this;
}

PauliString tess::multiply(const PauliString &a, const PauliString &b) {
    PauliString r = a;
    r *= b;
    return r;
}
