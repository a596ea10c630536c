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

#include "tesseract/bitvec.h"

#include <stdexcept>

using namespace tess;

void BitVec::resize(size_t num_bits) {
    num_bits_ = num_bits;
    words_.resize((num_bits + 63) / 64, 0);
    if (num_bits & 63) {
        words_.back() &= (uint64_t{1} << (num_bits & 63)) - 1;
    }
}

BitVec &BitVec::operator^=(const BitVec &other) {
    if (other.num_bits_ != num_bits_) {
        throw std::invalid_argument("BitVec size mismatch");
    }
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] ^= other.words_[k];
    }
    return *this;
}

BitVec &BitVec::operator&=(const BitVec &other) {
    if (other.num_bits_ != num_bits_) {
        throw std::invalid_argument("BitVec size mismatch");
    }
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] &= other.words_[k];
    }
    return *this;
}

BitVec &BitVec::operator|=(const BitVec &other) {
    if (other.num_bits_ != num_bits_) {
        throw std::invalid_argument("BitVec size mismatch");
    }
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] |= other.words_[k];
    }
    return *this;
}

BitVec BitVec::operator^(const BitVec &other) const {
    BitVec r = *this;
    r ^= other;
    return r;
}

BitVec BitVec::operator&(const BitVec &other) const {
    BitVec r = *this;
    r &= other;
    return r;
}

size_t BitVec::popcount() const {
    size_t n = 0;
    for (auto w : words_) {
        n += std::popcount(w);
    }
    return n;
}

bool BitVec::any() const {
    for (auto w : words_) {
        if (w) {
            return true;
        }
    }
    return false;
}

bool BitVec::dot(const BitVec &other) const {
    if (other.num_bits_ != num_bits_) {
        throw std::invalid_argument("BitVec size mismatch");
    }
    uint64_t acc = 0;
    for (size_t k = 0; k < words_.size(); k++) {
        acc ^= words_[k] & other.words_[k];
    }
    return std::popcount(acc) & 1;
}

std::vector<size_t> BitVec::ones() const {
    std::vector<size_t> out;
    for (size_t k = 0; k < words_.size(); k++) {
        uint64_t w = words_[k];
        while (w) {
            out.push_back(k * 64 + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

std::string BitVec::str() const {
    std::string s(num_bits_, '0');
    for (size_t k = 0; k < num_bits_; k++) {
        if (get(k)) {
            s[k] = '1';
        }
    }
    return s;
}

BitVec BitVec::from_str(const std::string &text) {
    BitVec v(text.size());
    for (size_t k = 0; k < text.size(); k++) {
        if (text[k] == '1') {
            v.set(k, true);
        } else if (text[k] != '0') {
            throw std::invalid_argument("BitVec::from_str expects only '0' and '1'");
        }
    }
    return v;
}

size_t BitVecHash::operator()(const BitVec &v) const {
    uint64_t h = 0xcbf29ce484222325ULL ^ v.size();
    for (size_t k = 0; k < v.num_words(); k++) {
        h ^= v.words()[k];
        h *= 0x100000001b3ULL;
        h ^= h >> 29;
    }
    return (size_t)h;
}
