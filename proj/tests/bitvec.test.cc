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

#include "gtest/gtest.h"

using namespace tess;

TEST(bitvec, set_get_flip) {
    BitVec v(130);
    EXPECT_EQ(v.size(), 130u);
    EXPECT_EQ(v.num_words(), 3u);
    EXPECT_TRUE(v.none());
    v.set(0, true);
    v.set(64, true);
    v.flip(129);
    EXPECT_TRUE(v[0] && v[64] && v[129]);
    EXPECT_EQ(v.popcount(), 3u);
    EXPECT_EQ(v.ones(), (std::vector<size_t>{0, 64, 129}));
    v.flip(64);
    EXPECT_FALSE(v.get(64));
    v.clear();
    EXPECT_TRUE(v.none());
}

TEST(bitvec, arithmetic) {
    BitVec a = BitVec::from_str("1100");
    BitVec b = BitVec::from_str("1010");
    EXPECT_EQ((a ^ b).str(), "0110");
    EXPECT_EQ((a & b).str(), "1000");
    BitVec c = a;
    c |= b;
    EXPECT_EQ(c.str(), "1110");
    EXPECT_TRUE(a.dot(b));
    EXPECT_FALSE(a.dot(BitVec::from_str("0011")));
}

TEST(bitvec, resize_keeps_tail_zero) {
    BitVec v(70);
    for (size_t k = 0; k < 70; k++) {
        v.set(k, true);
    }
    v.resize(10);
    EXPECT_EQ(v.popcount(), 10u);
    v.resize(70);
    EXPECT_EQ(v.popcount(), 10u);
}

TEST(bitvec, str_round_trip) {
    BitVec v = BitVec::from_str("0010110");
    EXPECT_EQ(v.str(), "0010110");
    EXPECT_EQ(BitVecHash{}(v), BitVecHash{}(BitVec::from_str("0010110")));
}
