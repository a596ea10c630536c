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

#include "flag_rule_oracle.h"
#include "gtest/gtest.h"

using namespace tess;
using namespace tess::code;

using tess::oracle::column_group;
using tess::oracle::record_of;

TEST(decoder, matches_reference_flag_rule) {
    std::string first;
    EXPECT_EQ(tess::oracle::compare_with_oracle(100000, 7, &first), 0u) << first;
}

TEST(decoder, complementary_pair_is_accepted_up_to_row) {
    GroupStep g = column_group();
    BlockFrame f;
    f.flag_z = Flag{row_mask(2), mask_of({8, 9})};
    auto got = process_group(g, record_of({0, 1, 1, 0}), f);
    EXPECT_TRUE(got.rejected);

    f = BlockFrame{};
    f.flag_z = Flag{row_mask(2), mask_of({8, 9})};
    got = process_group(g, record_of({0, 0, 1, 1}), f);
    ASSERT_FALSE(got.rejected);
    // The flagged pair flipped the first two columns, so all four agree on 1 once corrected.
    EXPECT_EQ(got.value, 1);
    EXPECT_EQ(f.fz, mask_of({8, 9}));
}

TEST(decoder, frame_feeds_effective_outcomes) {
    GroupStep g = column_group();
    BlockFrame f;
    f.fz = mask_of({5});
    auto got = process_group(g, record_of({0, 1, 0, 0}), f);
    ASSERT_FALSE(got.rejected);
    EXPECT_EQ(got.value, 0);
    EXPECT_FALSE(f.flag_z.has_value());
}

TEST(decoder, ec_rule_raises_flag_on_disagreeing_rep) {
    GroupStep g = column_group();
    BlockFrame f;
    auto got = process_group(g, record_of({1, 1, 0, 1}), f);
    ASSERT_FALSE(got.rejected);
    EXPECT_EQ(got.value, 1);
    ASSERT_TRUE(f.flag_z.has_value());
    EXPECT_EQ(f.flag_z->support, col_mask(2));
    EXPECT_EQ(f.flag_z->pair, mask_of({2, 6}));
}

TEST(decoder, logical_group_flags) {
    GroupStep g;
    g.basis = Basis::Z;
    g.fix_x = mask_of({0, 1});
    for (int k = 0; k < 4; k++) {
        g.reps[k].support = row_mask(k);
        g.reps[k].record = (uint32_t)k;
        g.reps[k].flavor = Flavor::ONE_FLAG;
        g.reps[k].flag0 = 4 + k;
        g.reps[k].hook_pair = mask_of({4 * k, 4 * k + 1});
    }
    BitVec r(8);
    r.set(0, true);
    r.set(1, true);
    r.set(2, true);
    BlockFrame f;
    auto got = process_group(g, r, f);
    ASSERT_FALSE(got.rejected);
    EXPECT_EQ(got.value, 1);
    EXPECT_EQ(f.fx, mask_of({0, 1}));
    EXPECT_FALSE(f.flag_z.has_value());

    r.set(5, true);
    f = BlockFrame{};
    got = process_group(g, r, f);
    ASSERT_FALSE(got.rejected);
    ASSERT_TRUE(f.flag_z.has_value());
    EXPECT_EQ(f.flag_z->support, row_mask(1));

    r.set(6, true);
    f = BlockFrame{};
    EXPECT_TRUE(process_group(g, r, f).rejected);

    r.set(6, false);
    f = BlockFrame{};
    f.flag_z = Flag{col_mask(0), mask_of({0, 4})};
    EXPECT_TRUE(process_group(g, r, f).rejected);

    // A 2-2 split without any flag is a tie.
    BitVec tie(8);
    tie.set(0, true);
    tie.set(1, true);
    f = BlockFrame{};
    EXPECT_TRUE(process_group(g, tie, f).rejected);
}

TEST(decoder, two_flag_fix) {
    GroupStep g;
    g.basis = Basis::X;
    for (int k = 0; k < 4; k++) {
        g.reps[k].support = col_mask(k);
        g.reps[k].record = (uint32_t)k;
        g.reps[k].flavor = Flavor::TWO_FLAG;
        g.reps[k].flag0 = 4 + 2 * k;
        g.reps[k].flag1 = 5 + 2 * k;
        g.reps[k].two_flag_fix = mask_of({k, 4 + k});
    }
    BitVec r(12);
    r.set(6, true);
    r.set(7, true);
    BlockFrame f;
    auto got = process_group(g, r, f);
    ASSERT_FALSE(got.rejected);
    EXPECT_EQ(f.fx, mask_of({1, 5}));
}

TEST(decoder, transversal_correction_single_flips) {
    std::vector<Mask> words = {0, logical_basis().z[2], stabilizer_generators()[1], row_mask(3)};
    for (Mask w : words) {
        ASSERT_TRUE(in_normalizer(w));
        for (int q = 0; q < 16; q++) {
            auto c = transversal_correction((Mask)(w ^ (1u << q)), std::nullopt);
            ASSERT_TRUE(c.has_value());
            EXPECT_EQ(*c, (Mask)(1u << q));
        }
    }
    EXPECT_EQ(transversal_correction(0, std::nullopt), Mask{0});
    EXPECT_FALSE(transversal_correction(mask_of({0, 1}), std::nullopt).has_value());
    Flag fl{row_mask(0), mask_of({0, 1})};
    EXPECT_EQ(transversal_correction(mask_of({0, 1}), fl), mask_of({0, 1}));
    EXPECT_EQ(transversal_correction(mask_of({2, 3}), fl), mask_of({0, 1}));
    // Singles outside the flag support are not trusted while a flag is pending.
    EXPECT_FALSE(transversal_correction(mask_of({9}), fl).has_value());
    EXPECT_EQ(transversal_correction(mask_of({2}), fl), mask_of({2}));
}

TEST(decoder, transversal_read_step) {
    DecodePlan plan;
    plan.num_blocks = 1;
    int32_t slot = plan.add_slot("Z3");
    TransversalReadStep t;
    t.basis = Basis::Z;
    for (int q = 0; q < 16; q++) {
        t.records[q] = (uint32_t)q;
    }
    t.outputs.push_back({slot, logical_basis().z[2]});
    plan.steps.push_back(t);
    plan.checks.push_back(Check{{slot}, {}, false, "Z3"});

    BitVec r(16);
    auto res = decode(plan, r);
    EXPECT_EQ(res.verdict, Verdict::ACCEPTED);
    EXPECT_FALSE(res.logical_error);

    r.set(5, true);
    res = decode(plan, r);
    EXPECT_EQ(res.verdict, Verdict::ACCEPTED);
    EXPECT_FALSE(res.logical_error);

    r.set(6, true);
    res = decode(plan, r);
    EXPECT_EQ(res.verdict, Verdict::POST_REJECTED);
}

TEST(decoder, prep_check_prerejects) {
    DecodePlan plan;
    plan.num_blocks = 1;
    plan.steps.push_back(PrepCheckStep{0, {0, 1}});
    BitVec r(2);
    EXPECT_EQ(decode(plan, r).verdict, Verdict::ACCEPTED);
    r.set(1, true);
    EXPECT_EQ(decode(plan, r).verdict, Verdict::PRE_REJECTED);
}

TEST(decoder, cnot_copies_frame_and_flags) {
    DecodePlan plan;
    plan.num_blocks = 2;
    int32_t a = plan.add_slot("a");
    int32_t b = plan.add_slot("b");
    // Raise an X flag on block 0 through an EC disagreement, then copy it through the CNOT.
    GroupStep g;
    g.block = 0;
    g.basis = Basis::Z;
    g.ec_rule = true;
    for (int k = 0; k < 4; k++) {
        g.reps[k].support = row_mask(k);
        g.reps[k].record = (uint32_t)k;
        g.reps[k].flavor = Flavor::JOINT;
        g.reps[k].hook_pair = mask_of({4 * k, 4 * k + 1});
    }
    plan.steps.push_back(g);
    plan.steps.push_back(CnotStep{0, 1});
    for (uint32_t blk = 0; blk < 2; blk++) {
        TransversalReadStep t;
        t.block = blk;
        t.basis = Basis::Z;
        for (int q = 0; q < 16; q++) {
            t.records[q] = 4 + 16 * blk + (uint32_t)q;
        }
        t.outputs.push_back({blk == 0 ? a : b, logical_basis().z[2]});
        plan.steps.push_back(t);
    }
    plan.checks.push_back(Check{{a}, {}, false, "a"});
    plan.checks.push_back(Check{{b}, {}, false, "b"});

    // Hook pair {4,5} on both blocks; rep 1 disagrees.
    BitVec r(36);
    r.set(1, true);
    for (int q : {4, 5}) {
        r.set(4 + q, true);
        r.set(20 + q, true);
    }
    auto res = decode(plan, r);
    ASSERT_EQ(res.verdict, Verdict::ACCEPTED);
    EXPECT_FALSE(res.logical_error);

    // Without the flag the same pair on the read is uncorrectable.
    r.set(1, false);
    res = decode(plan, r);
    EXPECT_EQ(res.verdict, Verdict::POST_REJECTED);
}

TEST(decoder, permute_moves_frame) {
    DecodePlan plan;
    plan.num_blocks = 1;
    int32_t s = plan.add_slot("Z");
    PermuteStep p;
    p.perm = pi_perm();
    plan.steps.push_back(p);
    TransversalReadStep t;
    t.basis = Basis::Z;
    for (int q = 0; q < 16; q++) {
        t.records[q] = (uint32_t)q;
    }
    t.outputs.push_back({s, logical_basis().z[2]});
    plan.steps.push_back(t);
    BitVec r(16);
    auto res = decode(plan, r);
    ASSERT_EQ(res.verdict, Verdict::ACCEPTED);
    EXPECT_EQ(res.slots[s], 0);
}

TEST(decoder, split_side) {
    std::vector<Mask> pairs;
    std::vector<uint32_t> recs;
    for (int q = 0; q < 16; q += 2) {
        pairs.push_back(mask_of({q, q + 1}));
        recs.push_back((uint32_t)recs.size());
    }
    auto side = make_split_side(Basis::X, pairs, recs, {{0, logical_basis().x[2]}});
    ASSERT_EQ(side.outputs.size(), 1u);
    EXPECT_EQ(side.outputs[0].second, 0b000101u);
    for (auto c : side.checks) {
        Mask m = 0;
        for (size_t k = 0; k < pairs.size(); k++) {
            if ((c >> k) & 1) {
                m ^= pairs[k];
            }
        }
        EXPECT_TRUE(in_stabilizer(m));
    }
    EXPECT_THROW(make_split_side(Basis::X, pairs, recs, {{0, mask_of({0})}}), std::invalid_argument);
}
