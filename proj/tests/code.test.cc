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

#include <bit>
#include <set>

#include "gtest/gtest.h"
#include "tesseract/verifier.h"

using namespace tess;
using namespace tess::code;

namespace {

// Reed-Muller codes over the 4 bits of the qubit index, built from monomials.
std::set<Mask> reed_muller(int order) {
    std::vector<Mask> monomials;
    for (int vars = 0; vars < 16; vars++) {
        if (std::popcount((unsigned)vars) > order) {
            continue;
        }
        Mask m = 0;
        for (int q = 0; q < 16; q++) {
            if ((q & vars) == vars) {
                m |= (Mask)(1u << q);
            }
        }
        monomials.push_back(m);
    }
    std::set<Mask> span{0};
    for (Mask g : monomials) {
        std::set<Mask> next = span;
        for (Mask s : span) {
            next.insert((Mask)(s ^ g));
        }
        span = next;
    }
    return span;
}

int weight(Mask m) {
    return std::popcount((unsigned)m);
}

}  // namespace

TEST(code, stabilizer_and_normalizer_membership) {
    auto rm1 = reed_muller(1);
    auto rm2 = reed_muller(2);
    ASSERT_EQ(rm1.size(), 32u);
    ASSERT_EQ(rm2.size(), 2048u);
    for (uint32_t m = 0; m < 65536; m++) {
        ASSERT_EQ(in_stabilizer((Mask)m), rm1.count((Mask)m) == 1) << m;
        ASSERT_EQ(in_normalizer((Mask)m), rm2.count((Mask)m) == 1) << m;
    }
}

TEST(code, generators) {
    const auto &gens = stabilizer_generators();
    ASSERT_EQ(gens.size(), 5u);
    std::set<Mask> span{0};
    for (Mask g : gens) {
        EXPECT_TRUE(in_stabilizer(g));
        EXPECT_EQ(weight(g) % 8, 0);
        std::set<Mask> next = span;
        for (Mask s : span) {
            next.insert((Mask)(s ^ g));
        }
        span = next;
    }
    EXPECT_EQ(span.size(), 32u);
    // X and Z generators share supports; any two even-overlap.
    for (Mask a : gens) {
        for (Mask b : gens) {
            EXPECT_EQ(weight(a & b) % 2, 0);
        }
    }
    EXPECT_TRUE(in_stabilizer((Mask)(row_mask(0) | row_mask(1))));
    EXPECT_TRUE(in_stabilizer((Mask)(col_mask(2) | col_mask(3))));
}

TEST(code, logical_basis) {
    const auto &lb = logical_basis();
    EXPECT_EQ(lb.x[0], row_mask(0));
    EXPECT_EQ(lb.z[1], row_mask(0));
    EXPECT_EQ(lb.x[1], col_mask(0));
    EXPECT_EQ(lb.z[0], col_mask(0));
    EXPECT_EQ(lb.x[2], mask_of({0, 1, 4, 5}));
    EXPECT_EQ(lb.z[2], mask_of({5, 6, 9, 10}));
    EXPECT_EQ(lb.x[3], mask_of({5, 6, 9, 10}));
    EXPECT_EQ(lb.z[3], mask_of({0, 1, 4, 5}));
    EXPECT_EQ(lb.x[4], mask_of({1, 2, 5, 6}));
    EXPECT_EQ(lb.z[4], mask_of({4, 5, 8, 9}));
    EXPECT_EQ(lb.x[5], mask_of({4, 5, 8, 9}));
    EXPECT_EQ(lb.z[5], mask_of({1, 2, 5, 6}));
    for (int i = 0; i < kNumLogical; i++) {
        EXPECT_TRUE(in_normalizer(lb.x[i]) && !in_stabilizer(lb.x[i]));
        EXPECT_TRUE(in_normalizer(lb.z[i]) && !in_stabilizer(lb.z[i]));
        for (int j = 0; j < kNumLogical; j++) {
            EXPECT_EQ(weight(lb.x[i] & lb.z[j]) % 2, i == j ? 1 : 0) << i << " " << j;
        }
    }
    LogicalBasis derived = derive_logical_basis();
    EXPECT_EQ(derived.x, lb.x);
    EXPECT_EQ(derived.z, lb.z);
}

TEST(code, coordinates) {
    for (LogicalSet s = 0; s < 64; s++) {
        EXPECT_EQ(x_coordinates(canonical_x(s)), s);
        EXPECT_EQ(z_coordinates(canonical_z(s)), s);
        EXPECT_EQ(x_coordinates((Mask)(canonical_x(s) ^ stabilizer_generators()[2])), s);
    }
    EXPECT_EQ(logicals({3, 6}), (LogicalSet)0b100100);
    EXPECT_EQ(canonical_x(logicals({3})), logical_basis().x[2]);
}

TEST(code, distance_four) {
    auto rm1 = reed_muller(1);
    auto rm2 = reed_muller(2);
    int best = 17;
    for (Mask m : rm2) {
        if (rm1.count(m) == 0) {
            best = std::min(best, weight(m));
        }
    }
    EXPECT_EQ(best, 4);
    EXPECT_EQ(check_distance(16, tesseract_stabilizers(), tesseract_logicals(), 4), 4);
}

TEST(code, check_distance_small_codes) {
    // [[4,2,2]].
    std::vector<PauliString> s4{PauliString::from_str("XXXX"), PauliString::from_str("ZZZZ")};
    std::vector<PauliString> l4{PauliString::from_str("XX__"), PauliString::from_str("ZZ__"),
                                PauliString::from_str("X_X_"), PauliString::from_str("Z_Z_")};
    EXPECT_EQ(check_distance(4, s4, l4, 3), 2);
    // No stabilizers: distance 1.
    EXPECT_EQ(check_distance(2, {}, {PauliString::from_str("X_"), PauliString::from_str("Z_")}, 2), 1);
    // [[8,3,2]] cube code: Z distance 2, X distance 4.
    std::vector<PauliString> s8{PauliString::from_str("XXXXXXXX"), PauliString::from_str("ZZZZ____"),
                                PauliString::from_str("ZZ__ZZ__"), PauliString::from_str("Z_Z_Z_Z_"),
                                PauliString::from_str("ZZZZZZZZ")};
    std::vector<PauliString> l8{PauliString::from_str("XXXX____"), PauliString::from_str("XX__XX__"),
                                PauliString::from_str("X_X_X_X_"), PauliString::from_str("ZZ______"),
                                PauliString::from_str("Z_Z_____"), PauliString::from_str("Z___Z___")};
    EXPECT_EQ(check_distance(8, s8, l8, 4, PauliFilter::Z_ONLY), 2);
    EXPECT_EQ(check_distance(8, s8, l8, 4, PauliFilter::X_ONLY), 4);
    EXPECT_EQ(check_distance(8, s8, l8, 4), 2);
}

TEST(code, weight4_representatives) {
    for (Mask m : {row_mask(0), logical_basis().x[2], canonical_x(logicals({3, 4}))}) {
        std::vector<Mask> want;
        for (uint32_t w = 0; w < 65536; w++) {
            if (weight((Mask)w) == 4 && in_stabilizer((Mask)(w ^ m))) {
                want.push_back((Mask)w);
            }
        }
        EXPECT_EQ(weight4_representatives(m), want);
    }
}

TEST(code, catalog_families_partition_qubits) {
    const auto &catalog = logical_measurement_catalog();
    ASSERT_FALSE(catalog.empty());
    for (const auto &e : catalog) {
        Mask all = 0;
        for (Mask r : e.reps) {
            EXPECT_EQ(weight(r), 4);
            EXPECT_EQ(all & r, 0);
            all |= r;
            EXPECT_EQ(x_coordinates(r), e.logicals);
        }
        EXPECT_EQ(all, 0xFFFF);
    }
    auto fam = disjoint_representatives(row_mask(0));
    for (int k = 0; k < 4; k++) {
        EXPECT_EQ(fam[k], row_mask(k));
    }
    for (const auto &f : disjoint_families(logical_basis().x[2])) {
        EXPECT_EQ(f[0] | f[1] | f[2] | f[3], 0xFFFF);
    }
}

TEST(code, perm_helpers) {
    Perm p = perm_from_cycles({{0, 2, 5}, {3, 6, 4}, {8, 15, 10}, {9, 12, 14}});
    EXPECT_EQ(p, pi_perm());
    EXPECT_EQ(compose(p, inverse(p)), identity_perm());
    EXPECT_EQ(compose(compose(p, p), p), identity_perm());
    EXPECT_EQ(apply_perm(swap_rows(0, 1), row_mask(0)), row_mask(1));
    EXPECT_EQ(apply_perm(swap_cols(0, 3), col_mask(0)), col_mask(3));
    EXPECT_EQ(apply_perm(transpose_perm(), row_mask(2)), col_mask(2));
    EXPECT_EQ(perm_str(p), "(0,2,5)(3,6,4)(8,15,10)(9,12,14)");
}

TEST(code, logical_actions) {
    auto id = logical_action_of(identity_perm());
    EXPECT_TRUE(id.is_permutation());
    for (int i = 0; i < kNumLogical; i++) {
        EXPECT_EQ(id.x_image[i], 1 << i);
        EXPECT_EQ(id.z_image[i], 1 << i);
    }
    EXPECT_TRUE(is_automorphism(pi_perm()));
    auto pi = logical_action_of(pi_perm());
    EXPECT_TRUE(pi.is_permutation());
    // 3 -> 1 -> 5 -> 3 and 4 -> 2 -> 6 -> 4, for X and Z alike.
    const std::array<int, 7> image{0, 5, 6, 1, 2, 3, 4};
    for (int l = 1; l <= kNumLogical; l++) {
        EXPECT_EQ(pi.x_image[l - 1], logicals({image[l]})) << l;
        EXPECT_EQ(pi.z_image[l - 1], logicals({image[l]})) << l;
    }
    EXPECT_EQ(pi.str(), "(1,5,3)(2,6,4)");
    // Checked by hand on the supports: X_3 goes to X_1.
    EXPECT_EQ(x_coordinates(apply_perm(pi_perm(), logical_basis().x[2])), logicals({1}));

    Perm bad = identity_perm();
    std::swap(bad[0], bad[1]);
    std::swap(bad[1], bad[7]);
    EXPECT_FALSE(is_automorphism(bad));
    EXPECT_THROW(logical_action_of(bad), std::invalid_argument);
}
