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

#ifndef TESSERACT_CODE_H
#define TESSERACT_CODE_H

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace tess {

/// Subsets of the 16 block qubits. Qubit q sits at row q / 4 and column q % 4 of the 4x4 grid.
using Mask = uint16_t;
/// Permutation of the block qubits: the state on qubit q moves to qubit perm[q].
using Perm = std::array<uint8_t, 16>;

namespace code {

constexpr int kNumQubits = 16;
constexpr int kNumLogical = 6;

inline int row_of(int q) {
    return q >> 2;
}
inline int col_of(int q) {
    return q & 3;
}
inline Mask row_mask(int r) {
    return (Mask)(0xF << (4 * r));
}
inline Mask col_mask(int c) {
    return (Mask)(0x1111 << c);
}
Mask mask_of(std::initializer_list<int> qubits);
std::vector<int> qubits_of(Mask m);
std::string mask_str(Mask m);

/// The five generators shared by the X and Z stabilizer groups: the all-ones vector and the pairs of
/// rows and pairs of columns spanning the first order Reed-Muller code RM(1,4).
const std::vector<Mask> &stabilizer_generators();
/// Membership in RM(1,4) (stabilizers) and RM(2,4) (normalizer, stabilizers times logicals and gauges).
bool in_stabilizer(Mask m);
bool in_normalizer(Mask m);

/// Logical operators as supports. Entry i describes logical qubit i + 1. Logicals 1 and 2 are the gauge
/// qubits of the [[16,4,4]] subsystem code.
struct LogicalBasis {
    std::array<Mask, kNumLogical> x;
    std::array<Mask, kNumLogical> z;
};

/// Searches the 2x2 grid rectangles for the basis anchored by X_1 = Z_2 = row 0, X_2 = Z_1 = column 0 and
/// X_3 = {0,1,4,5}, on which the 3-cycle automorphism (0,2,5)(3,6,4)(8,15,10)(9,12,14) acts as the logical
/// permutation (3,1,5)(4,2,6). Throws std::logic_error if no consistent basis exists.
LogicalBasis derive_logical_basis();
const LogicalBasis &logical_basis();

/// Bit i of a logical index set refers to logical qubit i + 1.
using LogicalSet = uint8_t;
LogicalSet logicals(std::initializer_list<int> one_based);

/// Canonical support of the X-type (or Z-type) product of the given logicals.
Mask canonical_x(LogicalSet s);
Mask canonical_z(LogicalSet s);
/// Which logical X (resp. Z) operators an X-type (resp. Z-type) normalizer element acts as.
LogicalSet x_coordinates(Mask x_support);
LogicalSet z_coordinates(Mask z_support);

/// All weight-4 supports in the coset of `m` modulo the stabilizers, ascending.
std::vector<Mask> weight4_representatives(Mask m);
/// Every way of splitting the qubits into four disjoint weight-4 representatives of `m`'s coset.
std::vector<std::array<Mask, 4>> disjoint_families(Mask m);
/// The preferred family: the one containing the lowest representative, ordered by lowest qubit.
/// Throws std::invalid_argument if the coset admits no family.
std::array<Mask, 4> disjoint_representatives(Mask m);

struct CatalogEntry {
    LogicalSet logicals;
    std::array<Mask, 4> reps;
};
/// All logical products (same index set used for X and Z, since the X and Z spaces coincide) that have a
/// family of four disjoint weight-4 representatives.
const std::vector<CatalogEntry> &logical_measurement_catalog();

/// How a qubit permutation acts on the logical operators: x_image[i] is the set of logical X operators
/// that X_{i+1} is mapped to, likewise for Z.
struct LogicalAction {
    std::array<LogicalSet, kNumLogical> x_image{};
    std::array<LogicalSet, kNumLogical> z_image{};

    bool is_permutation() const;
    /// Cycle notation like "(3,1,5)(4,2,6)" for permutations, otherwise one "Xi->..." entry per changed
    /// logical.
    std::string str() const;
    bool operator==(const LogicalAction &other) const = default;
};

Perm identity_perm();
Perm compose(const Perm &first, const Perm &second);
Perm inverse(const Perm &p);
Perm perm_from_cycles(const std::vector<std::vector<int>> &cycles);
std::string perm_str(const Perm &p);
Mask apply_perm(const Perm &p, Mask m);

bool is_automorphism(const Perm &p);
/// Throws std::invalid_argument if `p` does not preserve the stabilizer group.
LogicalAction logical_action_of(const Perm &p);

/// Named permutations of the grid.
Perm swap_rows(int a, int b);
Perm swap_cols(int a, int b);
Perm transpose_perm();
/// The 3-cycle of logicals (3,1,5)(4,2,6).
Perm pi_perm();

}  // namespace code
}  // namespace tess

#endif
