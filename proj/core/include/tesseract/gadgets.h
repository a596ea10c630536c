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

#ifndef TESSERACT_GADGETS_H
#define TESSERACT_GADGETS_H

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tesseract/circuit.h"
#include "tesseract/code.h"
#include "tesseract/decoder.h"

namespace tess {

/// A code block: 16 data qubits starting at `base` plus its ancillas.
struct BlockHandle {
    uint32_t index = 0;
    uint32_t base = 0;
    std::vector<uint32_t> ancillas;

    uint32_t q(int local) const {
        return base + (uint32_t)local;
    }
    std::vector<uint32_t> data() const;
    std::vector<uint32_t> all_qubits() const;
};

/// Circuit plus classical decode plan under construction. Every instruction carries a region tag so fault
/// enumeration can be restricted to parts of the circuit; `finalize` schedules the circuit and rewrites
/// the plan's record indices to match.
class Program {
   public:
    Circuit circuit;
    DecodePlan plan;
    std::vector<BlockHandle> blocks;
    std::vector<uint32_t> op_region;
    std::vector<std::string> region_names{"main"};

    BlockHandle add_block(int num_ancillas = 2);
    uint32_t add_qubits(uint32_t k);
    /// Tags subsequent instructions with region `name` (created on first use).
    void set_region(const std::string &name);

    void op(Gate g, std::vector<uint32_t> targets);
    uint32_t measure(Basis b, uint32_t q, RecordRole role, int32_t block, std::string label);
    void add_step(Step s) {
        plan.steps.push_back(std::move(s));
    }
    void add_check(Check c) {
        plan.checks.push_back(std::move(c));
    }

    void finalize();
    bool finalized() const {
        return finalized_;
    }
    /// Per instruction flag: true if its region is one of `names`.
    std::vector<bool> ops_in_regions(const std::vector<std::string> &names) const;

   private:
    uint32_t region_ = 0;
    bool finalized_ = false;
};

enum class PrepState : uint8_t {
    /// |+0+0+0>: two [[8,3,2]] halves, each a postselected RM(1,3) encoder.
    PLUS_ZERO,
    /// |++0000>.
    PLUS_PLUS_ZERO,
    /// |00++++>, the X/Z dual of |++0000> on the transposed grid.
    ZERO_ZERO_PLUS,
};
const char *prep_state_name(PrepState s);

/// Postselected preparation; all check records go into one PrepCheckStep.
void prepare(Program &p, const BlockHandle &b, PrepState state);

/// Weight-4 measurement of X or Z on `support` (local qubit indices, in gadget order). Appends the circuit
/// and returns the decode description; the caller places it in a group.
/// `rotation` cycles the roles of the ancillas so consecutive calls with increasing rotation overlap the
/// measurement of one with the reset of the next.
RepMeasurement measure_w4(Program &p, const BlockHandle &b, std::array<int, 4> support, Basis basis, Flavor flavor,
                          const std::string &label, unsigned rotation = 0);

/// Simultaneous X and Z measurement of the same support with 8 CNOTs and 2 ancillas. Index 0 is the X
/// part, index 1 the Z part. With `swap_ancillas` the two ancillas trade roles, so a gadget that follows
/// an unswapped one can start a layer earlier.
std::array<RepMeasurement, 2> measure_w4_joint(Program &p, const BlockHandle &b, std::array<int, 4> support,
                                               const std::string &label, bool swap_ancillas = false);

struct GroupTarget {
    Mask fix_x = 0;
    Mask fix_z = 0;
    int32_t slot = -1;
};

/// Joint measurements on four disjoint supports, decoded with the EC rule as an X group and a Z group.
void joint_groups(Program &p, const BlockHandle &b, const std::array<std::array<int, 4>, 4> &reps,
                  const std::string &label, GroupTarget x_group = {}, GroupTarget z_group = {});

/// One round of error correction: joint measurements along the four rows, then down the four columns.
void ec_round(Program &p, const BlockHandle &b);

/// Representatives of the family ordered for gadgets: qubits sorted by the index of the `next` family's
/// representative they cross (qubit order when `next` is empty or crossings are not unique).
std::array<std::array<int, 4>, 4> ordered_family(const std::array<Mask, 4> &family,
                                                 const std::vector<Mask> &next = {});

/// A disjoint family of representatives of `coset`, preferring one whose representatives cross each of
/// `previous` in exactly one qubit.
std::array<Mask, 4> choose_family(Mask coset, const std::vector<Mask> &previous = {});

struct LogicalMeasureSpec {
    Basis basis = Basis::X;
    std::array<std::array<int, 4>, 4> reps{};
    Flavor flavor = Flavor::ONE_FLAG;
    GroupTarget target;
    std::string label;
};

/// Measures the four representatives one after another and adds a majority-vote group.
void logical_measure(Program &p, const BlockHandle &b, const LogicalMeasureSpec &spec);

/// CNOT from logical `control` to `target` through gauge qubit `gauge` (starting in |0>):
/// measure X_g X_t (fix Z_g), Z_g Z_c (fix X_g X_t), X_g (fix Z_g Z_c).
void mb_cnot(Program &p, const BlockHandle &b, int control, int target, int gauge = 2,
             Flavor flavor = Flavor::ONE_FLAG);

/// Relabels the block's data qubits. Frame and flags follow.
void permute_block(Program &p, const BlockHandle &b, const Perm &perm);

/// Permutes the target block by `perm` and then applies CNOT from control qubit i to target qubit i.
void transversal_cnot(Program &p, const BlockHandle &control, const BlockHandle &target,
                      const Perm &perm = code::identity_perm());

/// Measures all 16 data qubits in `basis`; each output slot receives the parity of its support after
/// decoding.
void measure_transversal(Program &p, const BlockHandle &b, Basis basis,
                         const std::vector<std::pair<int32_t, Mask>> &outputs);

/// Split measurement: for each (control row, target row) pair, CNOTs down the columns, then X on control
/// rows and Z on target rows.
void measure_split(Program &p, const BlockHandle &b, const std::vector<std::pair<int, int>> &row_pairs,
                   const std::vector<std::pair<int32_t, Mask>> &x_outputs,
                   const std::vector<std::pair<int32_t, Mask>> &z_outputs);

/// Merges Bell pairs (3,6) and (4,5) into a cat state by measuring Z_4 Z_6 (fix X_3 X_6).
void cat_merge(Program &p, const BlockHandle &b, Flavor flavor = Flavor::ONE_FLAG);

/// Physical permutation swapping rows 1 and 2, which entangles logicals (3,6) and (4,5) into Bell pairs
/// when applied to |+0+0+0>.
Perm bell_perm();

}  // namespace tess

#endif
