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

#ifndef TESSERACT_DECODER_H
#define TESSERACT_DECODER_H

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tesseract/bitvec.h"
#include "tesseract/code.h"

namespace tess {

enum class Basis : uint8_t { X, Z };
inline char basis_char(Basis b) {
    return b == Basis::X ? 'X' : 'Z';
}
inline Basis dual(Basis b) {
    return b == Basis::X ? Basis::Z : Basis::X;
}

enum class RecordRole : uint8_t { PREP_CHECK, SYNDROME, FLAG, DATA };
const char *role_name(RecordRole r);

struct RecordInfo {
    RecordRole role;
    int32_t block;
    std::string label;
};

/// A possible correlated weight-2 error: it lies inside `support` and equals either `pair` or
/// `support ^ pair` (the two agree modulo the measured operator). `pair` is the correction applied.
struct Flag {
    Mask support = 0;
    Mask pair = 0;
    bool operator==(const Flag &other) const = default;
};

enum class Flavor : uint8_t { NON_FT, ONE_FLAG, TWO_FLAG, JOINT };
const char *flavor_name(Flavor f);

/// One weight-4 measurement inside a group.
struct RepMeasurement {
    Mask support = 0;
    uint32_t record = 0;
    Flavor flavor = Flavor::NON_FT;
    /// Flag records: ONE_FLAG uses flag0, TWO_FLAG uses both.
    int64_t flag0 = -1;
    int64_t flag1 = -1;
    /// Pair left behind by a single ancilla fault (ONE_FLAG and JOINT).
    Mask hook_pair = 0;
    /// Frame toggle, of the error type the ancilla spreads, applied when both TWO_FLAG flags fire.
    Mask two_flag_fix = 0;
};

/// Four disjoint representatives of one operator measured in `basis`. With `ec_rule` a disagreeing
/// representative raises a flag on its own support (the joint gadgets carry no flag qubit). Otherwise flags
/// come from the flag records only.
struct GroupStep {
    uint32_t block = 0;
    Basis basis = Basis::X;
    bool ec_rule = false;
    std::array<RepMeasurement, 4> reps{};
    /// Frame toggles applied when the decoded value is 1.
    Mask fix_x = 0;
    Mask fix_z = 0;
    int32_t slot = -1;
    std::string label;
};

struct PrepCheckStep {
    uint32_t block = 0;
    std::vector<uint32_t> records;
};

struct PermuteStep {
    uint32_t block = 0;
    Perm perm{};
};

/// Transversal CNOT from block `control` into block `target` (qubit i to qubit i).
struct CnotStep {
    uint32_t control = 0;
    uint32_t target = 0;
};

struct ReadOutput {
    int32_t slot;
    Mask support;
};

/// Destructive single-qubit measurement of all 16 data qubits in one basis.
struct TransversalReadStep {
    uint32_t block = 0;
    Basis basis = Basis::X;
    std::array<uint32_t, 16> records{};
    std::vector<ReadOutput> outputs;
};

/// Split read: CNOTs pair up data qubits, the controls are measured in X and the targets in Z. Each pair
/// bit is the parity of a 2-qubit X (control side) or Z (target side) operator of the code block before the
/// CNOTs. `checks` are the stabilizers readable from the pair bits and `syndrome_fix` maps a nonzero
/// syndrome to the single pair bit to flip (or -1 to reject).
struct SplitSide {
    Basis basis = Basis::X;
    std::vector<Mask> pair_supports;
    std::vector<uint32_t> records;
    std::vector<uint32_t> checks;
    std::vector<int> syndrome_fix;
    /// Outputs given as sets of pair bits.
    std::vector<std::pair<int32_t, uint32_t>> outputs;
};

struct SplitReadStep {
    uint32_t block = 0;
    std::array<SplitSide, 2> sides;
};

/// Parity check over logical slots and raw records; the trial is a logical error if the parity differs
/// from `expected`.
struct Check {
    std::vector<int32_t> slots;
    std::vector<uint32_t> records;
    bool expected = false;
    std::string label;
};

using Step = std::variant<PrepCheckStep, GroupStep, PermuteStep, CnotStep, TransversalReadStep, SplitReadStep>;

struct DecodePlan {
    uint32_t num_blocks = 0;
    std::vector<std::string> slot_labels;
    std::vector<Step> steps;
    std::vector<Check> checks;
    std::vector<RecordInfo> records;

    int32_t add_slot(std::string label);
    /// Rewrites every record reference through `map` (old index -> new index).
    void remap_records(const std::vector<uint32_t> &map);
    /// Structural checks: record indices in range, each record classified once, and every flag that can
    /// be pending when a group consumes it crosses each representative of that group in one qubit.
    void validate(uint32_t num_records) const;
};

enum class Verdict : uint8_t { ACCEPTED, PRE_REJECTED, POST_REJECTED };
const char *verdict_name(Verdict v);

struct TraceEvent {
    std::string kind;
    int32_t block;
    std::string detail;
};

struct DecodeResult {
    Verdict verdict = Verdict::ACCEPTED;
    bool logical_error = false;
    std::vector<int8_t> slots;
    std::string reject_reason;
};

/// Per block Pauli frame and pending flags.
struct BlockFrame {
    Mask fx = 0;
    Mask fz = 0;
    /// Flag for a possible X-type pair (raised by X-basis measurements and Z-basis EC disagreement).
    std::optional<Flag> flag_x;
    std::optional<Flag> flag_z;
};

struct GroupOutcome {
    bool rejected;
    uint8_t value;
};

/// Processes one measurement group against a block's frame and flags:
///  - effective outcomes are the raw records corrected by the frame;
///  - a pending flag for the detected error type is consumed: a lone disagreeing representative gets its
///    crossing qubit corrected, a 2-2 split is corrected if the crossing qubits form the flagged pair (or its
///    complement) and rejected otherwise;
///  - without a pending flag a 2-2 split is rejected;
///  - EC groups raise a flag on a lone disagreeing representative when nothing was consumed, logical groups
///    raise a flag from a fired flag record, and reject on two flags or a flag while another one is pending;
///  - the majority value triggers the conditional correction.
GroupOutcome process_group(
    const GroupStep &g,
    const BitVec &record,
    BlockFrame &frame,
    std::vector<TraceEvent> *trace = nullptr,
    std::string *reject_reason = nullptr);

/// Runs the plan on one measurement record.
DecodeResult decode(const DecodePlan &plan, const BitVec &record, std::vector<TraceEvent> *trace = nullptr);

/// Decodes a destructive transversal read: effective bits, flag-aware correction, then the logical parities.
/// Returns std::nullopt on rejection. `flag` is the pending flag for errors of the type that flips these
/// bits.
std::optional<Mask> transversal_correction(Mask bits, const std::optional<Flag> &flag);

/// Builds a split-read side from the pair supports: readable checks, the single-flip syndrome table and the
/// pair-bit expansion of the requested outputs (each must be a union of pairs).
SplitSide make_split_side(Basis basis, std::vector<Mask> pair_supports, std::vector<uint32_t> records,
                          const std::vector<std::pair<int32_t, Mask>> &outputs);

}  // namespace tess

#endif
