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

#ifndef TESSERACT_VERIFIER_H
#define TESSERACT_VERIFIER_H

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "tesseract/decoder.h"
#include "tesseract/fault.h"
#include "tesseract/gadgets.h"
#include "tesseract/pauli.h"

namespace tess {

enum class FaultClass : uint8_t { ACCEPTED_CORRECT, PRE_REJECTED, POST_REJECTED, LOGICAL_ERROR };
const char *fault_class_name(FaultClass c);
FaultClass classify(const DecodeResult &r);

struct FaultExample {
    std::vector<FaultEvent> faults;
    FaultClass cls = FaultClass::ACCEPTED_CORRECT;
    std::string reason;
    std::vector<TraceEvent> trace;
};

/// Outcome counts of a fault enumeration. The flagged stratum holds the fault pairs in which one of the
/// two faults, on its own, fires a flag record: a flagged correlated error plus one more fault.
struct Tally {
    uint64_t locations = 0;
    uint64_t distinct_effects = 0;
    int order = 1;
    bool sampled = false;
    uint64_t total = 0;
    std::array<uint64_t, 4> counts{};
    uint64_t flagged_total = 0;
    std::array<uint64_t, 4> flagged_counts{};
    /// Up to `max_examples` logical errors, then postrejections, with decode traces.
    std::vector<FaultExample> examples;

    uint64_t count(FaultClass c) const {
        return counts[(size_t)c];
    }
    uint64_t flagged_count(FaultClass c) const {
        return flagged_counts[(size_t)c];
    }
    std::string to_json() const;
};

struct VerifyOptions {
    int order = 1;
    /// Regions whose instructions may fail; empty means every instruction.
    std::vector<std::string> regions;
    /// For order 2: number of uniformly sampled pairs, or 0 for exhaustive enumeration.
    uint64_t sample_pairs = 0;
    uint64_t seed = 1;
    uint64_t reference_seed = 0;
    /// Exhaustive order 2 refuses circuits with more fault locations than this.
    uint64_t max_locations = 4000;
    int threads = 0;
    size_t max_examples = 3;
};

class BudgetExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Injects every combination of `order` faults (or a sample of pairs) from the circuit-level alphabet,
/// propagates them to measurement flips and decodes the reference record with those flips applied.
Tally enumerate_faults(const Program &program, const VerifyOptions &options);

/// Result of a residual-error contract check over all single faults of a gadget.
struct ContractReport {
    std::string name;
    uint64_t faults = 0;
    uint64_t violations = 0;
    std::string first_violation;
    bool ok() const {
        return violations == 0;
    }
};

/// Every single fault in the preparation is either caught by the postselection or leaves X and Z residuals
/// of weight at most one, up to the stabilizers of the prepared state.
ContractReport check_prep_contract(PrepState state);
/// Single faults in one weight-4 measurement leave residuals of weight at most one up to the measured
/// operator, except for a fired flag with the hook pair (one-flag) or the pair fixed by the flags (two-flag).
/// The non fault tolerant flavor violates this.
ContractReport check_w4_contract(Basis basis, Flavor flavor);
/// Single faults in the joint gadget leave, per error type, weight at most one or the hook pair on the
/// support.
ContractReport check_joint_contract();

enum class PauliFilter : uint8_t { ANY, X_ONLY, Z_ONLY };

/// Smallest weight of a Pauli that commutes with every stabilizer and anticommutes with at least one of
/// `logicals`, searching weights up to `max_weight` (returns max_weight + 1 if none is found).
int check_distance(size_t num_qubits, const std::vector<PauliString> &stabilizers,
                   const std::vector<PauliString> &logicals, int max_weight, PauliFilter filter = PauliFilter::ANY);

/// The tesseract code's stabilizers (X then Z) and the twelve logical operators as Pauli strings, ordered
/// X_1, Z_1, X_2, Z_2, ...
std::vector<PauliString> tesseract_stabilizers();
std::vector<PauliString> tesseract_logicals();

}  // namespace tess

#endif
