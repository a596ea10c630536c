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

#ifndef TESSERACT_TABLEAU_H
#define TESSERACT_TABLEAU_H

#include <cstdint>
#include <optional>
#include <vector>

#include "tesseract/bitvec.h"
#include "tesseract/circuit.h"
#include "tesseract/fault.h"
#include "tesseract/pauli.h"

namespace tess {

/// Stabilizer state in the Aaronson-Gottesman representation with destabilizers, stored column major
/// (one bit vector over the 2n rows per qubit) so Clifford gates are word parallel.
class TableauSimulator {
   public:
    explicit TableauSimulator(size_t num_qubits);

    size_t num_qubits() const {
        return n_;
    }

    void h(size_t q);
    void s(size_t q);
    void x(size_t q);
    void z(size_t q);
    void cnot(size_t c, size_t t);
    /// `pairs` holds (from, to) pairs; the state on `from` moves to `to`.
    void permute(const std::vector<uint32_t> &pairs);
    void apply_pauli(size_t q, uint8_t pauli);
    void apply_pauli(const PauliString &p);

    /// +1 or -1 if the observable is deterministic, 0 if a measurement would be random.
    int peek_expectation(const PauliString &p) const;
    /// Measures `p` and returns whether the -1 eigenvalue was observed. A random outcome is taken from
    /// `random_bit`; a deterministic one ignores it.
    bool measure_pauli(const PauliString &p, bool random_bit, bool *was_random = nullptr);
    bool measure_z(size_t q, bool random_bit, bool *was_random = nullptr);
    bool measure_x(size_t q, bool random_bit, bool *was_random = nullptr);
    void reset_z(size_t q);
    void reset_x(size_t q);

    PauliString stabilizer(size_t k) const;
    PauliString destabilizer(size_t k) const;
    std::vector<PauliString> stabilizers() const;

   private:
    BitVec anticommuting_rows(const PauliString &p) const;
    void row_mul(size_t target, size_t source);
    PauliString row(size_t r) const;
    void set_row(size_t r, const PauliString &p);

    size_t n_;
    std::vector<BitVec> xcol_;
    std::vector<BitVec> zcol_;
    BitVec signs_;
};

/// Reduced row echelon form of a list of commuting Pauli strings (signs tracked). Two lists generate the
/// same signed group iff their canonical forms are equal.
std::vector<PauliString> canonical_generators(std::vector<PauliString> gens);

/// Stabilizer group of the state left on the given qubits, i.e. the canonical generators of the elements
/// of the full stabilizer group supported inside `qubits`. The returned strings are indexed by position
/// in `qubits`.
std::vector<PauliString> stabilizer_group_of(const TableauSimulator &sim, const std::vector<uint32_t> &qubits);

struct SimulationResult {
    BitVec record;
    /// For each record, whether its outcome was random given the previous history.
    BitVec random;
    /// False if `forced` disagreed with a deterministic outcome.
    bool consistent = true;
};

/// Runs the circuit from |0...0>. Random outcomes are keyed by (seed, shot, record index) unless `forced`
/// is given, in which case random outcomes copy `forced` and deterministic ones are checked against it.
SimulationResult simulate(
    const Circuit &circuit,
    const std::vector<FaultEvent> &faults,
    uint64_t seed,
    uint64_t shot = 0,
    const BitVec *forced = nullptr,
    TableauSimulator *final_state = nullptr);

}  // namespace tess

#endif
