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

#ifndef TESSERACT_AUTOMORPHISM_H
#define TESSERACT_AUTOMORPHISM_H

#include <optional>
#include <vector>

#include "tesseract/code.h"

namespace tess::code {

/// Generators of the permutation automorphism group: adjacent row and column swaps, the transpose, and
/// every shear q -> q ^ (bit j of q) << i of the qubit index bits that passes `is_automorphism`.
std::vector<Perm> automorphism_generators();

/// Breadth first closure of the generators, identity first. Computed once and cached.
const std::vector<Perm> &automorphism_group();

/// First group element (in closure order) whose logical action equals `target`.
std::optional<Perm> find_automorphism(const LogicalAction &target);

}  // namespace tess::code

#endif
