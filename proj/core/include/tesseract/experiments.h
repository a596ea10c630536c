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

#ifndef TESSERACT_EXPERIMENTS_H
#define TESSERACT_EXPERIMENTS_H

#include <optional>
#include <string>
#include <vector>

#include "tesseract/gadgets.h"

namespace tess {

struct PlanOptions {
    /// Rounds of the repeated error correction and teleport plans.
    int rounds = 5;
    /// Flavor of the weight-4 measurements in logical measurement groups.
    Flavor flavor = Flavor::ONE_FLAG;
};

/// A finalized experiment: circuit, decode plan and success checks for one measurement setting.
struct ExperimentPlan {
    std::string name;
    /// Measurement basis of the final readout, or nullopt for single-setting plans.
    std::optional<Basis> basis;
    bool encoded = false;
    Program program;

    std::string basis_str() const {
        return basis.has_value() ? std::string(1, basis_char(*basis)) : std::string("-");
    }
};

const std::vector<std::string> &plan_names();
/// The measurement settings a plan supports: {X, Z} or {nullopt}.
std::vector<std::optional<Basis>> plan_settings(const std::string &name);
/// Throws std::invalid_argument for an unknown name or an unsupported basis.
ExperimentPlan build_plan(const std::string &name, std::optional<Basis> basis, const PlanOptions &options = {});

}  // namespace tess

#endif
