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

#ifndef TESSERACT_TARGETS_H
#define TESSERACT_TARGETS_H

#include <string>
#include <vector>

#include "tesseract/gadgets.h"

namespace tess {

/// A finalized program plus the regions in which faults are injected. Gadget targets wrap the gadget
/// between a fault-free preparation and a fault-free transversal readout whose checks catch any logical
/// damage; end-to-end targets let every instruction fail.
struct VerificationTarget {
    std::string name;
    Program program;
    std::vector<std::string> fault_regions;
};

const std::vector<std::string> &target_names();
/// Targets for which exhaustive order-2 enumeration is required.
const std::vector<std::string> &order2_target_names();
/// Throws std::invalid_argument for an unknown name.
VerificationTarget build_target(const std::string &name);

}  // namespace tess

#endif
