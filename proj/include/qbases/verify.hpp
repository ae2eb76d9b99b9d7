// Copyright 2026 The qbases Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "qbases/measures.hpp"

namespace qbases {

struct SuiteResult {
    std::string name;
    bool passed = false;
    std::string detail;   // first failure, or a short summary
    double seconds = 0.0;
};

struct VerifyOptions {
    int sweep_max_n = 5;       // basis sweep bound for the property suites
    int proposition_max_n = 5; // node-marginal sweep bound (raise to 6)
    bool skip_optimized = false;
    MeasureConfig cfg{};
};

/// The property suites behind `verify`: orthonormality, amplitude structure,
/// step commutation, phase identities, node-marginal sweep, GGM scaling,
/// Schmidt symmetry, special-case identities, braid equivalences, measure
/// invariance. Each runs independently and reports pass/fail + timing.
std::vector<SuiteResult> run_verification(const VerifyOptions &opts);

} // namespace qbases
