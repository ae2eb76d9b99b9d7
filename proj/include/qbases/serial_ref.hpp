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

#include "qbases/gates.hpp"
#include "qbases/phase.hpp"

// Serial reference implementations of every gate kernel. These are written
// as plain per-amplitude loops with no index-block tricks and no OpenMP, and
// are kept solely to cross-check the parallel kernels (tests) and to measure
// them against (bench). Do not use them in library code paths.

namespace qbases::serial {

StateVector apply_single(const StateVector &state, const SingleQubitGate &gate, int target);
StateVector apply_cnot(const StateVector &state, int control, int target);
StateVector apply_all1_controlled(const StateVector &state, const QubitSubset &controls,
                                  const std::vector<int> &targets, const GateMatrix &u);
StateVector apply_odd1_controlled(const StateVector &state, const QubitSubset &controls,
                                  const std::vector<TargetBlock> &blocks);
StateVector apply_allequal_controlled(const StateVector &state, const QubitSubset &controls,
                                      const std::vector<int> &targets, const GateMatrix &u);
StateVector apply_multi_phase_z(const StateVector &state, const QubitSubset &qubits);
StateVector apply_braid_r(const StateVector &state, int pair_start);
StateVector apply_phase(const StateVector &state, const PhaseId &id, int m);

} // namespace qbases::serial
