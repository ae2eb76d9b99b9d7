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

#include <cstdint>
#include <string>
#include <vector>

#include "qbases/state.hpp"

namespace qbases {

/// Identifier of a diagonal +-1 phase operation on an m-qubit control
/// register: P0 (none), P1 (Z on every control), Pp for 2 <= p <= m
/// (sums of cyclic p-bit products, see phase_term_masks), or Pz
/// (Z on qubits 2..m controlled by qubit 1).
struct PhaseId {
    enum class Kind { P, Z };
    Kind kind = Kind::P;
    int p = 0; // only for Kind::P

    static PhaseId pp(int p) { return {Kind::P, p}; }
    static PhaseId pz() { return {Kind::Z, 0}; }

    bool is_z() const { return kind == Kind::Z; }
    bool valid_for(int m) const;
    std::string str() const; // "P0".."Pm", "Pz"

    /// Parses "P0".."P9", "Pz" (case-insensitive). Throws on anything else.
    static PhaseId parse(const std::string &s);

    bool operator==(const PhaseId &o) const { return kind == o.kind && p == o.p; }
};

/// Index sets whose bit-products are summed (mod 2) in the exponent of -1.
///
/// For 2 <= p <= m these are the sliding cyclic windows x_k..x_{k+p-1} for
/// k = 1..m-p+2, i.e. consecutive windows up to the one that wraps around to
/// end at x_1, with duplicate sets removed. P2 yields the m cyclic pairs
/// (a single pair at m = 2); Pm yields the single all-index product.
/// Each mask packs qubit j of the control register into bit (m-j).
std::vector<std::uint32_t> phase_term_masks(const PhaseId &id, int m);

/// Exponent of (-1) for control assignment y (packed like the top m bits of
/// an amplitude index). Returns 0 or 1.
int phase_exponent(const PhaseId &id, int m, std::uint32_t y);

/// Applies the phase operation to the control register (qubits 1..m).
StateVector apply_phase(const StateVector &state, const PhaseId &id, int m);

} // namespace qbases
