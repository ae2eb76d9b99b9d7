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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qbases/gates.hpp"
#include "qbases/phase.hpp"
#include "qbases/state.hpp"

namespace qbases {

/// The three controlled-unitary trigger rules.
enum class ControlledFamily {
    A1, ///< fire when every control bit is 1
    O1, ///< fire when the XOR of the control bits is 1
    AQ, ///< fire when all control bits agree (needs >= 2 controls; see README)
};

std::string family_str(ControlledFamily f);
ControlledFamily family_parse(const std::string &s);

/// Names one entangled basis: n qubits, m controls, trigger family, phase.
struct BasisSpec {
    int n = 0;
    int m = 0;
    ControlledFamily family = ControlledFamily::A1;
    PhaseId phase = PhaseId::pp(0);

    /// Throws std::invalid_argument unless 1 <= m < n, the phase parameter
    /// is <= m, and family AQ has m >= 2.
    void validate() const;

    std::string str() const; // "(n,m,CA1,P0)"
    bool operator==(const BasisSpec &o) const = default;
};

/// The three-step construction applied to |label>:
///  (I)   H on qubits 1..m,
///  (II)  the family's controlled X^((n-m)) with controls 1..m,
///        targets m+1..n,
///  (III) the phase operation on the control register.
/// Steps (II) and (III) commute; generate_basis spot-checks that.
///
/// `controls` overrides the control positions (default 1..m); golden tables
/// and the CLI always use the first m qubits.
StateVector generate_state(const BasisSpec &spec, std::uint64_t label);
StateVector generate_state(const BasisSpec &spec, std::uint64_t label,
                           const QubitSubset &controls);

/// All 2^n labeled states of a basis.
struct EntangledBasis {
    BasisSpec spec;
    std::vector<StateVector> states; // index == label

    const StateVector &state(std::uint64_t label) const { return states[label]; }
};

/// Generates every label (parallel over labels), verifies pairwise
/// orthonormality within 1e-12 and the step-(II)/(III) commutation on
/// sampled labels, and throws std::runtime_error if either fails.
EntangledBasis generate_basis(const BasisSpec &spec);

/// (|0 x2..xn> + (-1)^x1 |1 ~x2..~xn>)/sqrt(2); equals the (n,1,CA1,P0)
/// construction.
StateVector bell_basis_state(int n, std::uint64_t label);

/// C(Z^(n-1)) H^(n) |label>: 2^n-term graph state.
StateVector graph_basis_state(int n, std::uint64_t label);

/// R cascaded over adjacent pairs, rightmost (n-1,n) first down to (1,2).
StateVector braid_basis_state(int n, std::uint64_t label);
std::vector<StateVector> braid_basis(int n);

struct OrthonormalityReport {
    bool ok = false;
    double max_deviation = 0.0; // max |<i|j> - delta_ij|
};

OrthonormalityReport check_orthonormal(std::span<const StateVector> states, double tol = 1e-12);

/// One matched pair of equivalence_up_to_sign_and_relabeling.
struct LabelMatch {
    std::uint64_t label_a = 0;
    std::uint64_t label_b = 0;
    int sign = +1; // a == sign * b
};

struct EquivalenceReport {
    bool matched = false;
    std::vector<LabelMatch> mapping;            // one entry per A label when matched
    std::optional<std::uint64_t> first_unmatched; // A label with no +-1 partner
};

/// True iff a bijection pairs every state of A with a state of B equal up to
/// a factor +-1, amplitude-wise within tol. A mismatch is a valid result.
EquivalenceReport equivalence_up_to_sign_and_relabeling(std::span<const StateVector> a,
                                                        std::span<const StateVector> b,
                                                        double tol = 1e-10);

} // namespace qbases
