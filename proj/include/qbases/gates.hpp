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

#include <array>
#include <vector>

#include "qbases/state.hpp"

namespace qbases {

/// 2x2 unitary.
struct SingleQubitGate {
    std::array<std::array<Complex, 2>, 2> m;

    static SingleQubitGate identity();
    static SingleQubitGate pauli_x();
    static SingleQubitGate pauli_y();
    static SingleQubitGate pauli_z();
    static SingleQubitGate hadamard();

    bool is_unitary(double tol = 1e-12) const;
};

/// Dense k-qubit unitary (dim = 2^k), row-major. The first qubit it acts on
/// is the most significant bit of the subspace index.
class GateMatrix {
  public:
    GateMatrix(int dim, std::vector<Complex> entries);

    static GateMatrix from_single(const SingleQubitGate &g);
    /// X^(x)k on k qubits.
    static GateMatrix pauli_x_tensor(int k);

    int dim() const { return dim_; }
    Complex at(int r, int c) const { return a_[static_cast<std::size_t>(r) * dim_ + c]; }
    bool is_unitary(double tol = 1e-12) const;

  private:
    int dim_;
    std::vector<Complex> a_;
};

/// One target block of an odd-parity controlled operation: `u` acts on
/// `qubits` (dim(u) = 2^|qubits|).
struct TargetBlock {
    std::vector<int> qubits;
    GateMatrix u;
};

// Gate application. All functions are pure: they return the transformed
// state and never touch the input. Kernels run over disjoint amplitude
// blocks and may be parallelized internally; results are deterministic.

StateVector apply_single(const StateVector &state, const SingleQubitGate &gate, int target);

StateVector apply_cnot(const StateVector &state, int control, int target);

/// Controlled-U firing when every control bit is 1 (the standard C^n(U)).
StateVector apply_all1_controlled(const StateVector &state, const QubitSubset &controls,
                                  const std::vector<int> &targets, const GateMatrix &u);

/// Controlled-U firing when the XOR of the control bits is 1; each block
/// unitary acts on its own disjoint set of target qubits.
StateVector apply_odd1_controlled(const StateVector &state, const QubitSubset &controls,
                                  const std::vector<TargetBlock> &blocks);

/// Controlled-U firing when all control bits agree (all 0 or all 1).
/// Requires at least two controls.
StateVector apply_allequal_controlled(const StateVector &state, const QubitSubset &controls,
                                      const std::vector<int> &targets, const GateMatrix &u);

/// Negates the amplitude of every index whose listed bits are all 1
/// (diag{I,...,I,Z} on the listed qubits).
StateVector apply_multi_phase_z(const StateVector &state, const QubitSubset &qubits);

/// The fixed 4x4 braid unitary
///   R = (1/sqrt(2)) [[1,0,0,1],[0,1,-1,0],[0,1,1,0],[-1,0,0,1]],
/// applied to the adjacent pair (pair_start, pair_start+1).
StateVector apply_braid_r(const StateVector &state, int pair_start);

/// Entries of R as a GateMatrix.
GateMatrix braid_r_matrix();

} // namespace qbases
