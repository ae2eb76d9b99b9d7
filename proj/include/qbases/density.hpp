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

#include <Eigen/Dense>
#include <vector>

#include "qbases/state.hpp"

namespace qbases {

/// Hermitian, trace-one matrix describing a (sub)system.
///
/// The constructor enforces Hermiticity and unit trace entrywise within
/// 1e-12; positivity is guaranteed for matrices produced by partial_trace
/// and checked by the eigenvalue-based consumers.
class DensityMatrix {
  public:
    explicit DensityMatrix(Eigen::MatrixXcd m);

    int dim() const { return static_cast<int>(m_.rows()); }
    const Eigen::MatrixXcd &matrix() const { return m_; }
    Complex operator()(int r, int c) const { return m_(r, c); }

  private:
    Eigen::MatrixXcd m_;
};

/// Reduced density matrix on `keep`, kept qubits ordered ascending
/// (the lowest kept index becomes the most significant bit).
DensityMatrix partial_trace(const StateVector &state, const QubitSubset &keep);

/// Real eigenvalues in descending order.
std::vector<double> hermitian_eigenvalues(const DensityMatrix &rho);

/// S(rho) = -sum lambda log2 lambda, in bits. Eigenvalues below 1e-12 are
/// treated as exact zeros.
double von_neumann_entropy(const DensityMatrix &rho);

/// Shannon binary entropy h(x) with h(0) = h(1) = 0. Throws outside [0,1].
double binary_entropy(double x);

} // namespace qbases
