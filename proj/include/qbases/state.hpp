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

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace qbases {

using Complex = std::complex<double>;

/// Pure state of n qubits as 2^n complex amplitudes.
///
/// Amplitude index i encodes the computational bitstring x1 x2 ... xn with
/// qubit 1 as the most significant bit: bit of qubit q is (i >> (n-q)) & 1.
/// Every library entry point shares this convention.
class StateVector {
  public:
    explicit StateVector(int n_qubits);

    /// |x1 x2 ... xn> for the given amplitude index.
    static StateVector computational(int n_qubits, std::uint64_t index);
    /// Builds a state from raw amplitudes; throws unless the norm is 1
    /// within 1e-12 and the length is a power of two.
    static StateVector from_amplitudes(int n_qubits, std::vector<Complex> amplitudes);

    int n_qubits() const { return n_; }
    std::uint64_t dim() const { return std::uint64_t{1} << n_; }

    Complex &operator[](std::uint64_t i) { return amp_[i]; }
    const Complex &operator[](std::uint64_t i) const { return amp_[i]; }

    const std::vector<Complex> &amplitudes() const { return amp_; }
    std::vector<Complex> &amplitudes() { return amp_; }

    double norm() const;

  private:
    int n_;
    std::vector<Complex> amp_;
};

/// <a|b>, conjugate-linear in the first argument. Throws on dimension mismatch.
Complex inner_product(const StateVector &a, const StateVector &b);

/// max_i |a_i - b_i|
double max_abs_diff(const StateVector &a, const StateVector &b);

/// Nonempty set of distinct qubit indices (1-based). Range against a
/// particular n is checked where the subset is used.
class QubitSubset {
  public:
    QubitSubset(std::initializer_list<int> qubits);
    explicit QubitSubset(std::vector<int> qubits);

    /// {1, 2, ..., k}
    static QubitSubset first(int k);

    const std::vector<int> &qubits() const { return qubits_; }
    std::size_t size() const { return qubits_.size(); }
    bool contains(int q) const;

    /// Bitmask over amplitude indices for an n-qubit register.
    /// Throws if any index is outside 1..n.
    std::uint64_t index_mask(int n) const;

    /// Qubits of 1..n not in this subset.
    QubitSubset complement(int n) const;

  private:
    std::vector<int> qubits_; // sorted ascending, unique
};

/// Bit of qubit q (1-based, MSB-first) inside amplitude index i.
inline int qubit_bit(std::uint64_t i, int n, int q) {
    return static_cast<int>((i >> (n - q)) & 1u);
}

std::string label_to_string(int n, std::uint64_t label);
std::uint64_t label_from_string(const std::string &bits);

} // namespace qbases
