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

#include "qbases/state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qbases {

StateVector::StateVector(int n_qubits) : n_(n_qubits) {
    if (n_qubits < 1 || n_qubits > 30)
        throw std::invalid_argument("StateVector: n_qubits must be in 1..30");
    amp_.assign(std::uint64_t{1} << n_, Complex{0.0, 0.0});
    amp_[0] = 1.0;
}

StateVector StateVector::computational(int n_qubits, std::uint64_t index) {
    StateVector s(n_qubits);
    if (index >= s.dim())
        throw std::invalid_argument("StateVector: computational index out of range");
    s.amp_[0] = 0.0;
    s.amp_[index] = 1.0;
    return s;
}

StateVector StateVector::from_amplitudes(int n_qubits, std::vector<Complex> amplitudes) {
    StateVector s(n_qubits);
    if (amplitudes.size() != s.dim())
        throw std::invalid_argument("StateVector: amplitude count != 2^n");
    s.amp_ = std::move(amplitudes);
    if (std::abs(s.norm() - 1.0) > 1e-12)
        throw std::invalid_argument("StateVector: norm differs from 1 beyond 1e-12");
    return s;
}

double StateVector::norm() const {
    double s = 0.0;
    for (const auto &a : amp_) s += std::norm(a);
    return std::sqrt(s);
}

Complex inner_product(const StateVector &a, const StateVector &b) {
    if (a.n_qubits() != b.n_qubits())
        throw std::invalid_argument("inner_product: dimension mismatch");
    Complex acc{0.0, 0.0};
    for (std::uint64_t i = 0; i < a.dim(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

double max_abs_diff(const StateVector &a, const StateVector &b) {
    if (a.n_qubits() != b.n_qubits())
        throw std::invalid_argument("max_abs_diff: dimension mismatch");
    double d = 0.0;
    for (std::uint64_t i = 0; i < a.dim(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

QubitSubset::QubitSubset(std::initializer_list<int> qubits)
    : QubitSubset(std::vector<int>(qubits)) {}

QubitSubset::QubitSubset(std::vector<int> qubits) : qubits_(std::move(qubits)) {
    if (qubits_.empty()) throw std::invalid_argument("QubitSubset: empty");
    std::sort(qubits_.begin(), qubits_.end());
    if (std::adjacent_find(qubits_.begin(), qubits_.end()) != qubits_.end())
        throw std::invalid_argument("QubitSubset: duplicate qubit index");
    if (qubits_.front() < 1) throw std::invalid_argument("QubitSubset: indices are 1-based");
}

QubitSubset QubitSubset::first(int k) {
    std::vector<int> v(k);
    for (int i = 0; i < k; ++i) v[i] = i + 1;
    return QubitSubset(std::move(v));
}

bool QubitSubset::contains(int q) const {
    return std::binary_search(qubits_.begin(), qubits_.end(), q);
}

std::uint64_t QubitSubset::index_mask(int n) const {
    std::uint64_t mask = 0;
    for (int q : qubits_) {
        if (q > n) throw std::invalid_argument("QubitSubset: index exceeds register size");
        mask |= std::uint64_t{1} << (n - q);
    }
    return mask;
}

QubitSubset QubitSubset::complement(int n) const {
    std::vector<int> rest;
    for (int q = 1; q <= n; ++q)
        if (!contains(q)) rest.push_back(q);
    return QubitSubset(std::move(rest));
}

std::string label_to_string(int n, std::uint64_t label) {
    std::string s(n, '0');
    for (int q = 1; q <= n; ++q)
        if (qubit_bit(label, n, q)) s[q - 1] = '1';
    return s;
}

std::uint64_t label_from_string(const std::string &bits) {
    std::uint64_t v = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') throw std::invalid_argument("label: expected binary string");
        v = (v << 1) | static_cast<std::uint64_t>(c - '0');
    }
    return v;
}

} // namespace qbases
