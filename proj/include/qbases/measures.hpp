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

#include <map>
#include <string>
#include <vector>

#include "qbases/basis.hpp"
#include "qbases/density.hpp"
#include "qbases/state.hpp"

namespace qbases {

/// Settings for the measurement search behind discord / work-deficit.
///
/// The default is a fixed angular grid stepping theta and phi by
/// `angle_step` radians from 0 (theta over [0,pi], phi over [0,2pi)) with no
/// refinement; the reference tables bundled with the test suite were
/// produced with exactly this 0.1-rad grid, so keep the default when
/// reproducing them. A uniform theta_steps x phi_steps grid and a
/// pattern-search refinement of the grid minimum are available for
/// convergence studies.
struct MeasureConfig {
    enum class Grid { Angular, Uniform };

    Grid grid = Grid::Angular;
    double angle_step = 0.1;
    int theta_steps = 64;  // Grid::Uniform only
    int phi_steps = 128;   // Grid::Uniform only
    bool refine = false;
    double refine_tol = 1e-6;
    int refine_max_iter = 200;
    int measured_party = 1;   // which side of a two-qubit state is measured
    int monogamy_node = 1;    // node qubit of the 1:rest scores
    bool squared_concurrence = false; // tangle variant of the concurrence score

    void validate() const; // throws on nonsensical settings

    std::map<std::string, std::string> conventions() const;
};

/// 2 sqrt(det rho_node) for a pure state; the node:rest concurrence.
double concurrence_pure_1_rest(const StateVector &state, int node = 1);

/// Wootters concurrence of a two-qubit density matrix:
/// max(0, l1-l2-l3-l4), li the descending square roots of the eigenvalues of
/// rho (Y(x)Y) rho* (Y(x)Y).
double wootters_concurrence(const DensityMatrix &rho);

/// h((1 + sqrt(1-c^2))/2)
double eof_from_concurrence(double c);

/// Negativity of the node:rest cut of a pure state (= C/2).
double negativity_pure(const StateVector &state, int node = 1);

/// log2(2N + 1) for the node:rest cut of a pure state.
double log_negativity_pure(const StateVector &state, int node = 1);

/// Negativity from the partial transpose over the node qubit (cross-check
/// route; agrees with negativity_pure on pure states).
double negativity_partial_transpose(const StateVector &state, int node = 1);

/// 1 - max over bipartitions A:rest (|A| <= floor(n/2), all subsets) of the
/// largest eigenvalue of rho_A.
double ggm(const StateVector &state);

/// Mean von Neumann entropy over all nonempty subsets of size <= floor(n/2).
/// (Complementary half-half cuts at even n are both counted; see README.)
double avg_entanglement_entropy(const StateVector &state);

/// Same average over distinct bipartitions with the 1/(2^(n-1)-1) prefactor.
double avg_entanglement_entropy_bipartitions(const StateVector &state);

struct OptimizedValue {
    double value = 0.0;
    bool converged = true; // false if refinement exhausted its budget
    double theta = 0.0;    // argmin
    double phi = 0.0;
};

/// Quantum discord of a two-qubit state:
/// S(rho_M) - S(rho) + min over rank-1 projective measurements on the
/// measured party M of sum_k p_k S(rho_unmeasured|k).
OptimizedValue quantum_discord(const DensityMatrix &rho, const MeasureConfig &cfg);

/// One-way work-deficit: min over rank-1 projective measurements on M of
/// S(sum_k Pi_k rho Pi_k) - S(rho).
OptimizedValue one_way_work_deficit(const DensityMatrix &rho, const MeasureConfig &cfg);

enum class MonogamyMeasure { Concurrence, Discord, Deficit };

/// delta_Q = Q(node:rest) - sum_j Q(rho_node,j). For concurrence the 1:rest
/// value is concurrence_pure_1_rest and the pairwise terms are Wootters
/// concurrences (unsquared unless cfg.squared_concurrence); for discord and
/// deficit the 1:rest value is S(rho_node) and the pairwise terms measure
/// the node side.
double monogamy_score(MonogamyMeasure measure, const StateVector &state,
                      const MeasureConfig &cfg = {});

/// Every measure of one basis, evaluated on the all-zeros label and checked
/// for invariance across sampled labels (1e-9 closed-form, 2e-3 optimized).
struct CorrelationReport {
    BasisSpec spec;
    double ggm = 0.0;
    double concurrence = 0.0;
    double avg_entropy = 0.0;
    double avg_entropy_bipartitions = 0.0;
    double eof = 0.0;
    double log_negativity = 0.0;
    double negativity = 0.0;
    double delta_concurrence = 0.0;
    double delta_concurrence_sq = 0.0;
    double delta_discord = 0.0;
    double delta_deficit = 0.0;
    std::vector<std::string> warnings;
    std::map<std::string, std::string> conventions;
};

/// Throws std::runtime_error if any measure varies across the sampled labels
/// beyond tolerance (that would mean a convention bug, not physics).
CorrelationReport basis_report(const BasisSpec &spec, const MeasureConfig &cfg = {});

} // namespace qbases
