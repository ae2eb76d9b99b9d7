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

#include "qbases/basis.hpp"
#include "qbases/measures.hpp"

namespace qbases {

enum class OutputFormat { Json, Csv, Markdown };

OutputFormat format_parse(const std::string &s);

/// Serializes a basis: spec, per-label symbolic term list
/// {index, sign, "1/sqrt(2^m)"} and the flat complex amplitude array.
/// basis_from_json() inverts it exactly (amplitudes round-trip bit-for-bit).
std::string basis_to_json(const EntangledBasis &basis);
EntangledBasis basis_from_json(const std::string &text);

/// label,term,sign,re,im rows.
std::string basis_to_csv(const EntangledBasis &basis);

/// The table layout used throughout: one row per label, unnormalized signed
/// term strings ("|000> + |010> - ..."); normalized=true prints amplitudes.
std::string basis_to_markdown(const EntangledBasis &basis, bool normalized = false);

/// 6-significant-digit float with trailing zeros trimmed.
std::string format_measure(double v);

std::string report_to_json(const CorrelationReport &r);
std::string reports_to_json(const std::vector<CorrelationReport> &rows);

/// n,m,phase,family,ggm,concurrence,avg_entropy,eof,log_negativity,
/// delta_c,delta_d,delta_deficit,warnings — one row per (spec,family);
/// inapplicable combinations carry "NA".
std::string reports_to_csv(const std::vector<CorrelationReport> &rows);

/// Wide table: one row per (n,m,phase) with family columns for GGM,
/// concurrence and average entropy plus the O1 monogamy columns.
std::string reports_to_markdown(const std::vector<CorrelationReport> &rows);

std::string equivalence_to_json(const EquivalenceReport &rep, int n);
std::string equivalence_to_csv(const EquivalenceReport &rep, int n);
std::string equivalence_to_markdown(const EquivalenceReport &rep, int n);

} // namespace qbases
