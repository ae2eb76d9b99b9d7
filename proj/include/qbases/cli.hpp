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

#include <optional>
#include <string>

#include "qbases/io.hpp"
#include "qbases/measures.hpp"
#include "qbases/verify.hpp"

namespace qbases::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
    // basis selection
    int n = 0;
    int m = 0;
    std::string family; // "A1" | "O1" | "AQ"
    std::string phase;  // "P0".."Pm" | "Pz"
    // sweeps
    int sweep_min_n = 0; // measure: emit the full table row family when set
    int sweep_max_n = 0;
    bool all_phases = false; // include P1 (and Pz at m=2) in sweeps
    // output
    OutputFormat format = OutputFormat::Json;
    std::string out_path; // empty = stdout
    bool normalized = false;
    // optimizer overrides
    MeasureConfig measure{};
    // verify
    VerifyOptions verify{};
    // accepted and reserved; every code path is already deterministic
    std::uint64_t seed = 0;
};

struct CmdResult {
    int exit_code = kExitOk;
    std::string output;      // payload (written to out_path or stdout)
    std::string diagnostics; // human chatter for stderr
};

CmdResult cmd_generate(const RunConfig &cfg);
CmdResult cmd_measure(const RunConfig &cfg);
CmdResult cmd_compare_braid(const RunConfig &cfg);
CmdResult cmd_verify(const RunConfig &cfg);

/// The spec rows of the bundled reference table: for each n in
/// [min_n, max_n], m = 1..n-1 with phases {P0} for m = 1 and
/// {P0, P2..Pm, Pz (m >= 3)} otherwise; all_phases adds P1 and the m = 2 Pz.
std::vector<BasisSpec> measure_sweep_specs(int min_n, int max_n, ControlledFamily family,
                                           bool all_phases);

} // namespace qbases::cli
