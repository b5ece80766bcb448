// Copyright 2026 The cssft Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef _CSSFT_COMMANDS_H
#define _CSSFT_COMMANDS_H

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cssft/css/css_code.h"
#include "cssft/gadgets/gadget.h"
#include "cssft/overhead/table1.h"
#include "cssft/report_json.h"

namespace cssft {

/// Output of one batch command: a machine-readable report, a human summary
/// and, for tables, CSV.
struct CommandResult {
    Json report;
    std::string text;
    std::string csv;
    bool passed = true;
};

/// A registry name or a path to a classical code file (CSS with C0 = C^perp).
CssCode resolve_code(const std::string &spec, const CssOptions &options = {});

struct BuildRequest {
    /// "bch", "rm", "qr", "load" or "registry".
    std::string family;
    int m = 0;
    int delta = 0;
    int p = 0;
    std::string path;
    std::string name;
    /// Rows of H~ to delete after construction.
    int derive = 0;
    /// Directory for the matrix and certificate files; none written if empty.
    std::string out_dir;
    CssOptions options;
};

CssCode build_from_request(const BuildRequest &request);
CommandResult run_build(const BuildRequest &request);

struct VerifyRequest {
    std::vector<int> lemmas;
    std::optional<int> w;
    bool stabilizers = false;
};

/// Simulation-backed checks where feasible; when the simulation reports
/// DimensionTooLarge the lemma falls back to its certificate condition and
/// the report says so.
CommandResult run_verify(std::shared_ptr<const CssCode> code, const VerifyRequest &request);

struct GadgetRequest {
    std::string kind;
    std::vector<size_t> indices;
    GadgetOptions options;
    uint64_t budget = DEFAULT_TERM_BUDGET;
};

CommandResult run_simulate_gadget(std::shared_ptr<const CssCode> code, const GadgetRequest &request);

struct OverheadRequest {
    std::vector<TableCode> codes;
    TableOptions table;
    bool compare = false;
    double tolerance = SOLVED_COLUMN_TOLERANCE;
};

/// Infeasible rows are marked and do not fail the run; with `compare` the
/// run fails when a row leaves the published tolerances.
CommandResult run_overhead(const OverheadRequest &request);

CommandResult run_bch_conjecture(int m_min, int m_max, uint64_t samples);

}  // namespace cssft

#endif
