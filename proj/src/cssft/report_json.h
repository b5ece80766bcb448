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

#ifndef _CSSFT_REPORT_JSON_H
#define _CSSFT_REPORT_JSON_H

#include <json.hpp>

#include "cssft/codes/certify.h"
#include "cssft/codes/classical_code.h"
#include "cssft/css/css_code.h"
#include "cssft/gadgets/engine.h"
#include "cssft/overhead/table1.h"
#include "cssft/sim/lemmas.h"

namespace cssft {

using Json = nlohmann::ordered_json;

/// Report schema version written into every top-level report.
inline constexpr int REPORT_SCHEMA_VERSION = 1;

Json matrix_json(const BinaryMatrix &m);
Json complex_matrix_json(const ComplexMatrix &m);

Json to_json(const ClassicalCode &code);
Json to_json(const EligibilityCertificate &cert);
/// `with_matrices` adds H~, D~ and both stabilizer matrices.
Json to_json(const CssCode &code, bool with_matrices = false);
Json to_json(const BchConjectureReport &report);
/// Matrices are included when the logical dimension is at most 16.
Json to_json(const LogicalActionReport &report);
Json to_json(const LemmaReport &report);
Json to_json(const StabilizerCheck &check);
Json to_json(const Gadget &gadget);
/// Wall-clock time is left out so reports are reproducible.
Json to_json(const GadgetSimulation &sim);
/// Keys: code, n, k, d, w, plim, gamma_max, epsilon_max, scaleup, p1,
/// feasible, plus supplementary fields.
Json to_json(const TableRow &row);
Json to_json(const RowComparison &cmp);
Json to_json(const P1Comparison &cmp);
Json to_json(const OverheadReport &report);

/// Two-space indented dump with a trailing newline.
std::string dump_report(const Json &j);

}  // namespace cssft

#endif
