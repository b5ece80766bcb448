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

#ifndef _CSSFT_SIM_LOGICAL_ACTION_H
#define _CSSFT_SIM_LOGICAL_ACTION_H

#include <memory>
#include <vector>

#include "cssft/sim/bitwise_gate.h"
#include "cssft/sim/logical_state.h"

namespace cssft {

/// Dense complex matrix indexed [row][column].
using ComplexMatrix = std::vector<std::vector<Amplitude>>;

ComplexMatrix identity_matrix(size_t dim);
double max_abs_difference(const ComplexMatrix &a, const ComplexMatrix &b);
/// max |(M^dagger M - I)_{ij}|.
double unitarity_deviation(const ComplexMatrix &m);

/// Amplitudes of a state on the encoded basis.
///
/// The logical index is the concatenation of per-block indices, block 0 in
/// the lowest bits; a code block contributes k bits and a reference register
/// n bits. Each code block is projected onto normalized |u>_L.
struct LogicalProjection {
    std::vector<Amplitude> amplitudes;
    /// Squared norm of the projection.
    double captured = 0;
    /// Squared norm of the state.
    double total = 0;
    /// Number of logical qubits per block.
    std::vector<size_t> widths;
};

LogicalProjection project_logical(const LogicalState &state, uint64_t max_dim = uint64_t{1} << 20);

struct LogicalActionReport {
    ComplexMatrix derived;
    ComplexMatrix predicted;
    bool has_prediction = false;
    double max_deviation = 0;
    /// Every encoded input stays inside the code space within 1e-9.
    bool legitimate = false;
    double unitarity_deviation = 0;
    /// Largest |norm^2 - 1| seen after any single gate.
    double max_norm_deviation = 0;
    size_t logical_qubits = 0;
    size_t gate_applications = 0;

    bool passed(double tolerance = 1e-9) const;
};

/// Applies `gates` to every product of encoded basis states of `codes` and
/// reads off the induced logical matrix. Requires total logical dimension
/// at most 2^8.
LogicalActionReport derive_logical_action(
    const std::vector<std::shared_ptr<const CssCode>> &codes, const std::vector<BitwiseGate> &gates,
    const ComplexMatrix *predicted = nullptr, uint64_t budget = DEFAULT_TERM_BUDGET);

}  // namespace cssft

#endif
