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

#ifndef _CSSFT_GADGETS_ANCILLA_H
#define _CSSFT_GADGETS_ANCILLA_H

#include <memory>
#include <string>
#include <vector>

#include "cssft/sim/logical_state.h"

namespace cssft {

enum class AncillaTarget {
    ZeroL,
    PlusL,
    /// |0>_L + |u>_L.
    ZeroPlusU,
    /// |0...0> + |1...1> on n qubits.
    Cat,
};

const char *ancilla_target_name(AncillaTarget target);

struct AncillaSpec {
    AncillaTarget target = AncillaTarget::ZeroL;
    /// Logical index u for ZeroPlusU (bit j = logical qubit j).
    uint64_t u = 0;
    /// Z-type parity checks the prepared state satisfies, used for verification.
    std::vector<BitVector> verification;
    /// One Hadamard plus (w - 1) CX per row of H~.
    double prep_gate_count = 0;
    /// Number of rows of H~.
    size_t prep_time_steps = 0;
    /// w (n - k) / 2 + (d + 1) k.
    double verification_cx = 0;
};

/// Cost summary for preparing and verifying |0>_L, using the code's recorded w.
AncillaSpec ancilla_cost(const CssCode &code);

/// Spec for a target state; the cost fields are those of |0>_L except for
/// the cat state, whose preparation is a CX chain.
AncillaSpec ancilla_spec(const CssCode &code, AncillaTarget target, uint64_t u = 0);

/// Ideal prepared state as a single-block LogicalState labelled `label`.
LogicalState prepare_ancilla(std::shared_ptr<const CssCode> code, const AncillaSpec &spec, const std::string &label);

}  // namespace cssft

#endif
