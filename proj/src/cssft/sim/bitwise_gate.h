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

#ifndef _CSSFT_SIM_BITWISE_GATE_H
#define _CSSFT_SIM_BITWISE_GATE_H

#include <string>

#include "cssft/sim/logical_state.h"

namespace cssft {

/// A transversal operation: the same single-, two- or three-qubit gate on
/// every corresponding set of physical qubits of the listed blocks.
struct BitwiseGate {
    enum class Kind {
        XMask,
        ZMask,
        HAll,
        /// e^{i angle} on each qubit of the mask that is 1 (P(angle) bitwise).
        Phase,
        /// Control block, target block.
        CX,
        CZ,
        /// Two control blocks and a cat register as the target.
        CCZ,
        /// Controlled-P(angle) on each corresponding pair.
        CPhase,
        /// Doubly-controlled-P(angle) on each corresponding triple.
        CCPhase,
    };

    Kind kind = Kind::XMask;
    size_t blocks[3] = {0, 0, 0};
    uint64_t mask = ~uint64_t{0};
    double angle = 0;

    static BitwiseGate x_mask(size_t block, uint64_t mask);
    static BitwiseGate z_mask(size_t block, uint64_t mask);
    static BitwiseGate h_all(size_t block);
    static BitwiseGate phase(size_t block, double angle, uint64_t mask = ~uint64_t{0});
    static BitwiseGate cx(size_t control, size_t target);
    static BitwiseGate cz(size_t a, size_t b);
    static BitwiseGate ccz(size_t a, size_t b, size_t cat);
    static BitwiseGate cphase(size_t a, size_t b, double angle);
    static BitwiseGate ccphase(size_t a, size_t b, size_t c, double angle);

    size_t arity() const;
    std::string str() const;
};

/// Exact action of the gate on the state, returned as a new state.
///
/// H_all is applied as a coset-duality transform: the state must be uniform
/// on each coset of the block's C0 (for each setting of the other blocks),
/// and the output is supported on C0^perp. Throws UnsupportedOnState when
/// that structure is missing.
LogicalState apply(const BitwiseGate &gate, const LogicalState &state, uint64_t budget = DEFAULT_TERM_BUDGET);
void apply_in_place(const BitwiseGate &gate, LogicalState &state, uint64_t budget = DEFAULT_TERM_BUDGET);

}  // namespace cssft

#endif
