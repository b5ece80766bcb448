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

#ifndef _CSSFT_GADGETS_GADGET_H
#define _CSSFT_GADGETS_GADGET_H

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cssft/gadgets/ancilla.h"
#include "cssft/gadgets/merged_measurement.h"
#include "cssft/sim/bitwise_gate.h"
#include "cssft/sim/logical_action.h"

namespace cssft {

enum class GadgetKind { MergedMeasureRecover, IntraBlockCX, Teleport, Toffoli, SwitchOut, SwitchIn };

const char *gadget_kind_name(GadgetKind kind);
std::optional<GadgetKind> parse_gadget_kind(std::string_view name);

/// One operation of a classically conditioned correction.
struct CorrectionAction {
    enum class Kind { LogicalX, LogicalZ, Gate };
    Kind kind = Kind::LogicalX;
    /// One block for LogicalX/LogicalZ; the gate operands otherwise.
    std::vector<std::string> blocks;
    uint64_t u = 0;
    BitwiseGate::Kind gate = BitwiseGate::Kind::CX;

    std::string str() const;
};

/// Logical readout of a destructive measurement: the bit is the eigenvalue
/// of X-bar_u or Z-bar_u (matching the basis) after syndrome decoding.
struct Readout {
    uint64_t u = 0;
    std::string bit;
};

struct GadgetStep {
    enum class Kind { Prepare, Gate, Measure, MergedMeasure, Correct, Discard };
    Kind kind = Kind::Gate;
    std::vector<std::string> blocks;
    /// Prepare.
    AncillaSpec ancilla;
    /// Gate; operands in `blocks` (control first).
    BitwiseGate::Kind gate = BitwiseGate::Kind::CX;
    /// Measure: every qubit of the block, then the block is dropped.
    Basis basis = Basis::Z;
    std::vector<Readout> readouts;
    /// MergedMeasure: operator and u on `blocks[0]`, result in `bit`.
    LogicalOperator op = LogicalOperator::X;
    uint64_t u = 0;
    std::string bit;
    /// Correct: applied when the XOR of these bits is 1.
    std::vector<std::string> condition;
    std::vector<CorrectionAction> actions;

    std::string str() const;
};

/// Logical qubits of a block that carry gadget input or output. Positions not
/// listed are |0>_L on input and must be |0>_L on output.
struct GadgetPort {
    std::string block;
    std::vector<size_t> positions;
};

struct Gadget {
    GadgetKind kind = GadgetKind::Teleport;
    std::string variant;
    std::shared_ptr<const CssCode> code;
    std::vector<size_t> logical_indices;
    std::vector<GadgetStep> steps;
    std::vector<GadgetPort> inputs;
    std::vector<GadgetPort> outputs;
    /// Recovery count used by the overhead model.
    size_t recoveries = 0;
    size_t ancilla_blocks = 0;
    /// Cat repetitions for majority voting (accounting only; simulation uses one ideal cat).
    size_t cat_repetitions = 0;
    /// Ideal map from input qubits (ports in order, block positions ascending,
    /// first port in the lowest bits) to output qubits. When `ideal_bit` is
    /// set, ideal[b] is the map for branches where that bit equals b.
    std::vector<ComplexMatrix> ideal;
    std::string ideal_bit;

    std::string name() const;
    size_t merged_measurements() const;
};

struct GadgetOptions {
    /// Teleport: "bell" (default) or "one_bit".
    std::string variant;
    /// MergedMeasureRecover operator.
    LogicalOperator op = LogicalOperator::X;
};

/// logical_indices: IntraBlockCX {control, target} (default {1, 2}); SwitchOut
/// and SwitchIn {i} (default {0}); MergedMeasureRecover the positions of u
/// (default {0}). Toffoli acts on three k = 1 blocks and needs a doubly-even
/// C0 = C^perp with D D^T = I.
Gadget build_gadget(
    GadgetKind kind, std::shared_ptr<const CssCode> code, const std::vector<size_t> &logical_indices = {},
    const GadgetOptions &options = {});

/// True when every gate and correction couples only distinct blocks, so no
/// step spreads one physical error to two qubits of a block.
bool respects_block_discipline(const Gadget &gadget);

}  // namespace cssft

#endif
