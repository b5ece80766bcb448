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

#ifndef _CSSFT_GADGETS_ENGINE_H
#define _CSSFT_GADGETS_ENGINE_H

#include <map>
#include <string>
#include <vector>

#include "cssft/gadgets/gadget.h"

namespace cssft {

/// One surviving branch at the end of a gadget, after merging branches whose
/// records and states agree.
struct GadgetLeaf {
    /// Bits still live at the end (the ideal selector, if any).
    std::map<std::string, int> bits;
    double probability = 0;
    /// Logical map from inputs to outputs, scaled to the ideal's Frobenius norm.
    ComplexMatrix action;
    /// Largest entry difference from the ideal after removing a global phase.
    double deviation = 0;
    /// Weight of the output outside the code space or on unused output
    /// positions (should be 0).
    double leakage = 0;
};

struct GadgetSimulation {
    /// Action of the most probable leaf against the ideal.
    LogicalActionReport action;
    std::vector<GadgetLeaf> leaves;
    double total_probability = 0;
    double max_deviation = 0;
    /// Raw measurement branches created before merging.
    size_t raw_branches = 0;
    size_t peak_branches = 0;
    size_t peak_terms = 0;
    size_t steps = 0;
    double seconds = 0;

    bool branch_independent(double tolerance = 1e-9) const;
    bool passed(double tolerance = 1e-9) const;
};

/// Runs the gadget on every branch. Each input port is entangled with a
/// noiseless reference register, so a single run yields the full logical map.
GadgetSimulation simulate_gadget(const Gadget &gadget, uint64_t budget = DEFAULT_TERM_BUDGET);

}  // namespace cssft

#endif
