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

#ifndef _CSSFT_GADGETS_MERGED_MEASUREMENT_H
#define _CSSFT_GADGETS_MERGED_MEASUREMENT_H

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "cssft/sim/logical_state.h"

namespace cssft {

enum class LogicalOperator { X, Z };

const char *logical_operator_name(LogicalOperator op);

/// Support of X-bar_u: the word u D.
uint64_t logical_x_support(const CssCode &code, uint64_t u);
/// A word m in C0^perp with D m = u, so that Z^m acts as Z-bar_u on every
/// encoded state. Always exists because the rows of [H~; D~] are independent.
uint64_t logical_z_support(const CssCode &code, uint64_t u);

/// Lookup decoder for parity checks given as words: maps each syndrome to a
/// lowest-weight error (lexicographically first among equals).
class SyndromeDecoder {
   public:
    /// Enumerates errors up to `max_weight` (or until every syndrome is seen).
    SyndromeDecoder(std::vector<uint64_t> checks, size_t n, size_t max_weight);

    uint64_t syndrome(uint64_t error) const;
    /// nullopt when no tabulated error has this syndrome.
    std::optional<uint64_t> decode(uint64_t syndrome) const;
    const std::vector<uint64_t> &checks() const {
        return checks_;
    }

   private:
    std::vector<uint64_t> checks_;
    std::unordered_map<uint64_t, uint64_t> table_;
};

/// Decoder for errors up to weight floor((d - 1) / 2) seen through `checks`.
SyndromeDecoder code_decoder(const CssCode &code, const std::vector<uint64_t> &checks);

struct MergedMeasurementBranch {
    /// Eigenvalue (-1)^eigenbit of the measured logical operator.
    int eigenbit = 0;
    uint64_t syndrome = 0;
    /// Error the decoder inferred (Z-type for X-bar, X-type for Z-bar).
    uint64_t correction = 0;
    bool decoded = true;
    double probability = 0;
    /// Data after the ancilla is removed and the correction applied.
    LogicalState post_state;
};

/// Measures X-bar_u or Z-bar_u on block `block` of `state` merged with error
/// extraction: an ancilla |0>_L + |u'>_L (u' = u for X-bar, u (D D^T)^-1 for
/// Z-bar) acts on the block by bitwise CX (ancilla controls) or CZ, is
/// measured in the X basis, and the H~ checks of the outcome give the
/// syndrome. Branches with equal eigenbit and syndrome are merged.
std::vector<MergedMeasurementBranch> merged_measure_block(
    const LogicalState &state, size_t block, LogicalOperator op, uint64_t u, uint64_t budget = DEFAULT_TERM_BUDGET);

/// Single-block form: `data` holds one block of `code`.
std::vector<MergedMeasurementBranch> merged_measurement(
    std::shared_ptr<const CssCode> code, uint64_t u, LogicalOperator op, const LogicalState &data);

}  // namespace cssft

#endif
