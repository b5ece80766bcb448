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

#ifndef _CSSFT_SIM_LOGICAL_STATE_H
#define _CSSFT_SIM_LOGICAL_STATE_H

#include <array>
#include <complex>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cssft/css/css_code.h"

namespace cssft {

using Amplitude = std::complex<double>;

constexpr size_t MAX_BLOCKS = 8;
constexpr size_t MAX_BLOCK_QUBITS = 64;
constexpr uint64_t DEFAULT_TERM_BUDGET = uint64_t{1} << 20;

/// Basis word of a multi-block state: one machine word per block.
using Key = std::array<uint64_t, MAX_BLOCKS>;

struct Term {
    Key key{};
    Amplitude amp;
};

/// One register of a LogicalState.
struct BlockLayout {
    size_t n = 0;
    std::string label;
    /// Code whose encoded basis labels this register. Reference registers
    /// (noiseless bookkeeping qubits used to track inputs) have none.
    std::shared_ptr<const CssCode> code;
    /// Reduced basis of C0 as words, and the pivot bit of each row. Bitwise
    /// H needs the state to be uniform on cosets of this space.
    std::vector<uint64_t> invariant_rows;
    std::vector<int> invariant_pivots;

    bool is_reference() const {
        return code == nullptr;
    }
    /// Canonical representative of w + span(invariant_rows).
    uint64_t reduce(uint64_t w) const;
};

BlockLayout code_block(std::shared_ptr<const CssCode> code, const std::string &label);
/// Register of k noiseless qubits whose basis word is the logical index.
BlockLayout reference_block(size_t k, const std::string &label);

/// The n-qubit register spanned by |0...0> and |1...1>, as a pseudo-code with
/// C0 = {0} and a single coset leader 1...1.
std::shared_ptr<const CssCode> repetition_register(size_t n);

/// Multi-block state stored as a sparse list of basis words and amplitudes.
class LogicalState {
   public:
    LogicalState() = default;
    explicit LogicalState(std::vector<BlockLayout> blocks);

    const std::vector<BlockLayout> &blocks() const {
        return blocks_;
    }
    size_t num_blocks() const {
        return blocks_.size();
    }
    const std::vector<Term> &terms() const {
        return terms_;
    }
    std::vector<Term> &mutable_terms() {
        return terms_;
    }
    void add_term(const Key &key, Amplitude amp) {
        terms_.push_back({key, amp});
    }

    /// Sorts by key, merges equal keys and drops amplitudes below `drop`.
    void canonicalize(double drop = 1e-14);
    double norm_squared() const;
    void scale(Amplitude factor);
    void normalize();

    /// Blocks of this state followed by the blocks of `other`.
    LogicalState tensor(const LogicalState &other) const;
    /// Removes a block whose word is the same in every term.
    LogicalState without_block(size_t block) const;
    /// Reorders blocks: result block i is this state's block order[i].
    LogicalState permuted(const std::vector<size_t> &order) const;

    /// Largest amplitude difference after canonicalizing both states.
    double distance(const LogicalState &other) const;

   private:
    std::vector<BlockLayout> blocks_;
    std::vector<Term> terms_;
};

/// Normalized |u>_L for a single code block.
LogicalState encode_basis(
    std::shared_ptr<const CssCode> code, uint64_t u, const std::string &label = "",
    uint64_t budget = DEFAULT_TERM_BUDGET);
/// Normalized sum_j c_j |u_j>_L.
LogicalState encode_superposition(
    std::shared_ptr<const CssCode> code, const std::vector<std::pair<uint64_t, Amplitude>> &components,
    const std::string &label = "", uint64_t budget = DEFAULT_TERM_BUDGET);
/// Single reference register in basis word `index`.
LogicalState reference_state(size_t k, uint64_t index, const std::string &label);

enum class Basis { Z, X };

struct MeasurementBranch {
    /// Measured word (Z basis) or a representative of the outcome class (X basis).
    uint64_t outcome = 0;
    /// Number of raw outcome words sharing this branch's post-state.
    uint64_t multiplicity = 1;
    /// Total probability of all words in the branch.
    double probability = 0;
    /// Values of the requested functionals on every word of the branch.
    uint64_t functional_values = 0;
    /// Renormalized post-state; the measured block holds `outcome`.
    LogicalState post_state;
};

/// Enumerates every measurement branch of one block.
///
/// Z basis: one branch per word in the support. X basis: words y are grouped
/// by the values y.a for a in the span of the block's support and of
/// `functionals`; all words in a group give the same post-state up to the
/// outcome label, so one representative is returned per group with its
/// multiplicity. Functional values (bit i = y . functionals[i]) are reported
/// per branch; in the Z basis they are evaluated on the measured word.
std::vector<MeasurementBranch> measure_block(
    const LogicalState &state, size_t block, Basis basis, const std::vector<uint64_t> &functionals = {},
    bool normalize_post = true);

/// e^{i * eighths * pi / 4}, exact for the eight roots of unity.
Amplitude eighth_root(int64_t eighths);
/// e^{i * angle * count}, exact when angle is a multiple of pi/4.
Amplitude phase_power(double angle, uint64_t count);

}  // namespace cssft

#endif
