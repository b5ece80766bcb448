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

#ifndef _CSSFT_GF2_ENUMERATE_H
#define _CSSFT_GF2_ENUMERATE_H

#include <cstdint>
#include <functional>
#include <vector>

#include "cssft/gf2/binary_matrix.h"

namespace cssft {

constexpr size_t DEFAULT_MAX_DIM = 28;
constexpr uint64_t DEFAULT_COSET_BUDGET = uint64_t{1} << 24;

/// Visits shift + span(basis rows) in Gray-code order. The callback receives
/// the current word and the index of the basis row flipped to reach it
/// (SIZE_MAX for the first word). The rows must be linearly independent for
/// each word to be visited exactly once.
void for_each_in_coset(
    const BinaryMatrix &basis, const BitVector &shift, const std::function<void(const BitVector &, size_t)> &visit);

/// Counts of each Hamming weight (index = weight) over the row space.
/// Throws DimensionTooLarge when rank(m) > max_dim.
std::vector<uint64_t> weight_distribution(const BinaryMatrix &m, size_t max_dim = DEFAULT_MAX_DIM);

/// Minimum nonzero weight of the row space, or 0 for the zero space.
/// Throws DimensionTooLarge when rank(m) > max_dim.
size_t min_nonzero_weight(const BinaryMatrix &m, size_t max_dim = DEFAULT_MAX_DIM);

struct CosetRepresentative {
    BitVector vector;
    /// True when the coset was exhausted, so the weight is minimal and ties
    /// were broken lexicographically.
    bool certified = false;
};

/// Lowest-weight word of shift + rowspace(space). Exhaustive when
/// 2^rank(space) <= budget, otherwise greedy descent from `shift`.
CosetRepresentative min_weight_coset_representative(
    const BinaryMatrix &space, const BitVector &shift, uint64_t budget = DEFAULT_COSET_BUDGET);

}  // namespace cssft

#endif
