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

#ifndef _CSSFT_CODES_DISTANCE_H
#define _CSSFT_CODES_DISTANCE_H

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cssft/gf2/binary_matrix.h"
#include "cssft/gf2/enumerate.h"

namespace cssft {

using BigCount = boost::multiprecision::cpp_int;

/// Weight distribution from the dual's distribution via the MacWilliams
/// identity: A_j = |C^perp|^-1 sum_i B_i K_j(i).
std::vector<BigCount> macwilliams_transform(const std::vector<BigCount> &dual_distribution, size_t n);

/// Exact weight distribution of rowspace(generator), enumerating either the
/// space itself or its dual (`check` spans the dual). nullopt when both
/// dimensions exceed max_dim.
std::optional<std::vector<BigCount>> exact_weight_distribution(
    const BinaryMatrix &generator, const BinaryMatrix &check, size_t max_dim = DEFAULT_MAX_DIM);

/// Minimum nonzero weight of rowspace(generator), when computable.
std::optional<size_t> exact_min_distance(
    const BinaryMatrix &generator, const BinaryMatrix &check, size_t max_dim = DEFAULT_MAX_DIM);

}  // namespace cssft

#endif
