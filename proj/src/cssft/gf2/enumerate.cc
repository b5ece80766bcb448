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

#include "cssft/gf2/enumerate.h"

#include <bit>
#include <climits>

#include "cssft/error.h"

namespace cssft {

namespace {

void require_dim(size_t dim, size_t max_dim) {
    if (dim > max_dim || dim >= 63) {
        fail(
            ErrorCode::DimensionTooLarge,
            "Row space dimension " + std::to_string(dim) + " exceeds the enumeration limit " +
                std::to_string(max_dim) + ".");
    }
}

// Specialization of the Gray walk that only tracks weights.
template <typename F>
void gray_walk_weights(const BinaryMatrix &basis, const BitVector &shift, F &&on_word) {
    size_t dim = basis.num_rows();
    size_t words = shift.num_words();
    std::vector<uint64_t> cur(shift.data(), shift.data() + words);
    auto weight_of = [&]() {
        size_t w = 0;
        for (uint64_t x : cur) {
            w += std::popcount(x);
        }
        return w;
    };
    on_word(cur, weight_of());
    uint64_t total = uint64_t{1} << dim;
    for (uint64_t g = 1; g < total; g++) {
        size_t j = std::countr_zero(g);
        const uint64_t *r = basis.row(j).data();
        for (size_t k = 0; k < words; k++) {
            cur[k] ^= r[k];
        }
        on_word(cur, weight_of());
    }
}

}  // namespace

void for_each_in_coset(
    const BinaryMatrix &basis, const BitVector &shift, const std::function<void(const BitVector &, size_t)> &visit) {
    size_t dim = basis.num_rows();
    if (dim >= 63) {
        fail(ErrorCode::DimensionTooLarge, "Cannot enumerate a space of dimension >= 63.");
    }
    BitVector cur = shift;
    visit(cur, SIZE_MAX);
    uint64_t total = uint64_t{1} << dim;
    for (uint64_t g = 1; g < total; g++) {
        size_t j = std::countr_zero(g);
        cur ^= basis.row(j);
        visit(cur, j);
    }
}

std::vector<uint64_t> weight_distribution(const BinaryMatrix &m, size_t max_dim) {
    RrefResult basis = row_basis(m);
    require_dim(basis.rank, max_dim);
    std::vector<uint64_t> counts(m.num_cols() + 1, 0);
    BitVector zero(m.num_cols());
    gray_walk_weights(basis.matrix, zero, [&](const std::vector<uint64_t> &, size_t w) {
        counts[w]++;
    });
    return counts;
}

size_t min_nonzero_weight(const BinaryMatrix &m, size_t max_dim) {
    std::vector<uint64_t> dist = weight_distribution(m, max_dim);
    for (size_t w = 1; w < dist.size(); w++) {
        if (dist[w]) {
            return w;
        }
    }
    return 0;
}

CosetRepresentative min_weight_coset_representative(const BinaryMatrix &space, const BitVector &shift, uint64_t budget) {
    if (shift.size() != space.num_cols() && !space.empty()) {
        fail(ErrorCode::InvalidArgument, "Shift length does not match the space.");
    }
    RrefResult basis = row_basis(space);
    bool exhaustive = basis.rank < 63 && (uint64_t{1} << basis.rank) <= budget;
    if (exhaustive) {
        BitVector best = shift;
        size_t best_weight = shift.weight();
        size_t words = shift.num_words();
        gray_walk_weights(basis.matrix, shift, [&](const std::vector<uint64_t> &cur, size_t w) {
            if (w > best_weight) {
                return;
            }
            BitVector candidate(shift.size());
            for (size_t k = 0; k < words; k++) {
                candidate.data()[k] = cur[k];
            }
            if (w < best_weight || candidate.lex_less(best)) {
                best = candidate;
                best_weight = w;
            }
        });
        return {best, true};
    }
    // Greedy descent: apply any single basis row that lowers the weight,
    // scanning rows in order, until no row helps.
    BitVector cur = shift;
    size_t cur_weight = cur.weight();
    bool improved = true;
    while (improved) {
        improved = false;
        for (size_t i = 0; i < basis.rank; i++) {
            BitVector next = cur ^ basis.matrix.row(i);
            size_t w = next.weight();
            if (w < cur_weight) {
                cur = std::move(next);
                cur_weight = w;
                improved = true;
            }
        }
    }
    return {cur, false};
}

}  // namespace cssft
