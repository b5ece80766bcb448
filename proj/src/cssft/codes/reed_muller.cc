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

#include "cssft/codes/classical_code.h"
#include "cssft/error.h"

namespace cssft {

ClassicalCode punctured_reed_muller(int r, int m, size_t max_dim) {
    if (m < 3 || m > 10 || r < 0 || r > m) {
        fail(ErrorCode::InvalidParameters, "Punctured RM(r, m) needs 0 <= r <= m and 3 <= m <= 10.");
    }
    size_t n = (size_t{1} << m) - 1;
    // Evaluation points are the nonzero vectors of GF(2)^m; the zero point is
    // the punctured coordinate. Position c holds point c + 1.
    BinaryMatrix gens(0, n);
    for (uint32_t mono = 0; mono < (uint32_t{1} << m); mono++) {
        if (__builtin_popcount(mono) > r) {
            continue;
        }
        BitVector row(n);
        for (size_t c = 0; c < n; c++) {
            uint32_t point = (uint32_t)c + 1;
            if ((point & mono) == mono) {
                row.set(c, true);
            }
        }
        gens.append_row(row);
    }
    ClassicalCode code = code_from_generator(gens, CodeFamily::PuncturedRM, {r, m});
    code.d = (size_t{1} << (m - r)) - 1;
    code.distance_kind = DistanceKind::Design;
    try_exact_distance(code, max_dim);
    double total = 0;
    for (size_t w : code.check.row_weights()) {
        total += (double)w;
    }
    code.w = code.check.empty() ? 0 : total / (double)code.check.num_rows();
    code.w_source = "measured mean check-row weight";
    return code;
}

}  // namespace cssft
