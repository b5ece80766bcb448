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

#include <algorithm>
#include <set>

#include "cssft/codes/classical_code.h"
#include "cssft/codes/gf2m.h"
#include "cssft/error.h"

namespace cssft {

ClassicalCode bch_code(int m, int designed_distance, size_t max_dim) {
    if (m < 3 || m > 8) {
        fail(ErrorCode::InvalidParameters, "BCH codes are supported for 3 <= m <= 8.");
    }
    if (designed_distance < 3 || designed_distance % 2 == 0) {
        fail(ErrorCode::InvalidParameters, "BCH designed distance must be odd and at least 3.");
    }
    GF2m field(m);
    uint32_t n = field.order();
    if ((uint32_t)designed_distance > n) {
        fail(ErrorCode::InvalidParameters, "Designed distance exceeds the code length.");
    }

    // One block of m rows per cyclotomic coset meeting 1..delta-1: row b is
    // bit b of alpha^(i*c) over positions c.
    std::set<uint32_t> seen;
    BinaryMatrix rows(0, n);
    for (uint32_t i = 1; i < (uint32_t)designed_distance; i++) {
        if (seen.count(i)) {
            continue;
        }
        for (uint32_t x : cyclotomic_coset(i, m)) {
            seen.insert(x);
        }
        for (int b = 0; b < m; b++) {
            BitVector row(n);
            for (uint32_t c = 0; c < n; c++) {
                if ((field.alpha_pow((uint64_t)i * c) >> b) & 1) {
                    row.set(c, true);
                }
            }
            rows.append_row(row);
        }
    }

    ClassicalCode code = code_from_check(rows, CodeFamily::Bch, {m, designed_distance});
    if (code.k == 0) {
        fail(ErrorCode::InvalidParameters, "Designed distance leaves no codewords.");
    }
    code.d = designed_distance;
    code.distance_kind = DistanceKind::Design;
    try_exact_distance(code, max_dim);

    size_t target = size_t{1} << (m - 1);
    code.w = (double)target;
    code.w_source = "2^(m-1) BCH check-row weight";

    RowWeightAudit audit;
    audit.target = target;
    audit.canonical_weights = rows.row_weights();
    double sum = 0;
    audit.canonical_rows_match = true;
    for (size_t w : audit.canonical_weights) {
        sum += (double)w;
        if (w != target) {
            audit.canonical_rows_match = false;
        }
    }
    audit.canonical_mean = sum / (double)audit.canonical_weights.size();
    if (audit.canonical_rows_match) {
        audit.equivalent_basis_found = true;
    } else {
        audit.equivalent_basis_found = find_constant_weight_basis(code.check, target, 1u << 16).found;
        code.notes.push_back(
            "Canonical check rows include weights other than " + std::to_string(target) +
            (audit.equivalent_basis_found ? "; an equivalent basis of weight-" + std::to_string(target) + " rows exists."
                                          : "; no equivalent constant-weight basis was found."));
    }
    code.row_weight_audit = audit;
    return code;
}

}  // namespace cssft
