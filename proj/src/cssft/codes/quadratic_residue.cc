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

#include <map>

#include "cssft/codes/classical_code.h"
#include "cssft/error.h"

namespace cssft {

namespace {

bool is_prime(int p) {
    if (p < 2) {
        return false;
    }
    for (int q = 2; q * q <= p; q++) {
        if (p % q == 0) {
            return false;
        }
    }
    return true;
}

// Known minimum distances of the extended QR codes of length p + 1.
const std::map<int, size_t> &tabulated_distances() {
    static const std::map<int, size_t> table = {
        {7, 4}, {17, 6}, {23, 8}, {31, 8}, {41, 10}, {47, 12}, {71, 12}, {73, 14}, {79, 16}, {89, 18}, {97, 16}, {103, 20},
    };
    return table;
}

}  // namespace

ClassicalCode extended_qr_code(int p, size_t max_dim) {
    if (!is_prime(p) || (p % 8 != 1 && p % 8 != 7) || p + 1 > 104) {
        fail(ErrorCode::InvalidParameters, "Extended QR codes need a prime p = +-1 mod 8 with p + 1 <= 104.");
    }
    std::vector<bool> residue(p, false);
    for (int x = 1; x < p; x++) {
        residue[(x * x) % p] = true;
    }
    // The QR code is generated by the cyclic shifts of one of the idempotents
    // built from the residue and non-residue indicators. Pick the first one
    // whose span has dimension (p + 1) / 2.
    auto indicator = [&](bool want_residue, bool plus_one) {
        BitVector v(p);
        for (int x = 1; x < p; x++) {
            if (residue[x] == want_residue) {
                v.set(x, true);
            }
        }
        if (plus_one) {
            v.set(0, true);
        }
        return v;
    };
    auto circulant = [&](const BitVector &v) {
        BinaryMatrix m(0, p);
        for (int s = 0; s < p; s++) {
            BitVector row(p);
            for (int x = 0; x < p; x++) {
                if (v.get(x)) {
                    row.set((x + s) % p, true);
                }
            }
            m.append_row(row);
        }
        return m;
    };
    size_t want = (size_t)(p + 1) / 2;
    BinaryMatrix cyclic;
    bool found = false;
    for (int choice = 0; choice < 4 && !found; choice++) {
        BinaryMatrix c = circulant(indicator(choice % 2 == 0, choice >= 2));
        if (rank(c) == want) {
            cyclic = row_basis(c).matrix;
            found = true;
        }
    }
    if (!found) {
        fail(ErrorCode::Internal, "No idempotent generated the QR code.");
    }
    BinaryMatrix extended(0, p + 1);
    for (const auto &r : cyclic.rows()) {
        BitVector row(p + 1);
        for (int x = 0; x < p; x++) {
            row.set(x, r.get(x));
        }
        row.set(p, r.weight() & 1);
        extended.append_row(row);
    }
    ClassicalCode code = code_from_generator(extended, CodeFamily::ExtendedQR, {p});
    code.d = tabulated_distances().at(p);
    code.distance_kind = DistanceKind::Tabulated;
    try_exact_distance(code, max_dim);
    bool self_dual = code.k * 2 == code.n && is_self_orthogonal(code.generator);
    if (!self_dual) {
        code.notes.push_back("Extended QR code is not self-dual for p = 1 mod 8.");
    }
    code.w = (double)code.d;
    code.w_source = "minimum distance of the extended QR code";
    return code;
}

}  // namespace cssft
