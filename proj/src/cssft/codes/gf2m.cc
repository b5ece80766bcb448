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

#include "cssft/codes/gf2m.h"

#include <algorithm>

#include "cssft/error.h"

namespace cssft {

uint32_t GF2m::primitive_polynomial(int m) {
    switch (m) {
        case 3:
            return 0b1011;
        case 4:
            return 0b10011;
        case 5:
            return 0b100101;
        case 6:
            return 0b1000011;
        case 7:
            return 0b10001001;
        case 8:
            return 0b100011101;
        default:
            fail(ErrorCode::InvalidParameters, "GF(2^m) is supported for 3 <= m <= 8.");
    }
}

GF2m::GF2m(int m) : m_(m) {
    uint32_t poly = primitive_polynomial(m);
    uint32_t n = order();
    exp_.resize(n);
    log_.assign(n + 1, 0);
    uint32_t x = 1;
    for (uint32_t e = 0; e < n; e++) {
        exp_[e] = x;
        log_[x] = e;
        x <<= 1;
        if (x & (uint32_t{1} << m)) {
            x ^= poly;
        }
    }
}

uint32_t GF2m::mul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) {
        return 0;
    }
    return exp_[(log_[a] + log_[b]) % order()];
}

std::vector<uint32_t> cyclotomic_coset(uint32_t i, int m) {
    uint32_t n = (uint32_t{1} << m) - 1;
    std::vector<uint32_t> out;
    uint32_t x = i % n;
    while (std::find(out.begin(), out.end(), x) == out.end()) {
        out.push_back(x);
        x = (2 * x) % n;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace cssft
