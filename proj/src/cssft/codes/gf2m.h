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

#ifndef _CSSFT_CODES_GF2M_H
#define _CSSFT_CODES_GF2M_H

#include <cstdint>
#include <vector>

namespace cssft {

/// Arithmetic in GF(2^m), 3 <= m <= 8, via log/antilog tables over a fixed
/// primitive polynomial.
class GF2m {
   public:
    explicit GF2m(int m);

    /// The primitive polynomial used for degree m, bit i = coefficient of x^i.
    static uint32_t primitive_polynomial(int m);

    int m() const {
        return m_;
    }
    uint32_t order() const {
        return (uint32_t{1} << m_) - 1;
    }
    /// alpha^e, with the exponent taken mod 2^m - 1.
    uint32_t alpha_pow(uint64_t e) const {
        return exp_[e % order()];
    }
    uint32_t mul(uint32_t a, uint32_t b) const;

   private:
    int m_;
    std::vector<uint32_t> exp_;
    std::vector<uint32_t> log_;
};

/// Cyclotomic coset of i modulo 2^m - 1: {i, 2i, 4i, ...}.
std::vector<uint32_t> cyclotomic_coset(uint32_t i, int m);

}  // namespace cssft

#endif
