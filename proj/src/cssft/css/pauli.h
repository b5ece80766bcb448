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

#ifndef _CSSFT_CSS_PAULI_H
#define _CSSFT_CSS_PAULI_H

#include <string>

#include "cssft/gf2/bit_vector.h"

namespace cssft {

/// i^phase * X^x_mask * Z^z_mask on n qubits (X factors written first).
struct PauliProduct {
    BitVector x_mask;
    BitVector z_mask;
    /// Exponent of i, kept in 0..3.
    int phase = 0;

    static PauliProduct identity(size_t n);
    static PauliProduct x_type(const BitVector &mask);
    static PauliProduct z_type(const BitVector &mask);

    size_t num_qubits() const {
        return x_mask.size();
    }
    bool is_identity() const;
    bool commutes(const PauliProduct &other) const;
    /// this * other. Moving Z^a past X^b gives (-1)^(a.b).
    PauliProduct operator*(const PauliProduct &other) const;
    bool operator==(const PauliProduct &other) const = default;

    /// Sparse text like "+X0*X4*Z2" or "+I".
    std::string str() const;
};

}  // namespace cssft

#endif
