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

#include "cssft/css/pauli.h"

#include "cssft/error.h"

namespace cssft {

PauliProduct PauliProduct::identity(size_t n) {
    return {BitVector(n), BitVector(n), 0};
}

PauliProduct PauliProduct::x_type(const BitVector &mask) {
    return {mask, BitVector(mask.size()), 0};
}

PauliProduct PauliProduct::z_type(const BitVector &mask) {
    return {BitVector(mask.size()), mask, 0};
}

bool PauliProduct::is_identity() const {
    return phase == 0 && x_mask.is_zero() && z_mask.is_zero();
}

bool PauliProduct::commutes(const PauliProduct &other) const {
    return x_mask.dot(other.z_mask) == z_mask.dot(other.x_mask);
}

PauliProduct PauliProduct::operator*(const PauliProduct &other) const {
    if (other.num_qubits() != num_qubits()) {
        fail(ErrorCode::InvalidArgument, "Pauli products act on different qubit counts.");
    }
    PauliProduct out;
    out.x_mask = x_mask ^ other.x_mask;
    out.z_mask = z_mask ^ other.z_mask;
    out.phase = (phase + other.phase + 2 * (int)z_mask.dot(other.x_mask)) % 4;
    return out;
}

std::string PauliProduct::str() const {
    static const char *signs[] = {"+", "+i", "-", "-i"};
    std::string out = signs[phase & 3];
    bool any = false;
    for (size_t q = 0; q < num_qubits(); q++) {
        if (x_mask.get(q)) {
            out += (any ? "*X" : "X") + std::to_string(q);
            any = true;
        }
    }
    for (size_t q = 0; q < num_qubits(); q++) {
        if (z_mask.get(q)) {
            out += (any ? "*Z" : "Z") + std::to_string(q);
            any = true;
        }
    }
    if (!any) {
        out += "I";
    }
    return out;
}

}  // namespace cssft
