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

#include "cssft/gadgets/ancilla.h"

#include <cmath>
#include <optional>

#include "cssft/error.h"

namespace cssft {

const char *ancilla_target_name(AncillaTarget target) {
    switch (target) {
        case AncillaTarget::ZeroL:
            return "zero_L";
        case AncillaTarget::PlusL:
            return "plus_L";
        case AncillaTarget::ZeroPlusU:
            return "zero_plus_u";
        case AncillaTarget::Cat:
            return "cat";
    }
    return "?";
}

AncillaSpec ancilla_cost(const CssCode &code) {
    return ancilla_spec(code, AncillaTarget::ZeroL);
}

AncillaSpec ancilla_spec(const CssCode &code, AncillaTarget target, uint64_t u) {
    AncillaSpec spec;
    spec.target = target;
    spec.u = u;
    size_t rows = code.c0_generator.num_rows();
    spec.prep_time_steps = rows;
    spec.prep_gate_count = rows * code.w;
    spec.verification_cx = code.w * (double)(code.n - code.k) / 2.0 + (double)((code.d + 1) * code.k);
    if (target == AncillaTarget::Cat) {
        spec.prep_time_steps = code.n;
        spec.prep_gate_count = code.n;
        spec.verification_cx = code.n - 1;
        for (size_t i = 0; i + 1 < code.n; i++) {
            BitVector v(code.n);
            v.set(i, true);
            v.set(i + 1, true);
            spec.verification.push_back(v);
        }
        return spec;
    }
    if (target == AncillaTarget::ZeroPlusU && code.k > 0 && u >= (uint64_t{1} << code.k)) {
        fail(ErrorCode::InvalidArgument, "Logical index exceeds 2^k.");
    }
    if (target == AncillaTarget::PlusL) {
        spec.verification = code.stabilizer_z.rows();
        return spec;
    }
    // Checks from C0^perp; for |0>_L + |u>_L only those orthogonal to uD.
    BinaryMatrix checks = null_space(code.c0_generator);
    BitVector ud(code.n);
    if (target == AncillaTarget::ZeroPlusU && code.k > 0) {
        ud = code.coset_leaders.left_mul(BitVector::from_uint64(u, code.k));
    }
    std::vector<BitVector> kept;
    std::optional<BitVector> odd;
    for (const auto &row : checks.rows()) {
        if (!row.dot(ud)) {
            kept.push_back(row);
        } else if (!odd) {
            odd = row;
        } else {
            kept.push_back(row ^ *odd);
        }
    }
    spec.verification = std::move(kept);
    return spec;
}

LogicalState prepare_ancilla(std::shared_ptr<const CssCode> code, const AncillaSpec &spec, const std::string &label) {
    switch (spec.target) {
        case AncillaTarget::ZeroL:
            return encode_basis(code, 0, label);
        case AncillaTarget::PlusL: {
            std::vector<std::pair<uint64_t, Amplitude>> all;
            for (uint64_t u = 0; u < (uint64_t{1} << code->k); u++) {
                all.push_back({u, 1.0});
            }
            return encode_superposition(code, all, label);
        }
        case AncillaTarget::ZeroPlusU:
            if (spec.u == 0) {
                return encode_basis(code, 0, label);
            }
            return encode_superposition(code, {{0, 1.0}, {spec.u, 1.0}}, label);
        case AncillaTarget::Cat:
            return encode_superposition(repetition_register(code->n), {{0, 1.0}, {1, 1.0}}, label);
    }
    fail(ErrorCode::Internal, "Unknown ancilla target.");
}

}  // namespace cssft
