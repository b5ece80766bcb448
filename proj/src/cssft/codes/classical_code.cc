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

#include <random>

#include "cssft/codes/distance.h"
#include "cssft/error.h"

namespace cssft {

const char *family_name(CodeFamily f) {
    switch (f) {
        case CodeFamily::Bch:
            return "BCH";
        case CodeFamily::PuncturedRM:
            return "PuncturedRM";
        case CodeFamily::ExtendedQR:
            return "ExtendedQR";
        case CodeFamily::UserSupplied:
            return "UserSupplied";
    }
    return "?";
}

const char *distance_kind_name(DistanceKind k) {
    switch (k) {
        case DistanceKind::Exact:
            return "exact";
        case DistanceKind::Design:
            return "design";
        case DistanceKind::Tabulated:
            return "tabulated";
        case DistanceKind::Claimed:
            return "claimed";
        case DistanceKind::Bound:
            return "bound";
    }
    return "?";
}

std::string ClassicalCode::label() const {
    return "[" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(d) + "]";
}

ClassicalCode code_from_generator(const BinaryMatrix &generators, CodeFamily family, std::vector<int> params) {
    ClassicalCode c;
    RrefResult g = row_basis(generators);
    c.n = generators.num_cols();
    c.k = g.rank;
    c.generator = g.matrix;
    c.check = null_space(c.generator);
    c.check_rows = c.check;
    c.family = family;
    c.params = std::move(params);
    return c;
}

ClassicalCode code_from_check(const BinaryMatrix &checks, CodeFamily family, std::vector<int> params) {
    ClassicalCode c;
    RrefResult h = row_basis(checks);
    c.n = checks.num_cols();
    c.check = h.matrix;
    c.check_rows = checks;
    c.generator = row_basis(null_space(c.check)).matrix;
    c.k = c.generator.num_rows();
    c.family = family;
    c.params = std::move(params);
    return c;
}

void try_exact_distance(ClassicalCode &code, size_t max_dim) {
    auto d = exact_min_distance(code.generator, code.check, max_dim);
    if (d.has_value()) {
        code.d = *d;
        code.distance_kind = DistanceKind::Exact;
    }
}

ConstantWeightBasis find_constant_weight_basis(const BinaryMatrix &m, size_t weight, uint64_t max_samples) {
    ConstantWeightBasis out;
    RrefResult space = row_basis(m);
    size_t n = m.num_cols();
    out.basis = BinaryMatrix(0, n);
    // Start with the given rows that already have the right weight.
    std::vector<BitVector> chosen;
    RrefResult span;
    span.matrix = BinaryMatrix(0, n);
    auto try_add = [&](const BitVector &v) {
        if (v.weight() != weight) {
            return;
        }
        BitVector red = reduce(span, v);
        if (red.is_zero()) {
            return;
        }
        chosen.push_back(v);
        span = row_basis(BinaryMatrix(chosen, n));
    };
    for (const auto &r : m.rows()) {
        if (span.rank == space.rank) {
            break;
        }
        try_add(r);
    }
    std::mt19937_64 rng(0x5eed);
    while (span.rank < space.rank && out.samples < max_samples) {
        BitVector v(n);
        for (size_t i = 0; i < space.rank; i++) {
            if (rng() & 1) {
                v ^= space.matrix.row(i);
            }
        }
        out.samples++;
        try_add(v);
    }
    out.found = span.rank == space.rank;
    out.basis = BinaryMatrix(chosen, n);
    if (out.found && !same_row_space(out.basis, m)) {
        fail(ErrorCode::Internal, "Constant-weight basis does not span the space.");
    }
    return out;
}

}  // namespace cssft
