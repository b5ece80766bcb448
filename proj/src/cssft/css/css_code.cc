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

#include "cssft/css/css_code.h"

#include <cstdio>

#include "cssft/codes/distance.h"
#include "cssft/error.h"
#include "cssft/gf2/enumerate.h"

namespace cssft {

namespace {

BinaryMatrix basis_or_empty(const BinaryMatrix &m, size_t n) {
    if (m.empty()) {
        return BinaryMatrix(0, n);
    }
    return row_basis(m).matrix;
}

double mean_row_weight(const BinaryMatrix &m) {
    if (m.empty()) {
        return 0;
    }
    double total = 0;
    for (size_t w : m.row_weights()) {
        total += (double)w;
    }
    return total / (double)m.num_rows();
}

std::optional<size_t> first_positive_difference(const std::vector<BigCount> &big, const std::vector<BigCount> &small) {
    for (size_t j = 1; j < big.size(); j++) {
        if (big[j] > small[j]) {
            return j;
        }
    }
    return std::nullopt;
}

}  // namespace

std::string CssCode::label() const {
    return "[[" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(d) + "]]";
}

double CssCode::mean_leader_weight() const {
    return mean_row_weight(coset_leaders);
}

std::optional<size_t> quantum_distance(const CssCode &code, size_t max_dim) {
    size_t n = code.n;
    BinaryMatrix c0_perp = basis_or_empty(null_space(code.c0_generator.empty() ? BinaryMatrix(0, n) : code.c0_generator), n);
    auto dist_c0_perp = exact_weight_distribution(c0_perp, code.c0_generator, max_dim);
    if (!dist_c0_perp.has_value()) {
        return std::nullopt;
    }
    if (code.k == 0) {
        for (size_t j = 1; j < dist_c0_perp->size(); j++) {
            if ((*dist_c0_perp)[j] != 0) {
                return j;
            }
        }
        return std::nullopt;
    }
    auto dist_c_perp = exact_weight_distribution(code.stabilizer_z, code.c_generator, max_dim);
    if (!dist_c_perp.has_value()) {
        return std::nullopt;
    }
    auto dz = first_positive_difference(*dist_c0_perp, *dist_c_perp);
    std::optional<size_t> dx;
    if (same_row_space(c0_perp, code.c_generator)) {
        dx = dz;
    } else {
        auto dist_c = exact_weight_distribution(code.c_generator, code.stabilizer_z, max_dim);
        auto dist_c0 = exact_weight_distribution(code.c0_generator, c0_perp, max_dim);
        if (!dist_c.has_value() || !dist_c0.has_value()) {
            return std::nullopt;
        }
        dx = first_positive_difference(*dist_c, *dist_c0);
    }
    if (!dx.has_value() || !dz.has_value()) {
        fail(ErrorCode::Internal, "Logical operators missing from a k > 0 code.");
    }
    return std::min(*dx, *dz);
}

CssCode css_from_pair(
    const BinaryMatrix &c0, const BinaryMatrix &c, const CssOptions &options, std::optional<double> w,
    const std::string &w_source) {
    size_t n = c.num_cols();
    if (!c0.empty() && c0.num_cols() != n) {
        fail(ErrorCode::InvalidArgument, "C0 and C have different lengths.");
    }
    CssCode code;
    code.n = n;
    RrefResult c0b = row_basis(c0.empty() ? BinaryMatrix(0, n) : c0);
    RrefResult cb = row_basis(c);
    for (const auto &r : c0b.matrix.rows()) {
        if (!row_space_contains(cb, r)) {
            fail(ErrorCode::InvalidArgument, "C0 is not contained in C.");
        }
    }
    if (!c0b.matrix.empty() && !c0b.matrix.mul_transpose(cb.matrix).is_zero()) {
        fail(ErrorCode::NotDualContaining, "C0 is not orthogonal to C.");
    }
    code.k = cb.rank - c0b.rank;
    code.c0_generator = c0b.matrix;
    code.stabilizer_x = c0b.matrix;
    code.stabilizer_z = basis_or_empty(null_space(cb.matrix), n);

    BinaryMatrix complement = complement_basis(c0b.matrix, cb.matrix);
    code.coset_leaders = BinaryMatrix(0, n);
    code.leaders_certified = true;
    for (const auto &t : complement.rows()) {
        CosetRepresentative rep = min_weight_coset_representative(c0b.matrix, t, options.coset_budget);
        code.coset_leaders.append_row(rep.vector);
        code.leaders_certified = code.leaders_certified && rep.certified;
    }
    code.c_generator = code.c0_generator.stacked(code.coset_leaders);
    code.dd_transpose = code.coset_leaders.mul_transpose(code.coset_leaders);
    if (code.k == 0) {
        code.dd_transpose = BinaryMatrix(0, 0);
        code.dd_inverse = BinaryMatrix(0, 0);
    } else {
        code.dd_inverse = inverse(code.dd_transpose);
    }

    code.certificate.contains_dual = is_self_orthogonal(code.stabilizer_z);
    code.certificate.dual_doubly_even = is_doubly_even(code.stabilizer_z);
    code.certificate.c0_doubly_even = is_doubly_even(code.c0_generator);
    code.certificate.check_row_weights = (c0.empty() ? BinaryMatrix(0, n) : c0).row_weights();
    WeightSample s = sample_doubly_even(code.stabilizer_z, 4096);
    code.certificate.sampled_words = s.samples;
    code.certificate.sample_violations = s.violations;

    if (w.has_value()) {
        code.w = *w;
        code.w_source = w_source;
    } else {
        code.w = mean_row_weight(c0);
        code.w_source = "measured mean H~ row weight";
    }

    auto d = quantum_distance(code, options.max_dim);
    if (d.has_value()) {
        code.d = *d;
        code.distance_kind = DistanceKind::Exact;
    } else {
        code.d = 0;
        code.distance_kind = DistanceKind::Bound;
    }
    return code;
}

CssCode css_from_classical(const ClassicalCode &classical, const CssOptions &options) {
    if (!is_self_orthogonal(classical.check)) {
        fail(ErrorCode::NotDualContaining, "Code " + classical.label() + " does not contain its dual.");
    }
    CssCode code = css_from_pair(classical.check, classical.generator, options, classical.w, classical.w_source);
    EligibilityCertificate cert = certify(classical, std::nullopt, options.max_dim);
    cert.c0_doubly_even = code.certificate.c0_doubly_even;
    code.certificate = cert;
    if (code.distance_kind != DistanceKind::Exact) {
        code.d = classical.d;
        code.distance_kind = classical.distance_kind == DistanceKind::Exact ? DistanceKind::Bound : classical.distance_kind;
    }
    char buf[128];
    switch (classical.family) {
        case CodeFamily::Bch:
            std::snprintf(buf, sizeof(buf), "BCH(m=%d, delta=%d)", classical.params[0], classical.params[1]);
            break;
        case CodeFamily::ExtendedQR:
            std::snprintf(buf, sizeof(buf), "ExtendedQR(p=%d)", classical.params[0]);
            break;
        case CodeFamily::PuncturedRM:
            std::snprintf(buf, sizeof(buf), "PuncturedRM(r=%d, m=%d)", classical.params[0], classical.params[1]);
            break;
        default:
            std::snprintf(buf, sizeof(buf), "UserSupplied");
    }
    code.origin = std::string(buf) + " " + classical.label();
    code.notes = classical.notes;
    return code;
}

CssCode quantum_reed_muller(int m, const CssOptions &options) {
    ClassicalCode c = punctured_reed_muller(1, m, options.max_dim);
    size_t n = c.n;
    // Degree-one monomials span the even-weight (simplex) subcode.
    BinaryMatrix c0(0, n);
    for (int b = 0; b < m; b++) {
        BitVector row(n);
        for (size_t pos = 0; pos < n; pos++) {
            if (((pos + 1) >> b) & 1) {
                row.set(pos, true);
            }
        }
        c0.append_row(row);
    }
    CssCode code = css_from_pair(c0, c.generator, options);
    code.origin = "QuantumRM(m=" + std::to_string(m) + ")";
    return code;
}

PauliProduct encoded_x(const CssCode &code, const BitVector &u) {
    if (u.size() != code.k) {
        fail(ErrorCode::InvalidArgument, "Logical word length must equal k.");
    }
    if (code.k == 0) {
        return PauliProduct::identity(code.n);
    }
    return PauliProduct::x_type(code.coset_leaders.left_mul(u));
}

PauliProduct encoded_z(const CssCode &code, const BitVector &u) {
    if (u.size() != code.k) {
        fail(ErrorCode::InvalidArgument, "Logical word length must equal k.");
    }
    if (code.k == 0) {
        return PauliProduct::identity(code.n);
    }
    if (!code.dd_inverse.has_value()) {
        fail(ErrorCode::SingularDDT, "D~ D~^T is singular; the pairing on C/C0 is degenerate for every coset basis.");
    }
    BitVector v = code.dd_inverse->left_mul(u);
    return PauliProduct::z_type(code.coset_leaders.left_mul(v));
}

LemmaConditions check_lemma_conditions(const CssCode &code) {
    LemmaConditions out;
    out.lemma2 = true;
    BinaryMatrix c_perp = code.stabilizer_z;
    out.lemma3 = same_row_space(
        code.c0_generator.empty() ? BinaryMatrix(0, code.n) : code.c0_generator,
        c_perp.empty() ? BinaryMatrix(0, code.n) : c_perp);
    out.lemma4 = out.lemma3 && is_doubly_even(code.c0_generator);
    out.ddt_identity = code.dd_transpose == BinaryMatrix::identity(code.k);
    return out;
}

CssCode derive_smaller_code(const CssCode &code, size_t row_index, const CssOptions &options) {
    if (!check_lemma_conditions(code).lemma4) {
        fail(ErrorCode::LemmaUnsupported, "Row deletion needs a code meeting the doubly-even dual-containing conditions.");
    }
    RrefResult h = row_basis(code.c0_generator);
    if (row_index >= h.rank) {
        fail(ErrorCode::InvalidArgument, "Row index out of range.");
    }
    size_t pivot = h.pivots[row_index];
    // The pivot column is zero in every other reduced row, so dropping it
    // shortens C0 without changing any remaining row weight.
    BinaryMatrix c0 = h.matrix.without_row(row_index).without_col(pivot);
    if (!is_self_orthogonal(c0)) {
        fail(ErrorCode::Internal, "Row deletion broke self-orthogonality.");
    }
    BinaryMatrix c = null_space(c0);
    CssCode out = css_from_pair(c0, c, options, code.w, code.w_source);
    if (out.distance_kind != DistanceKind::Exact) {
        out.d = code.d > 0 ? code.d - 1 : 0;
        out.distance_kind = DistanceKind::Bound;
    }
    out.certificate.check_row_weights = c0.row_weights();
    out.origin = code.origin + " minus H~ row " + std::to_string(row_index);
    if (!is_doubly_even(out.c0_generator)) {
        fail(ErrorCode::Internal, "Derived C0 is not doubly even.");
    }
    return out;
}

}  // namespace cssft
