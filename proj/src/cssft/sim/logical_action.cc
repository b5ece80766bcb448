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

#include "cssft/sim/logical_action.h"

#include <cmath>
#include <unordered_map>

#include "cssft/error.h"

namespace cssft {

ComplexMatrix identity_matrix(size_t dim) {
    ComplexMatrix m(dim, std::vector<Amplitude>(dim, 0.0));
    for (size_t i = 0; i < dim; i++) {
        m[i][i] = 1.0;
    }
    return m;
}

double max_abs_difference(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.size() != b.size()) {
        fail(ErrorCode::InvalidArgument, "Matrix shapes differ.");
    }
    double worst = 0;
    for (size_t i = 0; i < a.size(); i++) {
        if (a[i].size() != b[i].size()) {
            fail(ErrorCode::InvalidArgument, "Matrix shapes differ.");
        }
        for (size_t j = 0; j < a[i].size(); j++) {
            worst = std::max(worst, std::abs(a[i][j] - b[i][j]));
        }
    }
    return worst;
}

double unitarity_deviation(const ComplexMatrix &m) {
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    double worst = 0;
    for (size_t i = 0; i < cols; i++) {
        for (size_t j = 0; j < cols; j++) {
            Amplitude acc = 0;
            for (size_t r = 0; r < rows; r++) {
                acc += std::conj(m[r][i]) * m[r][j];
            }
            worst = std::max(worst, std::abs(acc - (i == j ? 1.0 : 0.0)));
        }
    }
    return worst;
}

namespace {

struct BlockProjector {
    size_t width = 0;
    bool reference = false;
    double scale = 1;
    std::unordered_map<uint64_t, uint64_t> coset_to_index;
};

BlockProjector make_projector(const BlockLayout &layout) {
    BlockProjector p;
    if (layout.is_reference()) {
        p.reference = true;
        p.width = layout.n;
        return p;
    }
    const CssCode &code = *layout.code;
    p.width = code.k;
    if (code.k > 20) {
        fail(ErrorCode::DimensionTooLarge, "Logical projection needs k <= 20.");
    }
    p.scale = std::pow(2.0, -(double)layout.invariant_rows.size() / 2.0);
    for (uint64_t u = 0; u < (uint64_t{1} << code.k); u++) {
        BitVector shift = code.k ? code.coset_leaders.left_mul(BitVector::from_uint64(u, code.k)) : BitVector(code.n);
        uint64_t w = shift.size() ? shift.data()[0] : 0;
        p.coset_to_index[layout.reduce(w)] = u;
    }
    return p;
}

}  // namespace

LogicalProjection project_logical(const LogicalState &state, uint64_t max_dim) {
    LogicalProjection out;
    std::vector<BlockProjector> projectors;
    size_t total_width = 0;
    for (const auto &b : state.blocks()) {
        projectors.push_back(make_projector(b));
        out.widths.push_back(projectors.back().width);
        total_width += projectors.back().width;
    }
    if (total_width >= 63 || (uint64_t{1} << total_width) > max_dim) {
        fail(ErrorCode::DimensionTooLarge, "Logical dimension exceeds the projection limit.");
    }
    out.amplitudes.assign(uint64_t{1} << total_width, 0.0);
    for (const auto &t : state.terms()) {
        out.total += std::norm(t.amp);
        uint64_t index = 0;
        size_t shift = 0;
        double scale = 1;
        bool inside = true;
        for (size_t b = 0; b < projectors.size() && inside; b++) {
            const auto &p = projectors[b];
            uint64_t u;
            if (p.reference) {
                u = t.key[b];
            } else {
                auto it = p.coset_to_index.find(state.blocks()[b].reduce(t.key[b]));
                if (it == p.coset_to_index.end()) {
                    inside = false;
                    break;
                }
                u = it->second;
                scale *= p.scale;
            }
            index |= u << shift;
            shift += p.width;
        }
        if (inside) {
            out.amplitudes[index] += t.amp * scale;
        }
    }
    for (const auto &a : out.amplitudes) {
        out.captured += std::norm(a);
    }
    return out;
}

bool LogicalActionReport::passed(double tolerance) const {
    if (!legitimate || max_norm_deviation > tolerance || unitarity_deviation > tolerance) {
        return false;
    }
    return !has_prediction || max_deviation <= tolerance;
}

LogicalActionReport derive_logical_action(
    const std::vector<std::shared_ptr<const CssCode>> &codes, const std::vector<BitwiseGate> &gates,
    const ComplexMatrix *predicted, uint64_t budget) {
    LogicalActionReport report;
    size_t total_k = 0;
    for (const auto &c : codes) {
        total_k += c->k;
    }
    if (total_k > 8) {
        fail(ErrorCode::DimensionTooLarge, "Logical action derivation is limited to 8 logical qubits.");
    }
    report.logical_qubits = total_k;
    size_t dim = size_t{1} << total_k;
    report.derived.assign(dim, std::vector<Amplitude>(dim, 0.0));
    report.legitimate = true;
    for (size_t input = 0; input < dim; input++) {
        LogicalState state;
        size_t shift = 0;
        for (size_t b = 0; b < codes.size(); b++) {
            uint64_t u = (input >> shift) & ((uint64_t{1} << codes[b]->k) - 1);
            shift += codes[b]->k;
            LogicalState block = encode_basis(codes[b], u, "b" + std::to_string(b), budget);
            state = b == 0 ? block : state.tensor(block);
        }
        for (const auto &g : gates) {
            apply_in_place(g, state, budget);
            report.gate_applications++;
            report.max_norm_deviation = std::max(report.max_norm_deviation, std::abs(state.norm_squared() - 1.0));
        }
        LogicalProjection proj = project_logical(state);
        if (std::abs(proj.captured - proj.total) > 1e-9) {
            report.legitimate = false;
        }
        for (size_t out = 0; out < dim; out++) {
            report.derived[out][input] = proj.amplitudes[out];
        }
    }
    report.unitarity_deviation = unitarity_deviation(report.derived);
    if (predicted != nullptr) {
        report.predicted = *predicted;
        report.has_prediction = true;
        report.max_deviation = max_abs_difference(report.derived, report.predicted);
    }
    return report;
}

}  // namespace cssft
