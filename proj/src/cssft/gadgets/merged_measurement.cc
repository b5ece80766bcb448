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

#include "cssft/gadgets/merged_measurement.h"

#include <algorithm>
#include <bit>
#include <map>

#include "cssft/error.h"
#include "cssft/gadgets/ancilla.h"
#include "cssft/sim/bitwise_gate.h"

namespace cssft {

namespace {

uint64_t word_of(const BitVector &v) {
    return v.size() == 0 ? 0 : v.data()[0];
}

std::vector<uint64_t> row_words(const BinaryMatrix &m) {
    std::vector<uint64_t> out;
    for (const auto &r : m.rows()) {
        out.push_back(word_of(r));
    }
    return out;
}

bool parity(uint64_t w) {
    return std::popcount(w) & 1;
}

}  // namespace

const char *logical_operator_name(LogicalOperator op) {
    return op == LogicalOperator::X ? "X" : "Z";
}

uint64_t logical_x_support(const CssCode &code, uint64_t u) {
    if (code.k == 0 || u == 0) {
        return 0;
    }
    return word_of(code.coset_leaders.left_mul(BitVector::from_uint64(u, code.k)));
}

uint64_t logical_z_support(const CssCode &code, uint64_t u) {
    if (code.k == 0 || u == 0) {
        return 0;
    }
    // Solve [H~; D~] m = (0, u) through the reduced form of [G | I].
    size_t r = code.c0_generator.num_rows();
    size_t rows = r + code.k;
    BinaryMatrix aug(rows, code.n + rows);
    for (size_t i = 0; i < rows; i++) {
        const BitVector &g = i < r ? code.c0_generator.row(i) : code.coset_leaders.row(i - r);
        for (size_t c = 0; c < code.n; c++) {
            aug.set(i, c, g.get(c));
        }
        aug.set(i, code.n + i, true);
    }
    RrefResult red = rref(aug);
    if (red.rank < rows || red.pivots[rows - 1] >= code.n) {
        fail(ErrorCode::Internal, "Rows of H~ and D~ are not independent.");
    }
    uint64_t m = 0;
    for (size_t i = 0; i < rows; i++) {
        bool rhs = false;
        for (size_t j = 0; j < code.k; j++) {
            if (((u >> j) & 1) && red.matrix.get(i, code.n + r + j)) {
                rhs = !rhs;
            }
        }
        if (rhs) {
            m |= uint64_t{1} << red.pivots[i];
        }
    }
    return m;
}

SyndromeDecoder::SyndromeDecoder(std::vector<uint64_t> checks, size_t n, size_t max_weight) : checks_(std::move(checks)) {
    table_[0] = 0;
    size_t target = checks_.size() < 30 ? size_t{1} << checks_.size() : SIZE_MAX;
    // Weight-by-weight enumeration in lexicographic order of positions.
    for (size_t w = 1; w <= max_weight && w <= n && table_.size() < target; w++) {
        std::vector<size_t> pos(w);
        for (size_t i = 0; i < w; i++) {
            pos[i] = i;
        }
        while (true) {
            uint64_t e = 0;
            for (size_t p : pos) {
                e |= uint64_t{1} << p;
            }
            table_.emplace(syndrome(e), e);
            size_t i = w;
            while (i > 0 && pos[i - 1] == n - w + i - 1) {
                i--;
            }
            if (i == 0) {
                break;
            }
            pos[i - 1]++;
            for (size_t j = i; j < w; j++) {
                pos[j] = pos[j - 1] + 1;
            }
        }
    }
}

uint64_t SyndromeDecoder::syndrome(uint64_t error) const {
    uint64_t s = 0;
    for (size_t i = 0; i < checks_.size(); i++) {
        if (parity(error & checks_[i])) {
            s |= uint64_t{1} << i;
        }
    }
    return s;
}

std::optional<uint64_t> SyndromeDecoder::decode(uint64_t syndrome) const {
    auto it = table_.find(syndrome);
    if (it == table_.end()) {
        return std::nullopt;
    }
    return it->second;
}

SyndromeDecoder code_decoder(const CssCode &code, const std::vector<uint64_t> &checks) {
    size_t t = code.d > 0 ? (code.d - 1) / 2 : 0;
    return SyndromeDecoder(checks, code.n, std::min<size_t>(t, 3));
}

std::vector<MergedMeasurementBranch> merged_measure_block(
    const LogicalState &state, size_t block, LogicalOperator op, uint64_t u, uint64_t budget) {
    const auto &layout = state.blocks().at(block);
    if (layout.is_reference()) {
        fail(ErrorCode::InvalidArgument, "Merged measurement needs a code block.");
    }
    std::shared_ptr<const CssCode> code = layout.code;
    uint64_t ancilla_u = u;
    if (op == LogicalOperator::Z && u != 0) {
        if (!code->dd_inverse) {
            fail(ErrorCode::SingularDDT, "Z-bar measurement by CZ needs an invertible D D^T.");
        }
        ancilla_u = code->dd_inverse->left_mul(BitVector::from_uint64(u, code->k)).to_uint64();
    }
    AncillaSpec spec;
    spec.target = AncillaTarget::ZeroPlusU;
    spec.u = ancilla_u;
    LogicalState joint = state.tensor(prepare_ancilla(code, spec, "merged-ancilla"));
    if (joint.terms().size() > budget) {
        fail(ErrorCode::DimensionTooLarge, "Merged measurement exceeds the term budget.");
    }
    size_t anc = state.num_blocks();
    BitwiseGate gate = op == LogicalOperator::X ? BitwiseGate::cx(anc, block) : BitwiseGate::cz(anc, block);
    apply_in_place(gate, joint, budget);

    std::vector<uint64_t> functionals = row_words(code->c0_generator);
    size_t r = functionals.size();
    if (r + 1 > 64) {
        fail(ErrorCode::DimensionTooLarge, "Too many checks for one measurement word.");
    }
    uint64_t eigen_functional = logical_x_support(*code, ancilla_u);
    functionals.push_back(eigen_functional);
    SyndromeDecoder decoder = code_decoder(*code, row_words(code->c0_generator));

    std::map<std::pair<int, uint64_t>, MergedMeasurementBranch> merged;
    for (auto &b : measure_block(joint, anc, Basis::X, functionals)) {
        uint64_t syndrome = b.functional_values & ((r < 64 ? uint64_t{1} << r : 0) - 1);
        int raw = (b.functional_values >> r) & 1;
        auto error = decoder.decode(syndrome);
        MergedMeasurementBranch out;
        out.syndrome = syndrome;
        out.decoded = error.has_value();
        out.correction = error.value_or(0);
        out.eigenbit = raw ^ (int)parity(out.correction & eigen_functional);
        out.probability = b.probability;
        LogicalState post = b.post_state.without_block(anc);
        if (out.correction) {
            BitwiseGate fix = op == LogicalOperator::X ? BitwiseGate::z_mask(block, out.correction)
                                                       : BitwiseGate::x_mask(block, out.correction);
            apply_in_place(fix, post, budget);
        }
        post.canonicalize();
        auto key = std::make_pair(out.eigenbit, syndrome);
        auto it = merged.find(key);
        if (it == merged.end()) {
            out.post_state = std::move(post);
            merged.emplace(key, std::move(out));
            continue;
        }
        // Equal records from different outcome classes: keep the weighted
        // mixture only when the post-states agree up to a phase.
        auto &kept = it->second;
        double d = kept.post_state.distance(post);
        if (d > 1e-9) {
            LogicalState flipped = post;
            flipped.scale(-1.0);
            if (kept.post_state.distance(flipped) > 1e-9) {
                fail(ErrorCode::Internal, "Merged measurement produced distinct post-states for one record.");
            }
        }
        kept.probability += out.probability;
    }
    std::vector<MergedMeasurementBranch> out;
    for (auto &[key, b] : merged) {
        out.push_back(std::move(b));
    }
    return out;
}

std::vector<MergedMeasurementBranch> merged_measurement(
    std::shared_ptr<const CssCode> code, uint64_t u, LogicalOperator op, const LogicalState &data) {
    if (data.num_blocks() != 1 || data.blocks()[0].code != code) {
        fail(ErrorCode::InvalidArgument, "Data must be a single block of the given code.");
    }
    return merged_measure_block(data, 0, op, u);
}

}  // namespace cssft
