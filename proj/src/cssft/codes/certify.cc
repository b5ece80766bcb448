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

#include "cssft/codes/certify.h"

#include <random>

#include "cssft/error.h"

namespace cssft {

bool EligibilityCertificate::lemma1_congruent() const {
    if (!lemma1_residues.has_value()) {
        return false;
    }
    for (const auto &[u, r] : *lemma1_residues) {
        if (r < 0) {
            return false;
        }
    }
    return true;
}

bool is_doubly_even(const BinaryMatrix &generators) {
    for (size_t i = 0; i < generators.num_rows(); i++) {
        if (generators.row(i).weight() % 4 != 0) {
            return false;
        }
        for (size_t j = i + 1; j < generators.num_rows(); j++) {
            if (generators.row(i).overlap(generators.row(j)) & 1) {
                return false;
            }
        }
    }
    return true;
}

WeightSample sample_doubly_even(const BinaryMatrix &generators, uint64_t samples, uint64_t seed) {
    WeightSample out;
    if (generators.empty()) {
        return out;
    }
    std::mt19937_64 rng(seed);
    for (uint64_t s = 0; s < samples; s++) {
        BitVector v(generators.num_cols());
        for (const auto &r : generators.rows()) {
            if (rng() & 1) {
                v ^= r;
            }
        }
        out.samples++;
        if (v.weight() % 4 != 0) {
            out.violations++;
        }
    }
    return out;
}

BinaryMatrix complement_basis(const BinaryMatrix &c0, const BinaryMatrix &c) {
    size_t n = c.num_cols();
    BinaryMatrix span = c0.empty() ? BinaryMatrix(0, n) : c0;
    BinaryMatrix out(0, n);
    size_t r = rank(span);
    for (const auto &row : c.rows()) {
        BinaryMatrix trial = span;
        trial.append_row(row);
        size_t r2 = rank(trial);
        if (r2 > r) {
            span = std::move(trial);
            r = r2;
            out.append_row(row);
        }
    }
    return out;
}

std::map<std::string, int> coset_weight_residues(
    const BinaryMatrix &c0, const BinaryMatrix &leaders, int w, size_t max_dim) {
    if (w <= 0) {
        fail(ErrorCode::InvalidArgument, "Residue modulus must be positive.");
    }
    size_t k = leaders.num_rows();
    size_t n = leaders.empty() ? c0.num_cols() : leaders.num_cols();
    RrefResult basis = row_basis(c0.empty() ? BinaryMatrix(0, n) : c0);
    if (basis.rank > max_dim || k > 16) {
        fail(ErrorCode::DimensionTooLarge, "Coset residues need an enumerable C0 and k <= 16.");
    }
    std::map<std::string, int> out;
    for (uint64_t u = 0; u < (uint64_t{1} << k); u++) {
        BitVector ub = BitVector::from_uint64(u, k);
        BitVector shift = k ? leaders.left_mul(ub) : BitVector(n);
        int residue = -2;
        for_each_in_coset(basis.matrix, shift, [&](const BitVector &x, size_t) {
            int r = (int)(x.weight() % (size_t)w);
            if (residue == -2) {
                residue = r;
            } else if (residue != r) {
                residue = -1;
            }
        });
        out[ub.str()] = residue;
    }
    return out;
}

EligibilityCertificate certify(const ClassicalCode &code, std::optional<int> w, size_t max_dim, uint64_t samples) {
    EligibilityCertificate cert;
    cert.contains_dual = is_self_orthogonal(code.check);
    cert.dual_doubly_even = is_doubly_even(code.check);
    cert.c0_doubly_even = cert.contains_dual && cert.dual_doubly_even;
    cert.check_row_weights = code.check_rows.row_weights();
    WeightSample s = sample_doubly_even(code.check, samples);
    cert.sampled_words = s.samples;
    cert.sample_violations = s.violations;
    if (cert.dual_doubly_even && s.violations != 0) {
        fail(ErrorCode::Internal, "Row-pair test and sampled weights disagree.");
    }
    if (w.has_value()) {
        cert.lemma1_w = *w;
        if (cert.contains_dual) {
            BinaryMatrix leaders = complement_basis(code.check, code.generator);
            cert.lemma1_residues = coset_weight_residues(code.check, leaders, *w, max_dim);
        }
    }
    return cert;
}

BchConjectureReport verify_bch_dual_conjecture(int m, uint64_t samples) {
    if (m < 3 || m > 8) {
        fail(ErrorCode::InvalidParameters, "The BCH conjecture check supports 3 <= m <= 8.");
    }
    BchConjectureReport report;
    report.m = m;
    size_t n = (size_t{1} << m) - 1;
    size_t last_k = SIZE_MAX;
    for (int delta = 3; (size_t)delta <= n; delta += 2) {
        ClassicalCode code;
        try {
            code = bch_code(m, delta, 20);
        } catch (const Error &e) {
            if (e.code() == ErrorCode::InvalidParameters) {
                break;
            }
            throw;
        }
        if (code.k == last_k) {
            continue;
        }
        last_k = code.k;
        BchConjectureEntry e;
        e.designed_distance = delta;
        e.n = code.n;
        e.k_c = code.k;
        e.contains_dual = is_self_orthogonal(code.check);
        e.dual_doubly_even = is_doubly_even(code.check);
        WeightSample s = sample_doubly_even(code.check, samples, 0x5eedULL + (uint64_t)delta);
        e.sampled_words = s.samples;
        e.sample_violations = s.violations;
        if (e.dual_doubly_even && s.violations) {
            fail(ErrorCode::Internal, "Row-pair test and sampled weights disagree.");
        }
        if (e.contains_dual && !e.dual_doubly_even) {
            report.holds = false;
        }
        report.entries.push_back(e);
    }
    return report;
}

}  // namespace cssft
