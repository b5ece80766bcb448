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

#include "cssft/sim/lemmas.h"

#include <cmath>
#include <functional>
#include <numbers>

#include "cssft/error.h"

namespace cssft {

namespace {

constexpr double kPi = std::numbers::pi;

// u M v^T for logical indices u, v.
bool pairing(const CssCode &code, uint64_t u, uint64_t v) {
    BitVector ub = BitVector::from_uint64(u, code.k);
    BitVector vb = BitVector::from_uint64(v, code.k);
    return code.dd_transpose.left_mul(ub).dot(vb);
}

uint64_t mask_of(size_t k) {
    return (uint64_t{1} << k) - 1;
}

LemmaCheck run(
    const std::string &name, const std::vector<std::shared_ptr<const CssCode>> &codes,
    const std::vector<BitwiseGate> &gates, const ComplexMatrix &predicted) {
    LemmaCheck c;
    c.name = name;
    c.report = derive_logical_action(codes, gates, &predicted);
    c.passed = c.report.passed();
    return c;
}

ComplexMatrix diagonal(size_t dim, const std::function<Amplitude(uint64_t)> &entry) {
    ComplexMatrix m(dim, std::vector<Amplitude>(dim, 0.0));
    for (size_t i = 0; i < dim; i++) {
        m[i][i] = entry(i);
    }
    return m;
}

using BasisMap = std::function<std::pair<uint64_t, Amplitude>(uint64_t)>;

LogicalState encode_product(const std::vector<std::shared_ptr<const CssCode>> &codes, uint64_t index) {
    LogicalState out;
    size_t shift = 0;
    for (size_t b = 0; b < codes.size(); b++) {
        LogicalState block = encode_basis(codes[b], (index >> shift) & mask_of(codes[b]->k));
        out = b == 0 ? block : out.tensor(block);
        shift += codes[b]->k;
    }
    return out;
}

// Check without the dense matrix, for gates mapping each encoded basis state
// to a phase times another one. Used when the logical dimension is too large.
LemmaCheck run_basis_map(
    const std::string &name, const std::vector<std::shared_ptr<const CssCode>> &codes,
    const std::vector<BitwiseGate> &gates, const BasisMap &image) {
    LemmaCheck c;
    c.name = name;
    size_t total_k = 0;
    for (const auto &code : codes) {
        total_k += code->k;
    }
    if (total_k > 20) {
        fail(ErrorCode::DimensionTooLarge, "Basis-map check is limited to 20 logical qubits.");
    }
    c.report.logical_qubits = total_k;
    c.report.has_prediction = true;
    c.report.legitimate = true;
    for (uint64_t index = 0; index < (uint64_t{1} << total_k); index++) {
        LogicalState in = encode_product(codes, index);
        LogicalState out = in;
        for (const auto &g : gates) {
            apply_in_place(g, out);
            c.report.gate_applications++;
        }
        c.report.max_norm_deviation = std::max(c.report.max_norm_deviation, std::abs(out.norm_squared() - 1));
        auto [target, amp] = image(index);
        LogicalState expected = encode_product(codes, target);
        expected.scale(amp);
        c.report.max_deviation = std::max(c.report.max_deviation, out.distance(expected));
    }
    c.passed = c.report.max_deviation <= 1e-9 && c.report.max_norm_deviation <= 1e-9;
    return c;
}

// Dense predicted matrices are built only up to the derivation limit.
constexpr size_t DENSE_LOGICAL_LIMIT = 8;

void require_dense(size_t total_k, const char *what) {
    if (total_k > DENSE_LOGICAL_LIMIT) {
        fail(
            ErrorCode::DimensionTooLarge,
            std::string(what) + " needs a dense " + std::to_string(total_k) + "-qubit logical matrix.");
    }
}

void require_lemma3(const CssCode &code, const char *what) {
    if (!check_lemma_conditions(code).lemma3) {
        fail(ErrorCode::LemmaUnsupported, std::string(what) + " needs C0 = C^perp.");
    }
}

}  // namespace

void LemmaReport::add(LemmaCheck check) {
    passed = passed && check.passed;
    checks.push_back(std::move(check));
}

LemmaReport verify_lemma2(std::shared_ptr<const CssCode> code) {
    LemmaReport out;
    out.lemma = "lemma2";
    size_t k = code->k;
    auto image = [&](uint64_t in) {
        uint64_t u = in & mask_of(k);
        uint64_t v = in >> k;
        return std::pair<uint64_t, Amplitude>(u | ((u ^ v) << k), 1.0);
    };
    if (2 * k > 8) {
        out.add(run_basis_map("bitwise CX", {code, code}, {BitwiseGate::cx(0, 1)}, image));
        return out;
    }
    size_t dim = size_t{1} << (2 * k);
    ComplexMatrix predicted(dim, std::vector<Amplitude>(dim, 0.0));
    for (uint64_t in = 0; in < dim; in++) {
        predicted[image(in).first][in] = 1.0;
    }
    out.add(run("bitwise CX", {code, code}, {BitwiseGate::cx(0, 1)}, predicted));
    return out;
}

LemmaReport verify_lemma3(std::shared_ptr<const CssCode> code) {
    require_lemma3(*code, "Lemma 3");
    LemmaReport out;
    out.lemma = "lemma3";
    size_t k = code->k;
    require_dense(k, "Bitwise H");
    size_t dim = size_t{1} << k;
    ComplexMatrix h(dim, std::vector<Amplitude>(dim, 0.0));
    double norm = std::pow(2.0, -(double)k / 2.0);
    for (uint64_t u = 0; u < dim; u++) {
        for (uint64_t v = 0; v < dim; v++) {
            h[v][u] = pairing(*code, u, v) ? -norm : norm;
        }
    }
    out.add(run("bitwise H", {code}, {BitwiseGate::h_all(0)}, h));
    auto cz_entry = [&](uint64_t i) -> Amplitude {
        return pairing(*code, i & mask_of(k), i >> k) ? -1.0 : 1.0;
    };
    if (2 * k <= 8) {
        out.add(run("bitwise CZ", {code, code}, {BitwiseGate::cz(0, 1)}, diagonal(dim * dim, cz_entry)));
    } else {
        out.add(run_basis_map("bitwise CZ", {code, code}, {BitwiseGate::cz(0, 1)}, [&](uint64_t i) {
            return std::pair<uint64_t, Amplitude>(i, cz_entry(i));
        }));
    }
    if (check_lemma_conditions(*code).ddt_identity) {
        out.notes.push_back("D D^T = I: bitwise H is the k-fold logical Hadamard.");
    }
    return out;
}

LemmaReport verify_lemma4(std::shared_ptr<const CssCode> code) {
    if (!check_lemma_conditions(*code).lemma4) {
        fail(ErrorCode::LemmaUnsupported, "Lemma 4 needs a doubly-even C0 = C^perp.");
    }
    LemmaReport out;
    out.lemma = "lemma4";
    auto entry = [&](uint64_t u) -> Amplitude {
        size_t wt = code->k ? code->coset_leaders.left_mul(BitVector::from_uint64(u, code->k)).weight() : 0;
        return eighth_root(2 * (int64_t)(wt % 4));
    };
    if (code->k > DENSE_LOGICAL_LIMIT) {
        out.add(run_basis_map("bitwise P(pi/2)", {code}, {BitwiseGate::phase(0, kPi / 2)}, [&](uint64_t u) {
            return std::pair<uint64_t, Amplitude>(u, entry(u));
        }));
        return out;
    }
    ComplexMatrix p = diagonal(size_t{1} << code->k, entry);
    out.add(run("bitwise P(pi/2)", {code}, {BitwiseGate::phase(0, kPi / 2)}, p));
    return out;
}

LemmaReport verify_lemma1(std::shared_ptr<const CssCode> code, int w) {
    if (code->k != 1) {
        fail(ErrorCode::LemmaUnsupported, "The Lemma 1 verifier handles k = 1 codes.");
    }
    if (w <= 0) {
        fail(ErrorCode::InvalidArgument, "w must be positive.");
    }
    auto residues = coset_weight_residues(code->c0_generator, code->coset_leaders, w);
    int r0 = residues.at("0");
    int r1 = residues.at("1");
    if (r0 < 0 || r1 < 0) {
        fail(
            ErrorCode::WeightCongruenceViolated,
            "Coset weights of " + code->label() + " are not constant mod " + std::to_string(w) + ".");
    }
    LemmaReport out;
    out.lemma = "lemma1";
    out.w = w;
    out.r0 = r0;
    out.r1 = r1;
    out.r = ((r1 - r0) % w + w) % w;
    double unit = 2 * kPi / w;
    // Single block: |u> picks up e^{i unit r_u}.
    ComplexMatrix p = diagonal(2, [&](uint64_t u) -> Amplitude {
        return std::polar(1.0, unit * (u ? r1 : r0));
    });
    LemmaCheck single = run("bitwise P(2pi/w)", {code}, {BitwiseGate::phase(0, unit)}, p);
    for (size_t u = 0; u < 2; u++) {
        out.empirical_phases.push_back(std::arg(single.report.derived[u][u]));
    }
    out.add(std::move(single));
    if (r0 != 0) {
        out.notes.push_back(
            "r0 != 0: the single-block check includes the global phase e^{2 pi i r0/w}; "
            "the controlled checks report empirical phases only.");
        auto diag_only = [](LemmaCheck c) {
            c.report.has_prediction = false;
            c.passed = c.report.passed();
            return c;
        };
        out.add(diag_only(run("bitwise CP(4pi/w)", {code, code}, {BitwiseGate::cphase(0, 1, 2 * unit)}, identity_matrix(4))));
        out.add(diag_only(
            run("bitwise CCP(8pi/w)", {code, code, code}, {BitwiseGate::ccphase(0, 1, 2, 4 * unit)}, identity_matrix(8))));
        return out;
    }
    double r = out.r;
    ComplexMatrix cp = diagonal(4, [&](uint64_t i) -> Amplitude {
        return (i == 3) ? std::polar(1.0, 2 * unit * r) : Amplitude(1.0);
    });
    out.add(run("bitwise CP(4pi/w)", {code, code}, {BitwiseGate::cphase(0, 1, 2 * unit)}, cp));
    ComplexMatrix ccp = diagonal(8, [&](uint64_t i) -> Amplitude {
        return (i == 7) ? std::polar(1.0, 4 * unit * r) : Amplitude(1.0);
    });
    out.add(run("bitwise CCP(8pi/w)", {code, code, code}, {BitwiseGate::ccphase(0, 1, 2, 4 * unit)}, ccp));
    return out;
}

LemmaReport verify_lemma5(std::shared_ptr<const CssCode> code) {
    require_lemma3(*code, "Lemma 5");
    LemmaReport out;
    out.lemma = "lemma5";
    size_t k = code->k;
    auto cat = repetition_register(code->n);
    auto entry = [&](uint64_t i) -> Amplitude {
        uint64_t u = i & mask_of(k);
        uint64_t v = (i >> k) & mask_of(k);
        uint64_t a = i >> (2 * k);
        return (a && pairing(*code, u, v)) ? -1.0 : 1.0;
    };
    if (2 * k + 1 > DENSE_LOGICAL_LIMIT) {
        out.add(run_basis_map("bitwise CCZ onto cat", {code, code, cat}, {BitwiseGate::ccz(0, 1, 2)}, [&](uint64_t i) {
            return std::pair<uint64_t, Amplitude>(i, entry(i));
        }));
        return out;
    }
    ComplexMatrix predicted = diagonal(size_t{1} << (2 * k + 1), entry);
    out.add(run("bitwise CCZ onto cat", {code, code, cat}, {BitwiseGate::ccz(0, 1, 2)}, predicted));
    return out;
}

StabilizerCheck check_stabilizer_invariance(std::shared_ptr<const CssCode> code) {
    StabilizerCheck out;
    if (code->k > 20) {
        fail(ErrorCode::DimensionTooLarge, "Stabilizer check is limited to 20 logical qubits.");
    }
    for (uint64_t u = 0; u < (uint64_t{1} << code->k); u++) {
        LogicalState s = encode_basis(code, u);
        auto word = [](const BitVector &v) {
            return v.size() ? v.data()[0] : 0;
        };
        for (const auto &g : code->stabilizer_x.rows()) {
            double d = apply(BitwiseGate::x_mask(0, word(g)), s).distance(s);
            out.max_deviation = std::max(out.max_deviation, d);
            out.applications++;
        }
        for (const auto &h : code->stabilizer_z.rows()) {
            double d = apply(BitwiseGate::z_mask(0, word(h)), s).distance(s);
            out.max_deviation = std::max(out.max_deviation, d);
            out.applications++;
        }
    }
    out.passed = out.max_deviation <= 1e-9;
    return out;
}

}  // namespace cssft
