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

#include "cssft/sim/logical_state.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numbers>

#include "cssft/error.h"
#include "cssft/gf2/enumerate.h"

namespace cssft {

namespace {

uint64_t to_word(const BitVector &v) {
    return v.size() == 0 ? 0 : v.data()[0];
}

struct WordBasis {
    std::vector<uint64_t> rows;
    std::vector<int> pivots;

    bool insert(uint64_t w) {
        for (size_t i = 0; i < rows.size(); i++) {
            if ((w >> pivots[i]) & 1) {
                w ^= rows[i];
            }
        }
        if (w == 0) {
            return false;
        }
        int p = std::countr_zero(w);
        for (size_t i = 0; i < rows.size(); i++) {
            if ((rows[i] >> p) & 1) {
                rows[i] ^= w;
            }
        }
        rows.push_back(w);
        pivots.push_back(p);
        return true;
    }
};

}  // namespace

uint64_t BlockLayout::reduce(uint64_t w) const {
    for (size_t i = 0; i < invariant_rows.size(); i++) {
        if ((w >> invariant_pivots[i]) & 1) {
            w ^= invariant_rows[i];
        }
    }
    return w;
}

BlockLayout code_block(std::shared_ptr<const CssCode> code, const std::string &label) {
    if (code->n > MAX_BLOCK_QUBITS) {
        fail(ErrorCode::DimensionTooLarge, "Simulated blocks are limited to 64 qubits.");
    }
    BlockLayout b;
    b.n = code->n;
    b.label = label;
    b.code = code;
    RrefResult r = row_basis(code->c0_generator.empty() ? BinaryMatrix(0, code->n) : code->c0_generator);
    for (size_t i = 0; i < r.rank; i++) {
        b.invariant_rows.push_back(to_word(r.matrix.row(i)));
        b.invariant_pivots.push_back((int)r.pivots[i]);
    }
    return b;
}

BlockLayout reference_block(size_t k, const std::string &label) {
    if (k > MAX_BLOCK_QUBITS) {
        fail(ErrorCode::DimensionTooLarge, "Reference registers are limited to 64 qubits.");
    }
    BlockLayout b;
    b.n = k;
    b.label = label;
    return b;
}

std::shared_ptr<const CssCode> repetition_register(size_t n) {
    BinaryMatrix c(0, n);
    c.append_row(BitVector::ones(n));
    auto code = std::make_shared<CssCode>(css_from_pair(BinaryMatrix(0, n), c));
    code->origin = "repetition register";
    return code;
}

LogicalState::LogicalState(std::vector<BlockLayout> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.size() > MAX_BLOCKS) {
        fail(ErrorCode::DimensionTooLarge, "A state holds at most 8 blocks.");
    }
}

void LogicalState::canonicalize(double drop) {
    std::sort(terms_.begin(), terms_.end(), [](const Term &a, const Term &b) {
        return a.key < b.key;
    });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto &t : terms_) {
        if (!out.empty() && out.back().key == t.key) {
            out.back().amp += t.amp;
        } else {
            out.push_back(t);
        }
    }
    std::erase_if(out, [&](const Term &t) {
        return std::abs(t.amp) < drop;
    });
    terms_ = std::move(out);
}

double LogicalState::norm_squared() const {
    double total = 0;
    for (const auto &t : terms_) {
        total += std::norm(t.amp);
    }
    return total;
}

void LogicalState::scale(Amplitude factor) {
    for (auto &t : terms_) {
        t.amp *= factor;
    }
}

void LogicalState::normalize() {
    double n2 = norm_squared();
    if (n2 <= 0) {
        fail(ErrorCode::Internal, "Cannot normalize a zero state.");
    }
    scale(1.0 / std::sqrt(n2));
}

LogicalState LogicalState::tensor(const LogicalState &other) const {
    std::vector<BlockLayout> blocks = blocks_;
    blocks.insert(blocks.end(), other.blocks_.begin(), other.blocks_.end());
    LogicalState out(std::move(blocks));
    size_t shift = blocks_.size();
    out.terms_.reserve(terms_.size() * other.terms_.size());
    for (const auto &a : terms_) {
        for (const auto &b : other.terms_) {
            Term t{a.key, a.amp * b.amp};
            for (size_t i = 0; i < other.blocks_.size(); i++) {
                t.key[shift + i] = b.key[i];
            }
            out.terms_.push_back(t);
        }
    }
    return out;
}

LogicalState LogicalState::without_block(size_t block) const {
    std::vector<BlockLayout> blocks = blocks_;
    blocks.erase(blocks.begin() + block);
    LogicalState out(std::move(blocks));
    for (const auto &t : terms_) {
        if (t.key[block] != terms_.front().key[block]) {
            fail(ErrorCode::UnsupportedOnState, "Block '" + blocks_[block].label + "' is not in a definite word.");
        }
        Term u{{}, t.amp};
        size_t j = 0;
        for (size_t i = 0; i < blocks_.size(); i++) {
            if (i != block) {
                u.key[j++] = t.key[i];
            }
        }
        out.terms_.push_back(u);
    }
    return out;
}

LogicalState LogicalState::permuted(const std::vector<size_t> &order) const {
    std::vector<BlockLayout> blocks;
    for (size_t i : order) {
        blocks.push_back(blocks_[i]);
    }
    LogicalState out(std::move(blocks));
    for (const auto &t : terms_) {
        Term u{{}, t.amp};
        for (size_t i = 0; i < order.size(); i++) {
            u.key[i] = t.key[order[i]];
        }
        out.terms_.push_back(u);
    }
    return out;
}

double LogicalState::distance(const LogicalState &other) const {
    LogicalState a = *this;
    LogicalState b = other;
    a.canonicalize(0);
    b.canonicalize(0);
    double worst = 0;
    size_t i = 0;
    size_t j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
        if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].key < b.terms_[j].key)) {
            worst = std::max(worst, std::abs(a.terms_[i++].amp));
        } else if (i == a.terms_.size() || b.terms_[j].key < a.terms_[i].key) {
            worst = std::max(worst, std::abs(b.terms_[j++].amp));
        } else {
            worst = std::max(worst, std::abs(a.terms_[i++].amp - b.terms_[j++].amp));
        }
    }
    return worst;
}

LogicalState encode_superposition(
    std::shared_ptr<const CssCode> code, const std::vector<std::pair<uint64_t, Amplitude>> &components,
    const std::string &label, uint64_t budget) {
    BlockLayout layout = code_block(code, label);
    size_t r = layout.invariant_rows.size();
    if (r >= 63 || (uint64_t{1} << r) > budget) {
        fail(ErrorCode::DimensionTooLarge, "C0 has 2^" + std::to_string(r) + " words, over the term budget.");
    }
    RrefResult c0 = row_basis(code->c0_generator.empty() ? BinaryMatrix(0, code->n) : code->c0_generator);
    LogicalState out({layout});
    for (const auto &[u, amp] : components) {
        if (code->k < 64 && (u >> code->k) != 0) {
            fail(ErrorCode::InvalidArgument, "Logical index exceeds 2^k.");
        }
        BitVector shift = code->k ? code->coset_leaders.left_mul(BitVector::from_uint64(u, code->k)) : BitVector(code->n);
        for_each_in_coset(c0.matrix, shift, [&](const BitVector &x, size_t) {
            Key key{};
            key[0] = to_word(x);
            out.add_term(key, amp);
        });
    }
    out.canonicalize();
    out.normalize();
    return out;
}

LogicalState encode_basis(std::shared_ptr<const CssCode> code, uint64_t u, const std::string &label, uint64_t budget) {
    return encode_superposition(code, {{u, 1.0}}, label, budget);
}

LogicalState reference_state(size_t k, uint64_t index, const std::string &label) {
    LogicalState out({reference_block(k, label)});
    Key key{};
    key[0] = index;
    out.add_term(key, 1.0);
    return out;
}

std::vector<MeasurementBranch> measure_block(
    const LogicalState &state, size_t block, Basis basis, const std::vector<uint64_t> &functionals,
    bool normalize_post) {
    if (block >= state.num_blocks()) {
        fail(ErrorCode::InvalidArgument, "Block index out of range.");
    }
    auto evaluate = [&](uint64_t word) {
        uint64_t v = 0;
        for (size_t i = 0; i < functionals.size(); i++) {
            if (std::popcount(word & functionals[i]) & 1) {
                v |= uint64_t{1} << i;
            }
        }
        return v;
    };
    std::vector<MeasurementBranch> out;
    if (basis == Basis::Z) {
        std::map<uint64_t, LogicalState> groups;
        for (const auto &t : state.terms()) {
            auto it = groups.find(t.key[block]);
            if (it == groups.end()) {
                it = groups.emplace(t.key[block], LogicalState(state.blocks())).first;
            }
            it->second.add_term(t.key, t.amp);
        }
        for (auto &[word, post] : groups) {
            MeasurementBranch b;
            b.outcome = word;
            b.functional_values = evaluate(word);
            b.probability = post.norm_squared();
            if (b.probability < 1e-15) {
                continue;
            }
            if (normalize_post) {
                post.normalize();
            }
            b.post_state = std::move(post);
            out.push_back(std::move(b));
        }
        return out;
    }

    size_t n = state.blocks()[block].n;
    WordBasis span;
    for (uint64_t f : functionals) {
        span.insert(f);
    }
    for (const auto &t : state.terms()) {
        span.insert(t.key[block]);
    }
    size_t s = span.rows.size();
    if (s > 20) {
        fail(ErrorCode::DimensionTooLarge, "X measurement would need 2^" + std::to_string(s) + " outcome classes.");
    }
    double amp_scale = std::pow(2.0, -(double)s / 2.0);
    for (uint64_t sigma = 0; sigma < (uint64_t{1} << s); sigma++) {
        // With a reduced basis, placing bit sigma_i at pivot i gives y.a_i = sigma_i.
        uint64_t y = 0;
        for (size_t i = 0; i < s; i++) {
            if ((sigma >> i) & 1) {
                y |= uint64_t{1} << span.pivots[i];
            }
        }
        LogicalState post(state.blocks());
        for (const auto &t : state.terms()) {
            Term u = t;
            u.key[block] = y;
            u.amp *= (std::popcount(t.key[block] & y) & 1) ? -amp_scale : amp_scale;
            post.add_term(u.key, u.amp);
        }
        post.canonicalize();
        MeasurementBranch b;
        b.outcome = y;
        b.multiplicity = n - s < 64 ? uint64_t{1} << (n - s) : 0;
        b.functional_values = evaluate(y);
        b.probability = post.norm_squared();
        if (b.probability < 1e-15) {
            continue;
        }
        if (normalize_post) {
            post.normalize();
        }
        b.post_state = std::move(post);
        out.push_back(std::move(b));
    }
    return out;
}

Amplitude eighth_root(int64_t eighths) {
    static const double h = std::numbers::sqrt2 / 2;
    static const Amplitude roots[8] = {{1, 0}, {h, h}, {0, 1}, {-h, h}, {-1, 0}, {-h, -h}, {0, -1}, {h, -h}};
    return roots[((eighths % 8) + 8) % 8];
}

Amplitude phase_power(double angle, uint64_t count) {
    double steps = angle / (std::numbers::pi / 4);
    double rounded = std::round(steps);
    if (std::abs(steps - rounded) < 1e-12) {
        int64_t e = ((int64_t)rounded % 8 + 8) % 8;
        return eighth_root((int64_t)((uint64_t)e * (count % 8) % 8));
    }
    return std::polar(1.0, angle * (double)count);
}

}  // namespace cssft
