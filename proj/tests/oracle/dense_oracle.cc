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

#include "dense_oracle.h"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace oracle {

DenseState::DenseState(int qubits) : qubits_(qubits), amps_(size_t{1} << qubits) {
    if (qubits > 24) {
        throw std::invalid_argument("dense oracle limited to 24 qubits");
    }
}

void DenseState::x(int q) {
    size_t bit = size_t{1} << q;
    for (size_t i = 0; i < amps_.size(); i++) {
        if (!(i & bit)) {
            std::swap(amps_[i], amps_[i | bit]);
        }
    }
}

void DenseState::z(int q) {
    phase(q, M_PI);
}

void DenseState::h(int q) {
    size_t bit = size_t{1} << q;
    double s = 1 / std::sqrt(2.0);
    for (size_t i = 0; i < amps_.size(); i++) {
        if (!(i & bit)) {
            Complex a = amps_[i];
            Complex b = amps_[i | bit];
            amps_[i] = s * (a + b);
            amps_[i | bit] = s * (a - b);
        }
    }
}

void DenseState::phase(int q, double angle) {
    Complex f = std::polar(1.0, angle);
    size_t bit = size_t{1} << q;
    for (size_t i = 0; i < amps_.size(); i++) {
        if (i & bit) {
            amps_[i] *= f;
        }
    }
}

void DenseState::cx(int c, int t) {
    size_t cb = size_t{1} << c;
    size_t tb = size_t{1} << t;
    for (size_t i = 0; i < amps_.size(); i++) {
        if ((i & cb) && !(i & tb)) {
            std::swap(amps_[i], amps_[i | tb]);
        }
    }
}

void DenseState::cz(int a, int b) {
    cphase(a, b, M_PI);
}

void DenseState::cphase(int a, int b, double angle) {
    Complex f = std::polar(1.0, angle);
    size_t m = (size_t{1} << a) | (size_t{1} << b);
    for (size_t i = 0; i < amps_.size(); i++) {
        if ((i & m) == m) {
            amps_[i] *= f;
        }
    }
}

void DenseState::ccphase(int a, int b, int c, double angle) {
    Complex f = std::polar(1.0, angle);
    size_t m = (size_t{1} << a) | (size_t{1} << b) | (size_t{1} << c);
    for (size_t i = 0; i < amps_.size(); i++) {
        if ((i & m) == m) {
            amps_[i] *= f;
        }
    }
}

void DenseState::ccz(int a, int b, int c) {
    ccphase(a, b, c, M_PI);
}

double DenseState::norm_squared() const {
    double s = 0;
    for (const auto &a : amps_) {
        s += std::norm(a);
    }
    return s;
}

Complex DenseState::inner(const DenseState &other) const {
    Complex s = 0;
    for (size_t i = 0; i < amps_.size(); i++) {
        s += std::conj(amps_[i]) * other.amps_[i];
    }
    return s;
}

std::vector<uint64_t> DenseCode::c0_words() const {
    std::vector<uint64_t> out;
    size_t g = c0_generators.size();
    for (uint64_t mask = 0; mask < (uint64_t{1} << g); mask++) {
        uint64_t w = 0;
        for (size_t i = 0; i < g; i++) {
            if ((mask >> i) & 1) {
                w ^= c0_generators[i];
            }
        }
        out.push_back(w);
    }
    return out;
}

std::vector<Complex> DenseCode::encoded(uint64_t u) const {
    std::vector<Complex> v(size_t{1} << n);
    uint64_t shift = 0;
    for (int j = 0; j < k; j++) {
        if ((u >> j) & 1) {
            shift ^= logical_x[j];
        }
    }
    auto words = c0_words();
    double a = 1 / std::sqrt(static_cast<double>(words.size()));
    for (uint64_t w : words) {
        v[w ^ shift] += a;
    }
    return v;
}

namespace {

uint64_t word(const char *bits) {
    uint64_t w = 0;
    for (int i = 0; bits[i]; i++) {
        if (bits[i] == '1') {
            w |= uint64_t{1} << i;
        }
    }
    return w;
}

}  // namespace

DenseCode steane_code() {
    // C0 is the dual of the [7,4,3] Hamming code: the rows of its check
    // matrix, whose columns are 1..7 in binary.
    DenseCode c;
    c.n = 7;
    c.k = 1;
    c.c0_generators = {word("1010101"), word("0110011"), word("0001111")};
    c.logical_x = {word("1111111")};
    return c;
}

DenseCode reed_muller15_code() {
    // Punctured RM(1,4): C0 is the even subcode spanned by the four
    // coordinate functions evaluated on the nonzero points of GF(2)^4.
    DenseCode c;
    c.n = 15;
    c.k = 1;
    for (int b = 0; b < 4; b++) {
        uint64_t w = 0;
        for (int x = 1; x < 16; x++) {
            if ((x >> b) & 1) {
                w |= uint64_t{1} << (x - 1);
            }
        }
        c.c0_generators.push_back(w);
    }
    c.logical_x = {(uint64_t{1} << 15) - 1};
    return c;
}

Matrix logical_matrix(const std::vector<DenseCode> &blocks, const std::function<void(DenseState &)> &circuit,
                      double *max_norm_deviation) {
    int total_qubits = 0;
    int total_k = 0;
    for (const auto &b : blocks) {
        total_qubits += b.n;
        total_k += b.k;
    }
    size_t dim = size_t{1} << total_k;
    auto product = [&](uint64_t index) {
        DenseState s(total_qubits);
        s.amps().assign(s.amps().size(), 0);
        // Tensor product of the per-block encodings.
        std::vector<std::vector<Complex>> parts;
        int shift = 0;
        for (const auto &b : blocks) {
            parts.push_back(b.encoded((index >> shift) & ((uint64_t{1} << b.k) - 1)));
            shift += b.k;
        }
        std::vector<Complex> acc = {1.0};
        int acc_bits = 0;
        for (size_t i = 0; i < blocks.size(); i++) {
            std::vector<Complex> next(acc.size() << blocks[i].n);
            for (size_t hi = 0; hi < parts[i].size(); hi++) {
                if (parts[i][hi] == 0.0) {
                    continue;
                }
                for (size_t lo = 0; lo < acc.size(); lo++) {
                    next[(hi << acc_bits) | lo] = parts[i][hi] * acc[lo];
                }
            }
            acc = std::move(next);
            acc_bits += blocks[i].n;
        }
        s.amps() = std::move(acc);
        return s;
    };
    std::vector<DenseState> basis;
    for (uint64_t i = 0; i < dim; i++) {
        basis.push_back(product(i));
    }
    Matrix m(dim, std::vector<Complex>(dim));
    double worst = 0;
    for (uint64_t in = 0; in < dim; in++) {
        DenseState s = basis[in];
        circuit(s);
        worst = std::max(worst, std::abs(s.norm_squared() - 1));
        for (uint64_t out = 0; out < dim; out++) {
            m[out][in] = basis[out].inner(s);
        }
    }
    if (max_norm_deviation) {
        *max_norm_deviation = worst;
    }
    return m;
}

double max_abs_difference(const Matrix &a, const Matrix &b) {
    if (a.size() != b.size()) {
        return INFINITY;
    }
    double d = 0;
    for (size_t i = 0; i < a.size(); i++) {
        if (a[i].size() != b[i].size()) {
            return INFINITY;
        }
        for (size_t j = 0; j < a[i].size(); j++) {
            d = std::max(d, std::abs(a[i][j] - b[i][j]));
        }
    }
    return d;
}

}  // namespace oracle
