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

#include "cssft/codes/distance.h"

namespace cssft {

namespace {

BigCount binomial(size_t n, size_t k) {
    if (k > n) {
        return 0;
    }
    BigCount r = 1;
    for (size_t i = 0; i < k; i++) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

std::vector<BigCount> to_big(const std::vector<uint64_t> &v) {
    std::vector<BigCount> out;
    for (uint64_t x : v) {
        out.emplace_back(x);
    }
    return out;
}

}  // namespace

std::vector<BigCount> macwilliams_transform(const std::vector<BigCount> &dual_distribution, size_t n) {
    BigCount dual_size = 0;
    for (const auto &b : dual_distribution) {
        dual_size += b;
    }
    std::vector<std::vector<BigCount>> binom(n + 1, std::vector<BigCount>(n + 1));
    for (size_t a = 0; a <= n; a++) {
        for (size_t b = 0; b <= a; b++) {
            binom[a][b] = binomial(a, b);
        }
    }
    std::vector<BigCount> out(n + 1);
    for (size_t j = 0; j <= n; j++) {
        BigCount acc = 0;
        for (size_t i = 0; i <= n; i++) {
            if (dual_distribution[i] == 0) {
                continue;
            }
            // Krawtchouk polynomial K_j(i).
            BigCount k = 0;
            for (size_t s = 0; s <= j && s <= i; s++) {
                if (j - s > n - i) {
                    continue;
                }
                BigCount term = binom[i][s] * binom[n - i][j - s];
                if (s & 1) {
                    k -= term;
                } else {
                    k += term;
                }
            }
            acc += dual_distribution[i] * k;
        }
        out[j] = acc / dual_size;
    }
    return out;
}

std::optional<std::vector<BigCount>> exact_weight_distribution(
    const BinaryMatrix &generator, const BinaryMatrix &check, size_t max_dim) {
    size_t n = generator.num_cols() ? generator.num_cols() : check.num_cols();
    size_t k = rank(generator);
    if (k <= max_dim) {
        std::vector<uint64_t> d = weight_distribution(generator.empty() ? BinaryMatrix(0, n) : generator, max_dim);
        return to_big(d);
    }
    size_t r = rank(check);
    if (r <= max_dim && r + k == n) {
        std::vector<uint64_t> dual = weight_distribution(check, max_dim);
        return macwilliams_transform(to_big(dual), n);
    }
    return std::nullopt;
}

std::optional<size_t> exact_min_distance(const BinaryMatrix &generator, const BinaryMatrix &check, size_t max_dim) {
    auto dist = exact_weight_distribution(generator, check, max_dim);
    if (!dist.has_value()) {
        return std::nullopt;
    }
    for (size_t w = 1; w < dist->size(); w++) {
        if ((*dist)[w] != 0) {
            return w;
        }
    }
    return 0;
}

}  // namespace cssft
