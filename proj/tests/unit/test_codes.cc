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

#include <gtest/gtest.h>

#include "cssft/codes/certify.h"
#include "cssft/codes/classical_code.h"
#include "cssft/codes/distance.h"
#include "cssft/error.h"

using namespace cssft;

namespace {

template <typename F>
ErrorCode error_of(F &&f) {
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    return ErrorCode::Internal;
}

// Brute-force weight distribution of a row space, counted by the test.
std::vector<uint64_t> brute_distribution(const BinaryMatrix &g) {
    std::vector<uint64_t> out(g.num_cols() + 1);
    size_t r = g.num_rows();
    for (uint64_t mask = 0; mask < (uint64_t{1} << r); mask++) {
        BitVector v(g.num_cols());
        for (size_t i = 0; i < r; i++) {
            if ((mask >> i) & 1) {
                v ^= g.row(i);
            }
        }
        out[v.weight()]++;
    }
    return out;
}

}  // namespace

TEST(Bch, KnownParameters) {
    struct Case {
        int m, delta;
        size_t n, k, d;
    };
    for (auto c : std::vector<Case>{{3, 3, 7, 4, 3}, {4, 3, 15, 11, 3}, {4, 5, 15, 7, 5}, {5, 5, 31, 21, 5},
                                    {5, 7, 31, 16, 7}, {6, 5, 63, 51, 5}, {7, 3, 127, 120, 3}}) {
        auto code = bch_code(c.m, c.delta);
        EXPECT_EQ(code.n, c.n) << c.m << "," << c.delta;
        EXPECT_EQ(code.k, c.k) << c.m << "," << c.delta;
        EXPECT_GE(code.d, c.d);
        EXPECT_TRUE(code.generator.mul_transpose(code.check).is_zero());
    }
}

TEST(Bch, ExactDistanceOfSmallCodes) {
    auto c = bch_code(4, 5);
    EXPECT_EQ(c.distance_kind, DistanceKind::Exact);
    EXPECT_EQ(c.d, 5u);
    EXPECT_EQ(c.w, 8);
}

TEST(Bch, RejectsBadParameters) {
    EXPECT_EQ(error_of([] { bch_code(2, 3); }), ErrorCode::InvalidParameters);
    EXPECT_EQ(error_of([] { bch_code(4, 4); }), ErrorCode::InvalidParameters);
    EXPECT_EQ(error_of([] { bch_code(4, 17); }), ErrorCode::InvalidParameters);
}

TEST(ReedMuller, PuncturedParameters) {
    auto r1 = punctured_reed_muller(1, 4);
    EXPECT_EQ(r1.n, 15u);
    EXPECT_EQ(r1.k, 5u);
    EXPECT_EQ(r1.d, 7u);
    auto r2 = punctured_reed_muller(2, 4);
    EXPECT_EQ(r2.k, 11u);
    EXPECT_EQ(r2.d, 3u);
}

TEST(QuadraticResidue, ExtendedGolay) {
    auto g = extended_qr_code(23);
    EXPECT_EQ(g.n, 24u);
    EXPECT_EQ(g.k, 12u);
    EXPECT_EQ(g.d, 8u);
    auto dist = brute_distribution(g.generator);
    EXPECT_EQ(dist[0], 1u);
    EXPECT_EQ(dist[8], 759u);
    EXPECT_EQ(dist[12], 2576u);
    EXPECT_EQ(dist[16], 759u);
    EXPECT_EQ(dist[24], 1u);
    EXPECT_TRUE(is_doubly_even(g.generator));
}

TEST(QuadraticResidue, RejectsUnsupportedPrimes) {
    EXPECT_EQ(error_of([] { extended_qr_code(13); }), ErrorCode::InvalidParameters);
    EXPECT_EQ(error_of([] { extended_qr_code(21); }), ErrorCode::InvalidParameters);
}

TEST(Distance, MacWilliamsMatchesBruteForce) {
    auto c = bch_code(4, 5);
    auto direct = brute_distribution(c.generator);
    auto dual = brute_distribution(c.check);
    std::vector<BigCount> b(dual.begin(), dual.end());
    auto transformed = macwilliams_transform(b, c.n);
    ASSERT_EQ(transformed.size(), direct.size());
    for (size_t i = 0; i < direct.size(); i++) {
        EXPECT_EQ(transformed[i], BigCount(direct[i])) << "weight " << i;
    }
    auto exact = exact_weight_distribution(c.generator, c.check);
    ASSERT_TRUE(exact.has_value());
    EXPECT_EQ(*exact, transformed);
}

TEST(Load, ParsesCheckMatrixText) {
    auto c = parse_code_text("# n: 7\n# kind: check\n1010101\n0110011\n0001111\n");
    EXPECT_EQ(c.n, 7u);
    EXPECT_EQ(c.k, 4u);
    EXPECT_EQ(c.d, 3u);
    auto again = parse_code_text(format_code_text(c));
    EXPECT_EQ(again.k, 4u);
    EXPECT_TRUE(again.generator.mul_transpose(c.check).is_zero());
}

TEST(Load, ParseErrors) {
    EXPECT_EQ(error_of([] { parse_code_text("# n: 7\n"); }), ErrorCode::Parse);
    EXPECT_EQ(error_of([] { parse_code_text("# n: 6\n1010101\n"); }), ErrorCode::Parse);
    EXPECT_EQ(error_of([] { parse_code_text("1010x01\n"); }), ErrorCode::Parse);
    EXPECT_EQ(error_of([] { load_code("/nonexistent/code.txt"); }), ErrorCode::Io);
}

TEST(Certify, SteaneDualIsDoublyEven) {
    auto cert = certify(bch_code(3, 3));
    EXPECT_TRUE(cert.contains_dual);
    EXPECT_TRUE(cert.dual_doubly_even);
    EXPECT_EQ(cert.sample_violations, 0u);
}

TEST(Certify, BchConjectureSmallFields) {
    for (int m = 4; m <= 5; m++) {
        auto r = verify_bch_dual_conjecture(m, 512);
        EXPECT_TRUE(r.holds) << m;
        EXPECT_FALSE(r.entries.empty());
        for (const auto &e : r.entries) {
            if (e.contains_dual) {
                EXPECT_TRUE(e.dual_doubly_even);
            }
        }
    }
    EXPECT_EQ(error_of([] { verify_bch_dual_conjecture(9); }), ErrorCode::InvalidParameters);
}
