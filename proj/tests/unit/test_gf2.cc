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

#include <bit>
#include <random>

#include "cssft/error.h"
#include "cssft/gf2/binary_matrix.h"
#include "cssft/gf2/enumerate.h"

using namespace cssft;

namespace {

// Rows packed into uint64 words, column j = bit j. Independent elimination.
size_t oracle_rank(std::vector<uint64_t> rows) {
    size_t r = 0;
    for (int col = 0; col < 64 && r < rows.size(); col++) {
        uint64_t bit = uint64_t{1} << col;
        size_t pivot = r;
        while (pivot < rows.size() && !(rows[pivot] & bit)) {
            pivot++;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[r], rows[pivot]);
        for (size_t i = 0; i < rows.size(); i++) {
            if (i != r && (rows[i] & bit)) {
                rows[i] ^= rows[r];
            }
        }
        r++;
    }
    return r;
}

std::vector<uint64_t> packed(const BinaryMatrix &m) {
    std::vector<uint64_t> out;
    for (const auto &row : m.rows()) {
        out.push_back(row.to_uint64());
    }
    return out;
}

BinaryMatrix random_matrix(std::mt19937_64 &rng, size_t rows, size_t cols, double density) {
    std::bernoulli_distribution bit(density);
    BinaryMatrix m(rows, cols);
    std::vector<BitVector> rs;
    for (size_t i = 0; i < rows; i++) {
        BitVector v(cols);
        for (size_t j = 0; j < cols; j++) {
            if (bit(rng)) {
                v.set(j, true);
            }
        }
        rs.push_back(v);
    }
    return BinaryMatrix(rs, cols);
}

}  // namespace

TEST(BitVector, StringRoundTrip) {
    auto v = BitVector::from_string("1011001");
    EXPECT_EQ(v.size(), 7u);
    EXPECT_EQ(v.weight(), 4u);
    EXPECT_EQ(v.str(), "1011001");
    EXPECT_EQ(v.to_uint64(), 0b1001101u);
    EXPECT_EQ(BitVector::from_uint64(0b1001101, 7), v);
}

TEST(BitVector, DotAndOverlapAcrossWords) {
    BitVector a = BitVector::ones(130);
    BitVector b = BitVector::unit(130, 129) ^ BitVector::unit(130, 3) ^ BitVector::unit(130, 64);
    EXPECT_EQ(a.overlap(b), 3u);
    EXPECT_TRUE(a.dot(b));
    EXPECT_EQ(b.first_one(), 3u);
    EXPECT_EQ(b.without(64).weight(), 2u);
    EXPECT_EQ(b.without(64).size(), 129u);
}

TEST(BinaryMatrix, MultiplicationConventions) {
    auto m = BinaryMatrix::from_strings({"110", "011"});
    auto u = BitVector::from_string("11");
    EXPECT_EQ(m.left_mul(u).str(), "101");
    EXPECT_EQ(m.right_mul(BitVector::from_string("100")).str(), "10");
    EXPECT_TRUE((m * m.transposed()) == m.mul_transpose(m));
    EXPECT_EQ(m.mul_transpose(m).str(), BinaryMatrix::from_strings({"01", "10"}).str());
}

TEST(Gf2, HammingNullSpace) {
    auto h = BinaryMatrix::from_strings({"1010101", "0110011", "0001111"});
    EXPECT_EQ(rank(h), 3u);
    auto g = null_space(h);
    EXPECT_EQ(g.num_rows(), 4u);
    EXPECT_TRUE(h.mul_transpose(g).is_zero());
    auto dist = weight_distribution(g);
    std::vector<uint64_t> expected = {1, 0, 0, 7, 7, 0, 0, 1};
    EXPECT_EQ(dist, expected);
    EXPECT_TRUE(is_self_orthogonal(h));
    EXPECT_FALSE(is_self_orthogonal(g));
}

TEST(Gf2, InverseOfSingularMatrixIsEmpty) {
    EXPECT_FALSE(inverse(BinaryMatrix::from_strings({"11", "11"})).has_value());
    auto inv = inverse(BinaryMatrix::from_strings({"11", "01"}));
    ASSERT_TRUE(inv.has_value());
    EXPECT_EQ(inv->str(), BinaryMatrix::from_strings({"11", "01"}).str());
}

TEST(Gf2, CosetRepresentative) {
    auto h = BinaryMatrix::from_strings({"1010101", "0110011", "0001111"});
    auto rep = min_weight_coset_representative(h, BitVector::ones(7));
    EXPECT_TRUE(rep.certified);
    EXPECT_EQ(rep.vector.weight(), 3u);
    size_t visited = 0;
    for_each_in_coset(h, BitVector::ones(7), [&](const BitVector &v, size_t) {
        EXPECT_TRUE(v.weight() == 3 || v.weight() == 7);
        visited++;
    });
    EXPECT_EQ(visited, 8u);
}

TEST(Gf2, EnumerationLimit) {
    std::mt19937_64 rng(7);
    auto m = random_matrix(rng, 40, 60, 0.5);
    try {
        weight_distribution(m, 10);
        FAIL() << "expected DimensionTooLarge";
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::DimensionTooLarge);
    }
}

// Invariants on 1000 random matrices, rank checked against the packed oracle.
TEST(Gf2Property, ThousandRandomMatrices) {
    std::mt19937_64 rng(20261016);
    std::uniform_int_distribution<size_t> rows_dist(1, 40), cols_dist(1, 64);
    std::uniform_real_distribution<double> density(0.05, 0.95);
    for (int trial = 0; trial < 1000; trial++) {
        size_t r = rows_dist(rng), c = cols_dist(rng);
        auto m = random_matrix(rng, r, c, density(rng));
        size_t rk = rank(m);
        ASSERT_EQ(rk, oracle_rank(packed(m))) << "trial " << trial;
        ASSERT_EQ(rank(m.transposed()), rk);
        ASSERT_TRUE(m.transposed().transposed() == m);

        auto rr = rref(m);
        ASSERT_EQ(rr.rank, rk);
        ASSERT_EQ(rr.pivots.size(), rk);
        for (size_t i = 0; i + 1 < rr.pivots.size(); i++) {
            ASSERT_LT(rr.pivots[i], rr.pivots[i + 1]);
        }
        ASSERT_TRUE(same_row_space(m, row_basis(m).matrix));

        auto ns = null_space(m);
        ASSERT_EQ(ns.num_rows(), c - rk);
        ASSERT_EQ(rank(ns), c - rk);
        if (ns.num_rows()) {
            ASSERT_TRUE(m.mul_transpose(ns).is_zero());
        }

        // A random combination of rows lies in the row space and its
        // coordinates reproduce it.
        BitVector sel(r);
        for (size_t i = 0; i < r; i++) {
            if (rng() & 1) {
                sel.set(i, true);
            }
        }
        BitVector combo = m.left_mul(sel);
        auto basis = row_basis(m);
        ASSERT_TRUE(reduce(basis, combo).is_zero());
        auto coords = coordinates(basis, combo);
        ASSERT_TRUE(coords.has_value());
        ASSERT_EQ(basis.matrix.left_mul(*coords), combo);

        if (r == c) {
            auto inv = inverse(m);
            ASSERT_EQ(inv.has_value(), rk == c);
            if (inv) {
                ASSERT_TRUE((*inv * m) == BinaryMatrix::identity(c));
            }
        }
    }
}
