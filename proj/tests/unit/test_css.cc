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

#include "cssft/css/css_code.h"
#include "cssft/error.h"
#include "cssft/gf2/enumerate.h"

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

void expect_valid_css(const CssCode &c) {
    // X and Z stabilizers commute, and both commute with every logical.
    EXPECT_TRUE(c.stabilizer_x.mul_transpose(c.stabilizer_z).is_zero());
    EXPECT_EQ(c.stabilizer_x.num_rows() + c.stabilizer_z.num_rows() + c.k, c.n);
    EXPECT_EQ(rank(c.stabilizer_x), c.stabilizer_x.num_rows());
    EXPECT_EQ(rank(c.stabilizer_z), c.stabilizer_z.num_rows());
    EXPECT_EQ(c.coset_leaders.num_rows(), c.k);
    if (c.k) {
        EXPECT_TRUE(c.coset_leaders.mul_transpose(c.stabilizer_z).is_zero());
        EXPECT_EQ(rank(c.c0_generator.stacked(c.coset_leaders)), c.c0_generator.num_rows() + c.k);
    }
}

}  // namespace

TEST(Css, SteaneFromHamming) {
    CssCode c = css_from_classical(bch_code(3, 3));
    EXPECT_EQ(c.label(), "[[7,1,3]]");
    expect_valid_css(c);
    auto cond = check_lemma_conditions(c);
    EXPECT_TRUE(cond.lemma2);
    EXPECT_TRUE(cond.lemma3);
    EXPECT_TRUE(cond.lemma4);
    EXPECT_TRUE(cond.ddt_identity);
    EXPECT_TRUE(c.leaders_certified);
    EXPECT_EQ(c.coset_leaders.row(0).weight(), 3u);
    EXPECT_EQ(quantum_distance(c), std::optional<size_t>(3));
}

TEST(Css, Hamming15) {
    CssCode c = css_from_classical(bch_code(4, 3));
    EXPECT_EQ(c.label(), "[[15,7,3]]");
    expect_valid_css(c);
    EXPECT_TRUE(check_lemma_conditions(c).lemma4);
}

TEST(Css, QuantumReedMuller) {
    CssCode c = quantum_reed_muller(4);
    EXPECT_EQ(c.n, 15u);
    EXPECT_EQ(c.k, 1u);
    EXPECT_EQ(c.d, 3u);
    expect_valid_css(c);
    for (const auto &row : c.c0_generator.rows()) {
        EXPECT_EQ(row.weight() % 8, 0u);
    }
}

TEST(Css, NotDualContaining) {
    EXPECT_EQ(error_of([] { css_from_classical(bch_code(4, 5)); }), ErrorCode::NotDualContaining);
}

TEST(Css, DeriveSmallerCode) {
    CssCode golay = css_from_classical(extended_qr_code(23));
    EXPECT_EQ(golay.label(), "[[24,0,8]]");
    CssCode smaller = derive_smaller_code(golay, 0);
    EXPECT_EQ(smaller.n, 23u);
    EXPECT_EQ(smaller.k, 1u);
    expect_valid_css(smaller);
    EXPECT_EQ(error_of([&] { derive_smaller_code(golay, 99); }), ErrorCode::InvalidArgument);
}

TEST(Css, ExtendedHammingDerivesSteane) {
    CssCode e8 = css_from_classical(extended_qr_code(7));
    EXPECT_EQ(e8.label(), "[[8,0,4]]");
    CssCode s = derive_smaller_code(e8, 0);
    EXPECT_EQ(s.n, 7u);
    EXPECT_EQ(s.k, 1u);
    EXPECT_EQ(quantum_distance(s), std::optional<size_t>(3));
}
