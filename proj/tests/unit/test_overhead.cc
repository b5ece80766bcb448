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

#include <cmath>

#include "cssft/error.h"
#include "cssft/overhead/overhead.h"
#include "cssft/overhead/table1.h"

using namespace cssft;

namespace {

// Independent evaluation of the failure model, term by term.
struct OracleModel {
    int n, k, d;
    double w;
    int t() const {
        return (d - 1) / 2;
    }
    int r() const {
        return t() + 1;
    }
    double g() const {
        return n * (4.0 * r() + 1);
    }
    double s() const {
        return n * ((w + 2) * (n - k) / 2 + (d + 2.0) * k + n * (2 + r() / 2.0));
    }
    double P(double gamma) const {
        double eps = gamma / n;
        double q = 2 * gamma / 3 + (s() / g()) * (2 * eps / 3);
        double G = g();
        double sum = 0;
        for (int i = t() + 1; i <= G; i++) {
            double lt = std::lgamma(G + 1) - std::lgamma(i + 1) - std::lgamma(G - i + 1) + i * std::log(q);
            double term = std::exp(lt);
            sum += term;
            if (term < sum * 1e-20) {
                break;
            }
        }
        return 2 * sum;
    }
};

OverheadParams params(int n, int k, int d, double w, double gamma) {
    OverheadParams p;
    p.n = n;
    p.k = k;
    p.d = d;
    p.w = w;
    p.gamma = gamma;
    return p;
}

}  // namespace

TEST(Overhead, OpportunityCounts) {
    auto e = error_opportunities(params(127, 29, 15, 64, 2e-5));
    EXPECT_EQ(e.g, 4191u);
    EXPECT_DOUBLE_EQ(e.s, 570103.0);
    OracleModel o{127, 29, 15, 64};
    EXPECT_DOUBLE_EQ(o.g(), 4191.0);
    EXPECT_DOUBLE_EQ(o.s(), 570103.0);
}

TEST(Overhead, VerificationCnotCount) {
    // w(n-k)/2 + (d+1)k = 64*49 + 16*29.
    auto r = evaluate_overhead(params(127, 29, 15, 64, 2e-5));
    EXPECT_DOUBLE_EQ(r.verification_cx, 3600.0);
    EXPECT_EQ(r.g, 4191u);
}

TEST(Overhead, FailureProbabilityMatchesOracle) {
    for (auto [n, k, d, w] : std::vector<std::tuple<int, int, int, double>>{
             {127, 29, 15, 64}, {63, 27, 7, 32}, {47, 1, 11, 12}, {255, 143, 15, 128}}) {
        OracleModel o{n, k, d, w};
        for (double gamma : {1e-6, 5e-6, 2e-5, 1e-4}) {
            double ours = failure_probability(params(n, k, d, w, gamma));
            double ref = o.P(gamma);
            EXPECT_NEAR(ours / ref, 1, 1e-9) << n << " " << gamma;
        }
    }
}

TEST(Overhead, ReferenceFailureProbability) {
    double P = failure_probability(params(127, 29, 15, 64, 2e-5));
    EXPECT_GE(P, 1e-12);
    EXPECT_LE(P, 2.5e-12);
}

TEST(Overhead, PlimAndScaleUp) {
    EXPECT_DOUBLE_EQ(plim_kq(29, DEFAULT_KQ), 29 / (8 * 2.15e12));
    EXPECT_DOUBLE_EQ(plim(29, 1e6, 2.15e6), plim_kq(29, 2.15e12));
    auto s = scale_up(127, 29);
    EXPECT_DOUBLE_EQ(s.asymptotic, (5.0 * 127 + 4) / 29);
    auto finite = scale_up(127, 29, 1000.0);
    EXPECT_GE(finite.S, s.asymptotic);
}

TEST(Overhead, GammaMaxSolvesThreshold) {
    auto p = params(127, 29, 15, 64, 0);
    auto gm = solve_gamma_max(p);
    EXPECT_FALSE(gm.capped);
    EXPECT_NEAR(gm.P / gm.plim, 1, 1e-4);
    EXPECT_NEAR(gm.epsilon_max, gm.gamma_max / 127, 1e-15);
    p.gamma = gm.gamma_max * 1.01;
    EXPECT_GT(failure_probability(p), gm.plim);
    p.gamma = gm.gamma_max * 0.99;
    EXPECT_LT(failure_probability(p), gm.plim);
}

TEST(Overhead, InvalidParameters) {
    auto bad = params(127, 200, 15, 64, 1e-5);
    try {
        failure_probability(bad);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidParameters);
    }
    auto neg = params(127, 29, 15, 64, -1);
    EXPECT_THROW(failure_probability(neg), Error);
}

TEST(Overhead, AncillaSufficiency) {
    auto p = params(127, 29, 15, 64, 2e-5);
    auto a = ancilla_sufficiency(p, 2e-5);
    EXPECT_NEAR(a.closed_form, 32 * 127 * 8 * 2e-5 / 3, 1e-12);
    EXPECT_GT(a.full_sum, a.closed_form);
    EXPECT_NEAR(a.full_sum, 0.25, 0.25 * 0.35);
}

TEST(Overhead, RotationBaseCase) {
    auto r = rotation_base_case();
    EXPECT_NEAR(r.cos_phi, 0.6, 1e-12);
    EXPECT_NEAR(std::cos(r.phi), r.cos_phi, 1e-12);
    auto q = rotation_synthesis(0.3);
    EXPECT_NEAR(std::cos(q.phi), q.cos_phi, 1e-12);
}

TEST(Overhead, TableAgainstPublishedRows) {
    auto rows = overhead_table(reference_table_codes());
    ASSERT_EQ(rows.size(), 7u);
    for (const auto &row : rows) {
        ASSERT_TRUE(row.feasible) << row.code.label();
        auto cmp = compare_with_published(row);
        EXPECT_TRUE(cmp.found) << row.code.label();
        EXPECT_TRUE(cmp.passed) << row.code.label();
        ASSERT_TRUE(row.round_trip.has_value());
        EXPECT_LE(*row.round_trip, 1e-6);
    }
    auto csv = table_csv(rows);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "code,P,gamma,epsilon,(5n+4)/k");
}

TEST(Overhead, P1Discrepancy) {
    for (const auto &c : p1_published_checks()) {
        EXPECT_TRUE(c.within_tolerance) << c.n;
        EXPECT_TRUE(c.discrepancy) << c.n;
    }
}

// P grows with gamma and with epsilon over a 10 x 10 grid.
TEST(OverheadProperty, MonotoneOnGrid) {
    const int N = 10;
    double P[N][N];
    for (int i = 0; i < N; i++) {
        for (int j = 0; j < N; j++) {
            auto p = params(127, 29, 15, 64, 1e-6 * std::pow(1.6, i));
            p.epsilon = 1e-8 * std::pow(1.8, j);
            P[i][j] = failure_probability(p);
            ASSERT_TRUE(std::isfinite(P[i][j]));
            ASSERT_GE(P[i][j], 0);
        }
    }
    for (int i = 0; i < N; i++) {
        for (int j = 0; j < N; j++) {
            if (i + 1 < N) {
                EXPECT_LT(P[i][j], P[i + 1][j]) << i << "," << j;
            }
            if (j + 1 < N) {
                EXPECT_LT(P[i][j], P[i][j + 1]) << i << "," << j;
            }
        }
    }
}
