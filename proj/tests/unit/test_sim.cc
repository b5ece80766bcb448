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
#include <random>

#include "cssft/error.h"
#include "cssft/registry.h"
#include "cssft/sim/lemmas.h"
#include "dense_oracle.h"

using namespace cssft;

namespace {

std::shared_ptr<const CssCode> registry_code(const std::string &name) {
    static std::map<std::string, std::shared_ptr<const CssCode>> cache;
    auto it = cache.find(name);
    if (it == cache.end()) {
        it = cache.emplace(name, std::make_shared<const CssCode>(build_registry_code(name))).first;
    }
    return it->second;
}

ComplexMatrix derived(const std::vector<std::shared_ptr<const CssCode>> &codes, const std::vector<BitwiseGate> &gates) {
    auto r = derive_logical_action(codes, gates);
    EXPECT_LT(r.max_norm_deviation, 1e-12);
    return r.derived;
}

template <typename F>
ErrorCode error_of(F &&f) {
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    return ErrorCode::Internal;
}

}  // namespace

// Logical matrices from the library against the dense state-vector oracle,
// which builds the Steane code from the literal Hamming check matrix.
TEST(DenseOracle, SteaneBitwiseH) {
    auto steane = registry_code("steane7");
    auto o = oracle::steane_code();
    auto expected = oracle::logical_matrix({o}, [](oracle::DenseState &s) {
        for (int q = 0; q < 7; q++) {
            s.h(q);
        }
    });
    EXPECT_LT(oracle::max_abs_difference(derived({steane}, {BitwiseGate::h_all(0)}), expected), 1e-9);
    EXPECT_NEAR(std::abs(expected[1][1] + 1.0 / std::sqrt(2.0)), 0, 1e-12);
}

TEST(DenseOracle, SteaneBitwiseCX) {
    auto steane = registry_code("steane7");
    auto o = oracle::steane_code();
    double norm_dev = 1;
    auto expected = oracle::logical_matrix(
        {o, o},
        [](oracle::DenseState &s) {
            for (int q = 0; q < 7; q++) {
                s.cx(q, 7 + q);
            }
        },
        &norm_dev);
    EXPECT_LT(norm_dev, 1e-12);
    EXPECT_LT(oracle::max_abs_difference(derived({steane, steane}, {BitwiseGate::cx(0, 1)}), expected), 1e-9);
    // CX on logical basis |u,v> -> |u, u+v>.
    EXPECT_NEAR(std::abs(expected[3][1]), 1, 1e-12);
}

TEST(DenseOracle, SteaneBitwisePhase) {
    auto steane = registry_code("steane7");
    auto o = oracle::steane_code();
    auto expected = oracle::logical_matrix({o}, [](oracle::DenseState &s) {
        for (int q = 0; q < 7; q++) {
            s.phase(q, M_PI / 2);
        }
    });
    EXPECT_LT(oracle::max_abs_difference(derived({steane}, {BitwiseGate::phase(0, M_PI / 2)}), expected), 1e-9);
    // Odd-weight coset: weights 3 and 7, both -i.
    EXPECT_NEAR(std::abs(expected[1][1] - std::complex<double>(0, -1)), 0, 1e-12);
}

TEST(DenseOracle, SteaneBitwiseCZ) {
    auto steane = registry_code("steane7");
    auto o = oracle::steane_code();
    auto expected = oracle::logical_matrix({o, o}, [](oracle::DenseState &s) {
        for (int q = 0; q < 7; q++) {
            s.cz(q, 7 + q);
        }
    });
    EXPECT_LT(oracle::max_abs_difference(derived({steane, steane}, {BitwiseGate::cz(0, 1)}), expected), 1e-9);
}

TEST(DenseOracle, ReedMullerBitwiseT) {
    auto rm = registry_code("rm15");
    auto o = oracle::reed_muller15_code();
    auto expected = oracle::logical_matrix({o}, [](oracle::DenseState &s) {
        for (int q = 0; q < 15; q++) {
            s.phase(q, M_PI / 4);
        }
    });
    EXPECT_LT(oracle::max_abs_difference(derived({rm}, {BitwiseGate::phase(0, M_PI / 4)}), expected), 1e-9);
    EXPECT_NEAR(std::abs(expected[1][1] - std::polar(1.0, -M_PI / 4)), 0, 1e-12);
}

TEST(Lemmas, SteaneLemmas234) {
    auto steane = registry_code("steane7");
    for (auto report : {verify_lemma2(steane), verify_lemma3(steane), verify_lemma4(steane)}) {
        EXPECT_TRUE(report.passed) << report.lemma;
        for (const auto &c : report.checks) {
            EXPECT_LT(c.report.max_deviation, 1e-9) << c.name;
            EXPECT_LT(c.report.max_norm_deviation, 1e-12) << c.name;
        }
    }
}

TEST(Lemmas, Hamming15Lemmas2345) {
    auto h = registry_code("hamming15");
    for (auto report : {verify_lemma2(h), verify_lemma3(h), verify_lemma4(h), verify_lemma5(h)}) {
        EXPECT_TRUE(report.passed) << report.lemma;
    }
}

TEST(Lemmas, Lemma1OnReedMuller) {
    auto rm = registry_code("rm15");
    auto report = verify_lemma1(rm, 8);
    EXPECT_TRUE(report.passed);
    EXPECT_EQ(report.w, 8);
    EXPECT_FALSE(report.checks.empty());
}

TEST(Lemmas, Lemma5AllEightCombinations) {
    auto steane = registry_code("steane7");
    auto report = verify_lemma5(steane);
    ASSERT_TRUE(report.passed);
    ASSERT_EQ(report.checks.size(), 1u);
    const auto &m = report.checks[0].report.derived;
    ASSERT_EQ(m.size(), 8u);
    // Index bits: u (block 0), v (block 1), cat bit a. DD^T = 1 for Steane,
    // so the phase is (-1)^(a u v).
    for (int i = 0; i < 8; i++) {
        int u = i & 1, v = (i >> 1) & 1, a = (i >> 2) & 1;
        double sign = (a & u & v) ? -1 : 1;
        EXPECT_NEAR(std::abs(m[i][i] - sign), 0, 1e-9) << "u=" << u << " v=" << v << " a=" << a;
    }
}

TEST(Lemmas, Preconditions) {
    auto steane = registry_code("steane7");
    auto h = registry_code("hamming15");
    EXPECT_EQ(error_of([&] { verify_lemma1(h, 8); }), ErrorCode::LemmaUnsupported);
    EXPECT_EQ(error_of([&] { verify_lemma1(steane, 8); }), ErrorCode::WeightCongruenceViolated);
    auto big = registry_code("bch31_11");
    EXPECT_EQ(error_of([&] { verify_lemma3(big); }), ErrorCode::DimensionTooLarge);
}

TEST(Lemmas, StabilizerInvariance) {
    auto s = check_stabilizer_invariance(registry_code("steane7"));
    EXPECT_TRUE(s.passed);
    EXPECT_EQ(s.applications, 12u);
}

// Norm preservation and oracle agreement for random code-preserving bitwise
// circuits on two Steane blocks.
TEST(NormProperty, RandomCircuitsPreserveNorm) {
    std::mt19937_64 rng(5);
    auto steane = registry_code("steane7");
    auto o = oracle::steane_code();
    std::uniform_int_distribution<int> gate_kind(0, 5);
    for (int trial = 0; trial < 20; trial++) {
        std::vector<BitwiseGate> gates;
        std::vector<std::function<void(oracle::DenseState &)>> dense;
        for (int g = 0; g < 6; g++) {
            switch (gate_kind(rng)) {
                case 0:
                    gates.push_back(BitwiseGate::h_all(0));
                    dense.push_back([](oracle::DenseState &s) {
                        for (int q = 0; q < 7; q++) s.h(q);
                    });
                    break;
                case 1:
                    gates.push_back(BitwiseGate::cx(0, 1));
                    dense.push_back([](oracle::DenseState &s) {
                        for (int q = 0; q < 7; q++) s.cx(q, 7 + q);
                    });
                    break;
                case 2:
                    gates.push_back(BitwiseGate::cx(1, 0));
                    dense.push_back([](oracle::DenseState &s) {
                        for (int q = 0; q < 7; q++) s.cx(7 + q, q);
                    });
                    break;
                case 3:
                    gates.push_back(BitwiseGate::phase(1, M_PI / 2));
                    dense.push_back([](oracle::DenseState &s) {
                        for (int q = 0; q < 7; q++) s.phase(7 + q, M_PI / 2);
                    });
                    break;
                case 4:
                    gates.push_back(BitwiseGate::cz(0, 1));
                    dense.push_back([](oracle::DenseState &s) {
                        for (int q = 0; q < 7; q++) s.cz(q, 7 + q);
                    });
                    break;
                default:
                    gates.push_back(BitwiseGate::phase(0, M_PI / 2));
                    dense.push_back([](oracle::DenseState &s) {
                        for (int q = 0; q < 7; q++) s.phase(q, M_PI / 2);
                    });
            }
        }
        auto report = derive_logical_action({steane, steane}, gates);
        EXPECT_LT(report.max_norm_deviation, 1e-9) << trial;
        double dense_norm = 1;
        auto expected = oracle::logical_matrix(
            {o, o},
            [&](oracle::DenseState &s) {
                for (const auto &f : dense) f(s);
            },
            &dense_norm);
        EXPECT_LT(dense_norm, 1e-9);
        EXPECT_TRUE(report.legitimate) << trial;
        EXPECT_LT(oracle::max_abs_difference(report.derived, expected), 1e-9) << trial;
    }
}
