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
#include <string>

#include "cssft/cssft.h"

TEST(CApi, VersionAndStatusNames) {
    EXPECT_STRNE(cssft_version(), "");
    EXPECT_STREQ(cssft_status_name(CSSFT_OK), "Ok");
    EXPECT_STREQ(cssft_status_name(CSSFT_NOT_DUAL_CONTAINING), "NotDualContaining");
}

TEST(CApi, RegistryCodeLifecycle) {
    cssft_code *code = nullptr;
    ASSERT_EQ(cssft_code_registry("steane7", nullptr, &code), CSSFT_OK);
    size_t n = 0, k = 0, d = 0;
    ASSERT_EQ(cssft_code_params(code, &n, &k, &d), CSSFT_OK);
    EXPECT_EQ(n, 7u);
    EXPECT_EQ(k, 1u);
    EXPECT_EQ(d, 3u);
    EXPECT_STREQ(cssft_code_label(code), "[[7,1,3]]");
    double w = 0;
    ASSERT_EQ(cssft_code_weight(code, &w), CSSFT_OK);
    EXPECT_EQ(w, 4);
    cssft_code_free(code);
    cssft_code_free(nullptr);
}

TEST(CApi, ErrorsCarryStatusAndMessage) {
    cssft_code *code = nullptr;
    EXPECT_EQ(cssft_code_registry("nosuch", nullptr, &code), CSSFT_INVALID_ARGUMENT);
    EXPECT_EQ(code, nullptr);
    EXPECT_STRNE(cssft_last_error(), "");
    EXPECT_EQ(cssft_code_bch(4, 5, nullptr, &code), CSSFT_NOT_DUAL_CONTAINING);
    EXPECT_EQ(cssft_code_bch(2, 3, nullptr, &code), CSSFT_INVALID_PARAMETERS);
    EXPECT_EQ(cssft_code_registry(nullptr, nullptr, &code), CSSFT_INVALID_ARGUMENT);
    EXPECT_EQ(cssft_code_load("/nonexistent/file.txt", nullptr, &code), CSSFT_IO);
}

TEST(CApi, ConstructorsAndDerive) {
    cssft_code *rm = nullptr, *qr = nullptr, *smaller = nullptr;
    ASSERT_EQ(cssft_code_reed_muller(4, nullptr, &rm), CSSFT_OK);
    EXPECT_STREQ(cssft_code_label(rm), "[[15,1,3]]");
    ASSERT_EQ(cssft_code_extended_qr(23, nullptr, &qr), CSSFT_OK);
    ASSERT_EQ(cssft_code_derive(qr, 0, &smaller), CSSFT_OK);
    size_t n = 0, k = 0;
    cssft_code_params(smaller, &n, &k, nullptr);
    EXPECT_EQ(n, 23u);
    EXPECT_EQ(k, 1u);
    cssft_code_free(rm);
    cssft_code_free(qr);
    cssft_code_free(smaller);
}

TEST(CApi, VerifyReport) {
    cssft_code *code = nullptr;
    ASSERT_EQ(cssft_code_resolve("steane7", nullptr, &code), CSSFT_OK);
    int lemmas[] = {2, 3, 4, 5};
    cssft_report *report = nullptr;
    ASSERT_EQ(cssft_verify(code, lemmas, 4, 0, 1, &report), CSSFT_OK);
    EXPECT_EQ(cssft_report_passed(report), 1);
    std::string json = cssft_report_json(report);
    EXPECT_NE(json.find("\"schema_version\": 1"), std::string::npos);
    EXPECT_NE(std::string(cssft_report_text(report)).find("lemma5: PASS"), std::string::npos);
    cssft_report_free(report);
    int bad[] = {6};
    EXPECT_EQ(cssft_verify(code, bad, 1, 0, 0, &report), CSSFT_INVALID_ARGUMENT);
    cssft_code_free(code);
}

TEST(CApi, SimulateGadget) {
    cssft_code *code = nullptr;
    ASSERT_EQ(cssft_code_registry("steane7", nullptr, &code), CSSFT_OK);
    cssft_report *report = nullptr;
    ASSERT_EQ(cssft_simulate_gadget(code, "teleport", nullptr, 0, "one_bit", nullptr, 0, &report), CSSFT_OK);
    EXPECT_EQ(cssft_report_passed(report), 1);
    cssft_report_free(report);
    EXPECT_EQ(cssft_simulate_gadget(code, "swap", nullptr, 0, nullptr, nullptr, 0, &report), CSSFT_INVALID_ARGUMENT);
    cssft_code_free(code);
}

TEST(CApi, OverheadModel) {
    cssft_overhead_params p;
    cssft_overhead_params_init(&p);
    p.n = 127;
    p.k = 29;
    p.d = 15;
    p.w = 64;
    p.gamma = 2e-5;
    uint64_t g = 0;
    double s = 0, P = 0;
    ASSERT_EQ(cssft_error_opportunities(&p, &g, &s), CSSFT_OK);
    EXPECT_EQ(g, 4191u);
    EXPECT_EQ(s, 570103.0);
    ASSERT_EQ(cssft_failure_probability(&p, &P), CSSFT_OK);
    EXPECT_GE(P, 1e-12);
    EXPECT_LE(P, 2.5e-12);

    double gm = 0, em = 0;
    ASSERT_EQ(cssft_solve_gamma_max(&p, &gm, &em), CSSFT_OK);
    EXPECT_NEAR(gm / 20e-6, 1, 0.4);

    double plim = 0;
    ASSERT_EQ(cssft_plim(29, 1e6, 2.15e6, &plim), CSSFT_OK);
    EXPECT_NEAR(plim, 29 / (8 * 2.15e12), 1e-25);
    double S = 0, asym = 0;
    ASSERT_EQ(cssft_scale_up(127, 29, -1, &S, &asym), CSSFT_OK);
    EXPECT_NEAR(asym, 639.0 / 29, 1e-12);

    double phi = 0, c = 0;
    ASSERT_EQ(cssft_rotation_synthesis(0.3, &phi, &c), CSSFT_OK);
    EXPECT_NEAR(std::cos(phi), c, 1e-12);

    cssft_report *report = nullptr;
    ASSERT_EQ(cssft_overhead_evaluate(&p, &report), CSSFT_OK);
    EXPECT_NE(std::string(cssft_report_json(report)).find("\"g\": 4191"), std::string::npos);
    cssft_report_free(report);

    p.k = 500;
    EXPECT_EQ(cssft_failure_probability(&p, &P), CSSFT_INVALID_PARAMETERS);
}

TEST(CApi, OverheadTable) {
    std::vector<const char *> names;
    for (size_t i = 0; i < cssft_reference_table_size(); i++) {
        names.push_back(cssft_reference_table_name(i));
    }
    ASSERT_EQ(names.size(), 7u);
    cssft_report *report = nullptr;
    ASSERT_EQ(cssft_overhead_table(names.data(), names.size(), 0, 0, 0, 1, 0, &report), CSSFT_OK);
    EXPECT_EQ(cssft_report_passed(report), 1);
    std::string csv = cssft_report_csv(report);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "code,P,gamma,epsilon,(5n+4)/k");
    cssft_report_free(report);
}

TEST(CApi, RegistryNames) {
    ASSERT_GT(cssft_registry_size(), 0u);
    EXPECT_STREQ(cssft_registry_name(0), "steane7");
    EXPECT_EQ(cssft_registry_name(cssft_registry_size()), nullptr);
}

TEST(CApi, BuildWithoutFiles) {
    cssft_build_request r{};
    r.family = "bch";
    r.m = 4;
    r.delta = 3;
    cssft_report *report = nullptr;
    ASSERT_EQ(cssft_build(&r, &report), CSSFT_OK);
    EXPECT_NE(std::string(cssft_report_json(report)).find("[[15,7,3]]"), std::string::npos);
    cssft_report_free(report);
}

TEST(CApi, BchConjecture) {
    cssft_report *report = nullptr;
    ASSERT_EQ(cssft_bch_conjecture(4, 5, 128, &report), CSSFT_OK);
    EXPECT_EQ(cssft_report_passed(report), 1);
    cssft_report_free(report);
    EXPECT_EQ(cssft_bch_conjecture(4, 12, 128, &report), CSSFT_INVALID_PARAMETERS);
}
