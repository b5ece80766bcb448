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

#include <filesystem>
#include <fstream>

#include "cssft/commands.h"
#include "cssft/error.h"
#include "cssft/registry.h"

using namespace cssft;

TEST(Registry, EntriesAreUniqueAndFindable) {
    std::set<std::string> names;
    for (const auto &e : registry()) {
        EXPECT_TRUE(names.insert(e.name).second) << e.name;
        EXPECT_TRUE(find_registry_entry(e.name).has_value());
        EXPECT_GT(e.w, 0) << e.name;
        EXPECT_FALSE(e.w_source.empty()) << e.name;
    }
    EXPECT_EQ(find_registry_entry("bch127")->name, "bch127_29");
    EXPECT_FALSE(find_registry_entry("nosuch").has_value());
}

TEST(Registry, SmallCodesBuildWithDeclaredParameters) {
    for (const char *name : {"steane7", "hamming15", "rm15", "ext_hamming8", "golay24", "golay23", "qr47", "bch31_1"}) {
        auto entry = *find_registry_entry(name);
        CssCode c = build_registry_code(name);
        EXPECT_EQ((int)c.n, entry.n) << name;
        EXPECT_EQ((int)c.k, entry.k) << name;
        EXPECT_EQ(c.w, entry.w) << name;
    }
}

TEST(Registry, TableCodesMatchReferenceList) {
    for (const auto &t : reference_table_codes()) {
        auto r = registry_table_code(t.name);
        EXPECT_EQ(r.n, t.n);
        EXPECT_EQ(r.k, t.k);
        EXPECT_EQ(r.d, t.d);
        EXPECT_EQ(r.w, t.w) << t.name;
    }
}

TEST(Commands, VerifyFallsBackToCertificate) {
    auto code = std::make_shared<const CssCode>(resolve_code("bch127"));
    VerifyRequest req;
    req.lemmas = {4};
    auto r = run_verify(code, req);
    EXPECT_TRUE(r.passed);
    EXPECT_NE(r.text.find("certificate"), std::string::npos);
}

TEST(Commands, VerifyUnsupportedLemmaFails) {
    auto code = std::make_shared<const CssCode>(resolve_code("hamming15"));
    VerifyRequest req;
    req.lemmas = {1};
    req.w = 8;
    EXPECT_FALSE(run_verify(code, req).passed);
}

TEST(Commands, ResolveUnknownCode) {
    try {
        resolve_code("no_such_code");
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
    }
}

TEST(Commands, ResolveCodeFile) {
    auto path = std::filesystem::temp_directory_path() / "cssft_unit_hamming.txt";
    {
        std::ofstream f(path);
        f << "# n: 7\n# kind: check\n1010101\n0110011\n0001111\n";
    }
    CssCode c = resolve_code(path.string());
    EXPECT_EQ(c.label(), "[[7,1,3]]");
    std::filesystem::remove(path);
}

TEST(Commands, BuildWritesFiles) {
    auto dir = std::filesystem::temp_directory_path() / "cssft_unit_build";
    std::filesystem::remove_all(dir);
    BuildRequest req;
    req.family = "qr";
    req.p = 23;
    req.derive = 1;
    req.out_dir = dir.string();
    auto r = run_build(req);
    EXPECT_TRUE(r.passed);
    for (const char *ext : {".htilde.txt", ".dtilde.txt", ".stab_x.txt", ".stab_z.txt", ".cert.json"}) {
        EXPECT_TRUE(std::filesystem::exists(dir / (std::string("xqr_p23_minus1") + ext))) << ext;
    }
    std::filesystem::remove_all(dir);
}

TEST(Commands, OverheadComparisonAndDeterminism) {
    OverheadRequest req;
    req.codes = reference_table_codes();
    req.compare = true;
    auto a = run_overhead(req);
    auto b = run_overhead(req);
    EXPECT_TRUE(a.passed);
    EXPECT_EQ(dump_report(a.report), dump_report(b.report));
    EXPECT_EQ(a.csv, b.csv);
    EXPECT_EQ(a.report["schema_version"], REPORT_SCHEMA_VERSION);
}

TEST(Commands, ScaledAlgorithmSkipsComparison) {
    OverheadRequest req;
    req.codes = reference_table_codes();
    req.table.kq_scale = 6561;
    req.compare = true;
    auto r = run_overhead(req);
    EXPECT_TRUE(r.passed);
    for (const auto &row : r.report["rows"]) {
        if (row["code"] == "[[127,29,15]]") {
            // Unscaled over scaled gamma_max: 6561^(1/8) = 3.
            EXPECT_NEAR(row["gamma_reduction"].get<double>(), 3, 0.03);
        }
    }
}

TEST(Commands, BchConjecture) {
    auto r = run_bch_conjecture(4, 5, 256);
    EXPECT_TRUE(r.passed);
}
