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

#include "cssft/error.h"
#include "cssft/gadgets/engine.h"
#include "cssft/gadgets/gadget.h"
#include "cssft/registry.h"

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

void expect_passes(const Gadget &g) {
    EXPECT_TRUE(respects_block_discipline(g)) << g.name();
    auto sim = simulate_gadget(g);
    EXPECT_TRUE(sim.passed()) << g.name();
    EXPECT_TRUE(sim.branch_independent()) << g.name();
    EXPECT_NEAR(sim.total_probability, 1, 1e-9) << g.name();
    EXPECT_LT(sim.action.max_norm_deviation, 1e-9) << g.name();
    double p = 0;
    for (const auto &leaf : sim.leaves) {
        p += leaf.probability;
        EXPECT_LT(leaf.deviation, 1e-9);
    }
    EXPECT_NEAR(p, 1, 1e-9);
}

}  // namespace

TEST(Gadgets, KindNames) {
    for (auto k : {GadgetKind::MergedMeasureRecover, GadgetKind::IntraBlockCX, GadgetKind::Teleport,
                   GadgetKind::Toffoli, GadgetKind::SwitchOut, GadgetKind::SwitchIn}) {
        EXPECT_EQ(parse_gadget_kind(gadget_kind_name(k)), k);
    }
    EXPECT_FALSE(parse_gadget_kind("swap").has_value());
}

TEST(Gadgets, TeleportBothVariants) {
    auto steane = registry_code("steane7");
    expect_passes(build_gadget(GadgetKind::Teleport, steane, {}, {"bell", LogicalOperator::X}));
    expect_passes(build_gadget(GadgetKind::Teleport, steane, {}, {"one_bit", LogicalOperator::X}));
}

TEST(Gadgets, MergedMeasurementBothOperators) {
    auto h = registry_code("hamming15");
    expect_passes(build_gadget(GadgetKind::MergedMeasureRecover, h, {}, {"", LogicalOperator::X}));
    expect_passes(build_gadget(GadgetKind::MergedMeasureRecover, h, {}, {"", LogicalOperator::Z}));
}

TEST(Gadgets, SwitchOutAndIn) {
    auto steane = registry_code("steane7");
    expect_passes(build_gadget(GadgetKind::SwitchOut, steane));
    expect_passes(build_gadget(GadgetKind::SwitchIn, steane));
}

TEST(Gadgets, IntraBlockCX) {
    auto g = build_gadget(GadgetKind::IntraBlockCX, registry_code("hamming15"));
    EXPECT_GT(g.merged_measurements(), 0u);
    expect_passes(g);
}

TEST(Gadgets, Toffoli) {
    auto g = build_gadget(GadgetKind::Toffoli, registry_code("steane7"));
    EXPECT_EQ(g.inputs.size(), 3u);
    expect_passes(g);
}

TEST(Gadgets, ToffoliNeedsSingleLogicalQubit) {
    try {
        build_gadget(GadgetKind::Toffoli, registry_code("hamming15"));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::LemmaUnsupported);
    }
}
