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

#include "cssft/gadgets/gadget.h"

#include <algorithm>
#include <bit>
#include <cctype>
#include <functional>
#include <set>

#include "cssft/error.h"

namespace cssft {

namespace {

uint64_t unit(size_t j) {
    return uint64_t{1} << j;
}

GadgetStep prepare(const CssCode &code, const std::string &block, AncillaTarget target, uint64_t u = 0) {
    GadgetStep s;
    s.kind = GadgetStep::Kind::Prepare;
    s.blocks = {block};
    s.ancilla = ancilla_spec(code, target, u);
    return s;
}

GadgetStep gate(BitwiseGate::Kind kind, std::vector<std::string> blocks) {
    GadgetStep s;
    s.kind = GadgetStep::Kind::Gate;
    s.gate = kind;
    s.blocks = std::move(blocks);
    return s;
}

GadgetStep measure(const std::string &block, Basis basis, std::vector<Readout> readouts) {
    GadgetStep s;
    s.kind = GadgetStep::Kind::Measure;
    s.blocks = {block};
    s.basis = basis;
    s.readouts = std::move(readouts);
    return s;
}

GadgetStep merged(const std::string &block, LogicalOperator op, uint64_t u, const std::string &bit) {
    GadgetStep s;
    s.kind = GadgetStep::Kind::MergedMeasure;
    s.blocks = {block};
    s.op = op;
    s.u = u;
    s.bit = bit;
    return s;
}

GadgetStep correct(std::vector<std::string> condition, std::vector<CorrectionAction> actions) {
    GadgetStep s;
    s.kind = GadgetStep::Kind::Correct;
    s.condition = std::move(condition);
    s.actions = std::move(actions);
    return s;
}

GadgetStep discard(const std::string &block) {
    GadgetStep s;
    s.kind = GadgetStep::Kind::Discard;
    s.blocks = {block};
    return s;
}

CorrectionAction lx(const std::string &block, uint64_t u) {
    return {CorrectionAction::Kind::LogicalX, {block}, u, BitwiseGate::Kind::CX};
}

CorrectionAction lz(const std::string &block, uint64_t u) {
    return {CorrectionAction::Kind::LogicalZ, {block}, u, BitwiseGate::Kind::CX};
}

CorrectionAction lgate(BitwiseGate::Kind kind, std::vector<std::string> blocks) {
    return {CorrectionAction::Kind::Gate, std::move(blocks), 0, kind};
}

// Positions carrying data: the first three logical qubits, extended to cover
// `top`. Remaining positions stay |0>_L.
std::vector<size_t> data_positions(const CssCode &code, size_t top) {
    size_t count = std::min(code.k, std::max<size_t>(top + 1, 3));
    std::vector<size_t> out(count);
    for (size_t i = 0; i < count; i++) {
        out[i] = i;
    }
    return out;
}

std::vector<size_t> all_positions(size_t k) {
    std::vector<size_t> out(k);
    for (size_t i = 0; i < k; i++) {
        out[i] = i;
    }
    return out;
}

ComplexMatrix permutation(size_t in_bits, size_t out_bits, const std::function<uint64_t(uint64_t)> &image) {
    ComplexMatrix m(size_t{1} << out_bits, std::vector<Amplitude>(size_t{1} << in_bits, 0.0));
    for (uint64_t x = 0; x < (uint64_t{1} << in_bits); x++) {
        m[image(x)][x] = 1.0;
    }
    return m;
}


void require_index(const CssCode &code, size_t i) {
    if (i >= code.k) {
        fail(ErrorCode::InvalidParameters, "Logical index " + std::to_string(i) + " is out of range for k = " +
                                               std::to_string(code.k) + ".");
    }
}

Gadget teleport(std::shared_ptr<const CssCode> code, const std::string &variant) {
    Gadget g;
    g.kind = GadgetKind::Teleport;
    g.variant = variant.empty() ? "bell" : variant;
    size_t k = code->k;
    if (k == 0) {
        fail(ErrorCode::InvalidParameters, "Teleportation needs k >= 1.");
    }
    const CssCode &c = *code;
    std::vector<Readout> x_reads;
    std::vector<Readout> z_reads;
    for (size_t j = 0; j < k; j++) {
        x_reads.push_back({unit(j), "mx" + std::to_string(j)});
        z_reads.push_back({unit(j), "mz" + std::to_string(j)});
    }
    if (g.variant == "bell") {
        // Bell pair from |+>_L and |0>_L, Bell measurement of D and A1.
        g.steps.push_back(prepare(c, "A1", AncillaTarget::PlusL));
        g.steps.push_back(prepare(c, "A2", AncillaTarget::ZeroL));
        g.steps.push_back(gate(BitwiseGate::Kind::CX, {"A1", "A2"}));
        g.steps.push_back(gate(BitwiseGate::Kind::CX, {"D", "A1"}));
        g.steps.push_back(measure("D", Basis::X, x_reads));
        g.steps.push_back(measure("A1", Basis::Z, z_reads));
        for (size_t j = 0; j < k; j++) {
            g.steps.push_back(correct({"mz" + std::to_string(j)}, {lx("A2", unit(j))}));
            g.steps.push_back(correct({"mx" + std::to_string(j)}, {lz("A2", unit(j))}));
        }
    } else if (g.variant == "one_bit") {
        // Two one-bit teleportations: via |+>_L, then via |0>_L.
        g.steps.push_back(prepare(c, "A1", AncillaTarget::PlusL));
        g.steps.push_back(gate(BitwiseGate::Kind::CX, {"A1", "D"}));
        g.steps.push_back(measure("D", Basis::Z, z_reads));
        for (size_t j = 0; j < k; j++) {
            g.steps.push_back(correct({"mz" + std::to_string(j)}, {lx("A1", unit(j))}));
        }
        g.steps.push_back(prepare(c, "A2", AncillaTarget::ZeroL));
        g.steps.push_back(gate(BitwiseGate::Kind::CX, {"A1", "A2"}));
        g.steps.push_back(measure("A1", Basis::X, x_reads));
        for (size_t j = 0; j < k; j++) {
            g.steps.push_back(correct({"mx" + std::to_string(j)}, {lz("A2", unit(j))}));
        }
    } else {
        fail(ErrorCode::InvalidArgument, "Unknown teleport variant '" + variant + "' (bell, one_bit).");
    }
    g.inputs = {{"D", all_positions(k)}};
    g.outputs = {{"A2", all_positions(k)}};
    g.recoveries = 2;
    g.ancilla_blocks = 2;
    g.ideal = {identity_matrix(size_t{1} << k)};
    return g;
}

Gadget intra_block_cx(std::shared_ptr<const CssCode> code, size_t ctrl, size_t targ) {
    const CssCode &c = *code;
    require_index(c, ctrl);
    require_index(c, targ);
    if (ctrl == targ) {
        fail(ErrorCode::InvalidParameters, "Control and target must differ.");
    }
    Gadget g;
    g.kind = GadgetKind::IntraBlockCX;
    g.logical_indices = {ctrl, targ};
    uint64_t ec = unit(ctrl);
    uint64_t et = unit(targ);
    using K = BitwiseGate::Kind;
    // Switch the control out of D into A1 at the same position.
    g.steps.push_back(prepare(c, "A1", AncillaTarget::ZeroPlusU, ec));
    g.steps.push_back(gate(K::CX, {"A1", "D"}));
    g.steps.push_back(merged("D", LogicalOperator::Z, ec, "s1"));
    g.steps.push_back(correct({"s1"}, {lx("A1", ec), lx("D", ec)}));
    // Teleport it to the target position of A2 through a Bell pair held
    // inside A2 (|0>_L + |e_c + e_t>_L).
    g.steps.push_back(prepare(c, "A2", AncillaTarget::ZeroPlusU, ec | et));
    g.steps.push_back(gate(K::CX, {"A1", "A2"}));
    g.steps.push_back(measure("A1", Basis::X, {{ec, "s3"}}));
    g.steps.push_back(merged("A2", LogicalOperator::Z, ec, "s2"));
    g.steps.push_back(correct({"s2"}, {lx("A2", et), lx("A2", ec)}));
    g.steps.push_back(correct({"s3"}, {lz("A2", et)}));
    // Whole-block CX: only the target position of A2 is occupied.
    g.steps.push_back(gate(K::CX, {"A2", "D"}));
    // Teleport back to the control position of a fresh A1.
    g.steps.push_back(prepare(c, "A1", AncillaTarget::ZeroPlusU, ec | et));
    g.steps.push_back(gate(K::CX, {"A2", "A1"}));
    g.steps.push_back(measure("A2", Basis::X, {{et, "s5"}}));
    g.steps.push_back(merged("A1", LogicalOperator::Z, et, "s4"));
    g.steps.push_back(correct({"s4"}, {lx("A1", ec), lx("A1", et)}));
    g.steps.push_back(correct({"s5"}, {lz("A1", ec)}));
    // Switch it back into D.
    g.steps.push_back(gate(K::CX, {"A1", "D"}));
    g.steps.push_back(merged("A1", LogicalOperator::X, ec, "s6"));
    g.steps.push_back(correct({"s6"}, {lz("D", ec)}));
    g.steps.push_back(discard("A1"));

    std::vector<size_t> positions = data_positions(c, std::max(ctrl, targ));
    size_t m = positions.size();
    g.inputs = {{"D", positions}};
    g.outputs = {{"D", positions}};
    g.recoveries = 4;
    g.ancilla_blocks = 2;
    g.ideal = {permutation(m, m, [&](uint64_t x) {
        return x ^ (((x >> ctrl) & 1) << targ);
    })};
    return g;
}

Gadget toffoli(std::shared_ptr<const CssCode> code) {
    const CssCode &c = *code;
    LemmaConditions cond = check_lemma_conditions(c);
    if (c.k != 1 || !cond.lemma4 || !cond.ddt_identity) {
        fail(
            ErrorCode::LemmaUnsupported,
            "The Toffoli network needs a k = 1 code with a doubly-even C0 = C^perp and D D^T = I.");
    }
    Gadget g;
    g.kind = GadgetKind::Toffoli;
    using K = BitwiseGate::Kind;
    // Ancillas: |+>_L |+>_L |+>_L, then measure CZ(A1, A2) Z(A3) via a cat.
    g.steps.push_back(prepare(c, "A1", AncillaTarget::PlusL));
    g.steps.push_back(prepare(c, "A2", AncillaTarget::PlusL));
    g.steps.push_back(prepare(c, "A3", AncillaTarget::PlusL));
    g.steps.push_back(prepare(c, "cat", AncillaTarget::Cat));
    g.steps.push_back(gate(K::CCZ, {"A1", "A2", "cat"}));
    g.steps.push_back(gate(K::CZ, {"A3", "cat"}));
    g.steps.push_back(measure("cat", Basis::X, {{1, "mc"}}));
    g.steps.push_back(correct({"mc"}, {lx("A3", 1)}));
    // Data side.
    g.steps.push_back(gate(K::CX, {"A1", "D1"}));
    g.steps.push_back(measure("D1", Basis::Z, {{1, "m1"}}));
    g.steps.push_back(gate(K::CX, {"A2", "D2"}));
    g.steps.push_back(measure("D2", Basis::Z, {{1, "m2"}}));
    g.steps.push_back(gate(K::CX, {"D3", "A3"}));
    g.steps.push_back(measure("D3", Basis::X, {{1, "m3"}}));
    // Correction table, applied in this order.
    g.steps.push_back(correct({"m3"}, {lz("A3", 1), lgate(K::CZ, {"A1", "A2"})}));
    g.steps.push_back(correct({"m1"}, {lx("A1", 1), lgate(K::CX, {"A2", "A3"})}));
    g.steps.push_back(correct({"m2"}, {lx("A2", 1), lgate(K::CX, {"A1", "A3"})}));

    g.inputs = {{"D1", {0}}, {"D2", {0}}, {"D3", {0}}};
    g.outputs = {{"A1", {0}}, {"A2", {0}}, {"A3", {0}}};
    g.recoveries = 8;
    g.ancilla_blocks = 3;
    g.cat_repetitions = c.d;
    g.ideal = {permutation(3, 3, [](uint64_t x) {
        return x ^ ((x & (x >> 1) & 1) << 2);
    })};
    return g;
}

Gadget switch_out(std::shared_ptr<const CssCode> code, size_t i) {
    const CssCode &c = *code;
    require_index(c, i);
    Gadget g;
    g.kind = GadgetKind::SwitchOut;
    g.logical_indices = {i};
    uint64_t e = unit(i);
    g.steps.push_back(prepare(c, "A", AncillaTarget::ZeroPlusU, e));
    g.steps.push_back(gate(BitwiseGate::Kind::CX, {"A", "D"}));
    g.steps.push_back(merged("D", LogicalOperator::Z, e, "s"));
    g.steps.push_back(correct({"s"}, {lx("A", e), lx("D", e)}));
    std::vector<size_t> pos = data_positions(c, i);
    size_t m = pos.size();
    g.inputs = {{"D", pos}};
    g.outputs = {{"D", pos}, {"A", pos}};
    g.recoveries = 1;
    g.ancilla_blocks = 1;
    g.ideal = {permutation(m, 2 * m, [&](uint64_t x) {
        return (x & ~e) | ((x & e) << m);
    })};
    return g;
}

Gadget switch_in(std::shared_ptr<const CssCode> code, size_t i) {
    const CssCode &c = *code;
    require_index(c, i);
    Gadget g;
    g.kind = GadgetKind::SwitchIn;
    g.logical_indices = {i};
    uint64_t e = unit(i);
    g.steps.push_back(gate(BitwiseGate::Kind::CX, {"A", "D"}));
    g.steps.push_back(merged("A", LogicalOperator::X, e, "s"));
    g.steps.push_back(correct({"s"}, {lz("D", e)}));
    g.steps.push_back(discard("A"));
    std::vector<size_t> pos = data_positions(c, i);
    std::vector<size_t> rest;
    for (size_t j : pos) {
        if (j != i) {
            rest.push_back(j);
        }
    }
    g.inputs = {{"D", rest}, {"A", {i}}};
    g.outputs = {{"D", pos}};
    g.recoveries = 1;
    g.ancilla_blocks = 1;
    g.ideal = {permutation(pos.size(), pos.size(), [&](uint64_t x) {
        uint64_t out = 0;
        for (size_t j = 0; j < rest.size(); j++) {
            out |= ((x >> j) & 1) << rest[j];
        }
        return out | (((x >> rest.size()) & 1) << i);
    })};
    return g;
}

Gadget merged_recover(std::shared_ptr<const CssCode> code, const std::vector<size_t> &indices, LogicalOperator op) {
    const CssCode &c = *code;
    uint64_t u = 0;
    for (size_t j : indices) {
        require_index(c, j);
        u |= unit(j);
    }
    Gadget g;
    g.kind = GadgetKind::MergedMeasureRecover;
    g.variant = logical_operator_name(op);
    g.logical_indices = indices;
    g.steps.push_back(merged("D", op, u, "m"));
    std::vector<size_t> pos = data_positions(c, std::bit_width(u) - 1);
    size_t k = pos.size();
    g.inputs = {{"D", pos}};
    g.outputs = {{"D", pos}};
    g.recoveries = 1;
    g.ancilla_blocks = 1;
    g.ideal_bit = "m";
    size_t dim = size_t{1} << k;
    for (int b = 0; b < 2; b++) {
        ComplexMatrix p(dim, std::vector<Amplitude>(dim, 0.0));
        double sign = b ? -0.5 : 0.5;
        for (uint64_t v = 0; v < dim; v++) {
            p[v][v] += 0.5;
            if (op == LogicalOperator::X) {
                p[v ^ u][v] += sign;
            } else {
                p[v][v] += (std::popcount(u & v) & 1) ? -sign : sign;
            }
        }
        g.ideal.push_back(std::move(p));
    }
    return g;
}

}  // namespace

const char *gadget_kind_name(GadgetKind kind) {
    switch (kind) {
        case GadgetKind::MergedMeasureRecover:
            return "MergedMeasureRecover";
        case GadgetKind::IntraBlockCX:
            return "IntraBlockCX";
        case GadgetKind::Teleport:
            return "Teleport";
        case GadgetKind::Toffoli:
            return "Toffoli";
        case GadgetKind::SwitchOut:
            return "SwitchOut";
        case GadgetKind::SwitchIn:
            return "SwitchIn";
    }
    return "?";
}

std::optional<GadgetKind> parse_gadget_kind(std::string_view name) {
    std::string lower;
    for (char ch : name) {
        if (ch != '_' && ch != '-') {
            lower += (char)std::tolower((unsigned char)ch);
        }
    }
    for (GadgetKind k :
         {GadgetKind::MergedMeasureRecover, GadgetKind::IntraBlockCX, GadgetKind::Teleport, GadgetKind::Toffoli,
          GadgetKind::SwitchOut, GadgetKind::SwitchIn}) {
        std::string cand;
        for (const char *p = gadget_kind_name(k); *p; p++) {
            cand += (char)std::tolower((unsigned char)*p);
        }
        if (cand == lower) {
            return k;
        }
    }
    return std::nullopt;
}

std::string CorrectionAction::str() const {
    switch (kind) {
        case Kind::LogicalX:
            return "Xbar[" + std::to_string(u) + "](" + blocks[0] + ")";
        case Kind::LogicalZ:
            return "Zbar[" + std::to_string(u) + "](" + blocks[0] + ")";
        case Kind::Gate: {
            BitwiseGate g;
            g.kind = gate;
            std::string name = g.str();
            name = name.substr(0, name.find('('));
            std::string out = name + "(";
            for (size_t i = 0; i < blocks.size(); i++) {
                out += (i ? "," : "") + blocks[i];
            }
            return out + ")";
        }
    }
    return "?";
}

std::string GadgetStep::str() const {
    auto joined = [](const std::vector<std::string> &v, const char *sep) {
        std::string out;
        for (size_t i = 0; i < v.size(); i++) {
            out += (i ? sep : "") + v[i];
        }
        return out;
    };
    switch (kind) {
        case Kind::Prepare: {
            std::string out = "prepare " + blocks[0] + " " + ancilla_target_name(ancilla.target);
            if (ancilla.target == AncillaTarget::ZeroPlusU) {
                out += " u=" + std::to_string(ancilla.u);
            }
            return out;
        }
        case Kind::Gate: {
            CorrectionAction a{CorrectionAction::Kind::Gate, blocks, 0, gate};
            return "gate " + a.str();
        }
        case Kind::Measure: {
            std::string out = std::string("measure ") + blocks[0] + (basis == Basis::X ? " X" : " Z");
            for (const auto &r : readouts) {
                out += " " + r.bit + "=u" + std::to_string(r.u);
            }
            return out;
        }
        case Kind::MergedMeasure:
            return "merged-measure " + std::string(logical_operator_name(op)) + "bar[" + std::to_string(u) + "](" +
                   blocks[0] + ") -> " + bit;
        case Kind::Correct: {
            std::vector<std::string> acts;
            for (const auto &a : actions) {
                acts.push_back(a.str());
            }
            return "if " + joined(condition, "^") + ": " + joined(acts, ", ");
        }
        case Kind::Discard:
            return "discard " + blocks[0];
    }
    return "?";
}

std::string Gadget::name() const {
    std::string out = gadget_kind_name(kind);
    if (!variant.empty()) {
        out += "/" + variant;
    }
    return out;
}

size_t Gadget::merged_measurements() const {
    return std::count_if(steps.begin(), steps.end(), [](const GadgetStep &s) {
        return s.kind == GadgetStep::Kind::MergedMeasure;
    });
}

Gadget build_gadget(
    GadgetKind kind, std::shared_ptr<const CssCode> code, const std::vector<size_t> &logical_indices,
    const GadgetOptions &options) {
    if (!code) {
        fail(ErrorCode::InvalidArgument, "build_gadget needs a code.");
    }
    Gadget g;
    switch (kind) {
        case GadgetKind::Teleport:
            g = teleport(code, options.variant);
            break;
        case GadgetKind::IntraBlockCX: {
            std::vector<size_t> idx = logical_indices.empty() ? std::vector<size_t>{1, 2} : logical_indices;
            if (idx.size() != 2) {
                fail(ErrorCode::InvalidArgument, "IntraBlockCX takes {control, target}.");
            }
            g = intra_block_cx(code, idx[0], idx[1]);
            break;
        }
        case GadgetKind::Toffoli:
            g = toffoli(code);
            break;
        case GadgetKind::SwitchOut:
        case GadgetKind::SwitchIn: {
            size_t i = logical_indices.empty() ? 0 : logical_indices[0];
            g = kind == GadgetKind::SwitchOut ? switch_out(code, i) : switch_in(code, i);
            break;
        }
        case GadgetKind::MergedMeasureRecover:
            g = merged_recover(code, logical_indices.empty() ? std::vector<size_t>{0} : logical_indices, options.op);
            break;
    }
    g.code = code;
    return g;
}

bool respects_block_discipline(const Gadget &gadget) {
    auto distinct = [](const std::vector<std::string> &blocks) {
        return std::set<std::string>(blocks.begin(), blocks.end()).size() == blocks.size();
    };
    for (const auto &s : gadget.steps) {
        if (s.kind == GadgetStep::Kind::Gate && !distinct(s.blocks)) {
            return false;
        }
        for (const auto &a : s.actions) {
            if (a.kind == CorrectionAction::Kind::Gate && !distinct(a.blocks)) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace cssft
