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

#include "cssft/gadgets/engine.h"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>

#include "cssft/error.h"

namespace cssft {

namespace {

struct Branch {
    std::vector<LogicalState> factors;
    std::map<std::string, int> bits;
    double probability = 1;
};

std::string ref_label(const std::string &block) {
    return "ref:" + block;
}

std::vector<uint64_t> row_words(const BinaryMatrix &m) {
    std::vector<uint64_t> out;
    for (const auto &r : m.rows()) {
        out.push_back(r.size() ? r.data()[0] : 0);
    }
    return out;
}

bool proportional(const LogicalState &a, const LogicalState &b) {
    if (a.num_blocks() != b.num_blocks() || a.terms().size() != b.terms().size()) {
        return false;
    }
    for (size_t i = 0; i < a.num_blocks(); i++) {
        if (a.blocks()[i].label != b.blocks()[i].label) {
            return false;
        }
    }
    if (a.terms().empty()) {
        return true;
    }
    Amplitude ratio = a.terms()[0].amp / b.terms()[0].amp;
    if (std::abs(std::abs(ratio) - 1) > 1e-9) {
        return false;
    }
    for (size_t i = 0; i < a.terms().size(); i++) {
        const Term &x = a.terms()[i];
        const Term &y = b.terms()[i];
        if (x.key != y.key || std::abs(x.amp - ratio * y.amp) > 1e-9) {
            return false;
        }
    }
    return true;
}

class Runner {
   public:
    Runner(const Gadget &g, uint64_t budget) : g_(g), budget_(budget) {
        for (size_t i = 0; i < g.steps.size(); i++) {
            for (const auto &b : g.steps[i].condition) {
                last_use_[b] = i;
            }
        }
    }

    GadgetSimulation run() {
        auto start = std::chrono::steady_clock::now();
        GadgetSimulation sim;
        std::vector<Branch> branches = {initial()};
        for (size_t i = 0; i < g_.steps.size(); i++) {
            std::vector<Branch> next;
            for (auto &b : branches) {
                step(g_.steps[i], std::move(b), next, sim);
            }
            for (auto &b : next) {
                for (auto it = b.bits.begin(); it != b.bits.end();) {
                    bool keep = it->first == g_.ideal_bit ||
                                (last_use_.count(it->first) && last_use_[it->first] > i);
                    it = keep ? std::next(it) : b.bits.erase(it);
                }
                for (auto &f : b.factors) {
                    f.canonicalize();
                    sim.peak_terms = std::max(sim.peak_terms, f.terms().size());
                }
            }
            branches = merge(std::move(next));
            sim.peak_branches = std::max(sim.peak_branches, branches.size());
        }
        sim.steps = g_.steps.size();
        finish(branches, sim);
        sim.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return sim;
    }

   private:
    const Gadget &g_;
    uint64_t budget_;
    std::map<std::string, size_t> last_use_;

    Branch initial() {
        Branch b;
        const auto &code = g_.code;
        for (const auto &port : g_.inputs) {
            size_t p = port.positions.size();
            if (p == 0) {
                b.factors.push_back(encode_basis(code, 0, port.block, budget_));
                continue;
            }
            LogicalState s({reference_block(p, ref_label(port.block)), code_block(code, port.block)});
            double scale = std::pow(2.0, -(double)p / 2.0);
            for (uint64_t x = 0; x < (uint64_t{1} << p); x++) {
                uint64_t u = 0;
                for (size_t j = 0; j < p; j++) {
                    u |= ((x >> j) & 1) << port.positions[j];
                }
                LogicalState encoded = encode_basis(code, u, port.block, budget_);
                for (const auto &t : encoded.terms()) {
                    Key key{};
                    key[0] = x;
                    key[1] = t.key[0];
                    s.add_term(key, t.amp * scale);
                }
            }
            s.canonicalize();
            b.factors.push_back(std::move(s));
        }
        return b;
    }

    static std::pair<size_t, size_t> locate(const Branch &b, const std::string &name) {
        for (size_t f = 0; f < b.factors.size(); f++) {
            const auto &blocks = b.factors[f].blocks();
            for (size_t i = 0; i < blocks.size(); i++) {
                if (blocks[i].label == name) {
                    return {f, i};
                }
            }
        }
        fail(ErrorCode::Internal, "Gadget block '" + name + "' is not live.");
    }

    // Brings every named block into one factor and returns its index.
    size_t join(Branch &b, const std::vector<std::string> &names) {
        size_t target = locate(b, names[0]).first;
        for (size_t i = 1; i < names.size(); i++) {
            size_t f = locate(b, names[i]).first;
            if (f == target) {
                continue;
            }
            LogicalState merged = b.factors[target].tensor(b.factors[f]);
            if (merged.terms().size() > budget_) {
                fail(ErrorCode::DimensionTooLarge, "Joining gadget blocks exceeds the term budget.");
            }
            b.factors[target] = std::move(merged);
            b.factors.erase(b.factors.begin() + f);
            if (f < target) {
                target--;
            }
        }
        return target;
    }

    void apply_gate(Branch &b, BitwiseGate::Kind kind, const std::vector<std::string> &names) {
        size_t f = join(b, names);
        std::vector<size_t> idx;
        for (const auto &n : names) {
            idx.push_back(locate(b, n).second);
        }
        BitwiseGate gate;
        switch (kind) {
            case BitwiseGate::Kind::CX:
                gate = BitwiseGate::cx(idx.at(0), idx.at(1));
                break;
            case BitwiseGate::Kind::CZ:
                gate = BitwiseGate::cz(idx.at(0), idx.at(1));
                break;
            case BitwiseGate::Kind::CCZ:
                gate = BitwiseGate::ccz(idx.at(0), idx.at(1), idx.at(2));
                break;
            default:
                fail(ErrorCode::InvalidArgument, "Gadget gates are CX, CZ and CCZ.");
        }
        apply_in_place(gate, b.factors[f], budget_);
    }

    void apply_action(Branch &b, const CorrectionAction &a) {
        if (a.kind == CorrectionAction::Kind::Gate) {
            apply_gate(b, a.gate, a.blocks);
            return;
        }
        auto [f, i] = locate(b, a.blocks[0]);
        const CssCode &code = *b.factors[f].blocks()[i].code;
        BitwiseGate gate = a.kind == CorrectionAction::Kind::LogicalX
                               ? BitwiseGate::x_mask(i, logical_x_support(code, a.u))
                               : BitwiseGate::z_mask(i, logical_z_support(code, a.u));
        apply_in_place(gate, b.factors[f], budget_);
    }

    // Replaces factor f by `post` with block i removed.
    static void drop_block(Branch &b, size_t f, size_t i, const LogicalState &post) {
        LogicalState reduced = post.without_block(i);
        if (reduced.num_blocks() == 0) {
            b.factors.erase(b.factors.begin() + f);
        } else {
            b.factors[f] = std::move(reduced);
        }
    }

    void prepare(Branch &b, const GadgetStep &s) {
        b.factors.push_back(prepare_ancilla(g_.code, s.ancilla, s.blocks[0]));
    }

    void measure(const GadgetStep &s, const Branch &b, std::vector<Branch> &out, GadgetSimulation &sim) {
        auto [f, i] = locate(b, s.blocks[0]);
        const CssCode &code = *b.factors[f].blocks()[i].code;
        std::vector<uint64_t> functionals =
            row_words(s.basis == Basis::X ? code.c0_generator : code.stabilizer_z);
        size_t r = functionals.size();
        std::vector<uint64_t> reads;
        for (const auto &rd : s.readouts) {
            reads.push_back(s.basis == Basis::X ? logical_x_support(code, rd.u) : logical_z_support(code, rd.u));
        }
        functionals.insert(functionals.end(), reads.begin(), reads.end());
        if (functionals.size() > 64) {
            fail(ErrorCode::DimensionTooLarge, "Too many functionals for one measurement.");
        }
        SyndromeDecoder decoder = code_decoder(code, row_words(s.basis == Basis::X ? code.c0_generator : code.stabilizer_z));
        for (auto &m : measure_block(b.factors[f], i, s.basis, functionals)) {
            sim.raw_branches++;
            uint64_t syndrome = r ? (m.functional_values & ((r < 64 ? uint64_t{1} << r : 0) - 1)) : 0;
            auto error = decoder.decode(syndrome);
            if (!error) {
                fail(ErrorCode::Internal, "Undecodable syndrome in a gadget measurement.");
            }
            Branch nb = b;
            nb.probability *= m.probability;
            for (size_t j = 0; j < reads.size(); j++) {
                int raw = (m.functional_values >> (r + j)) & 1;
                nb.bits[s.readouts[j].bit] = raw ^ (std::popcount(*error & reads[j]) & 1);
            }
            drop_block(nb, f, i, m.post_state);
            out.push_back(std::move(nb));
        }
    }

    void merged_measure(const GadgetStep &s, const Branch &b, std::vector<Branch> &out, GadgetSimulation &sim) {
        auto [f, i] = locate(b, s.blocks[0]);
        for (auto &m : merged_measure_block(b.factors[f], i, s.op, s.u, budget_)) {
            sim.raw_branches++;
            if (!m.decoded) {
                fail(ErrorCode::Internal, "Undecodable syndrome in a merged measurement.");
            }
            Branch nb = b;
            nb.probability *= m.probability;
            nb.bits[s.bit] = m.eigenbit;
            nb.factors[f] = std::move(m.post_state);
            out.push_back(std::move(nb));
        }
    }

    // Removes a block that must be unentangled from the rest of its factor.
    static void discard(Branch &b, const std::string &name) {
        auto [f, i] = locate(b, name);
        const LogicalState &s = b.factors[f];
        std::map<Key, std::vector<const Term *>> groups;
        for (const auto &t : s.terms()) {
            Key other = t.key;
            other[i] = 0;
            groups[other].push_back(&t);
        }
        const auto &ref = groups.begin()->second;
        for (const auto &[key, terms] : groups) {
            bool ok = terms.size() == ref.size();
            Amplitude lambda = ok ? terms[0]->amp / ref[0]->amp : 0.0;
            for (size_t j = 0; ok && j < terms.size(); j++) {
                ok = terms[j]->key[i] == ref[j]->key[i] && std::abs(terms[j]->amp - lambda * ref[j]->amp) < 1e-9;
            }
            if (!ok) {
                fail(ErrorCode::UnsupportedOnState, "Discarded block '" + name + "' is entangled with the rest.");
            }
        }
        uint64_t word = ref[0]->key[i];
        LogicalState kept(s.blocks());
        for (const auto &t : s.terms()) {
            if (t.key[i] == word) {
                kept.add_term(t.key, t.amp);
            }
        }
        kept.normalize();
        drop_block(b, f, i, kept);
    }

    void step(const GadgetStep &s, Branch b, std::vector<Branch> &out, GadgetSimulation &sim) {
        switch (s.kind) {
            case GadgetStep::Kind::Prepare:
                prepare(b, s);
                break;
            case GadgetStep::Kind::Gate:
                apply_gate(b, s.gate, s.blocks);
                break;
            case GadgetStep::Kind::Measure:
                measure(s, b, out, sim);
                return;
            case GadgetStep::Kind::MergedMeasure:
                merged_measure(s, b, out, sim);
                return;
            case GadgetStep::Kind::Correct: {
                int value = 0;
                for (const auto &bit : s.condition) {
                    auto it = b.bits.find(bit);
                    if (it == b.bits.end()) {
                        fail(ErrorCode::Internal, "Correction reads unknown bit '" + bit + "'.");
                    }
                    value ^= it->second;
                }
                if (value) {
                    for (const auto &a : s.actions) {
                        apply_action(b, a);
                    }
                }
                break;
            }
            case GadgetStep::Kind::Discard:
                discard(b, s.blocks[0]);
                break;
        }
        out.push_back(std::move(b));
    }

    static std::vector<Branch> merge(std::vector<Branch> branches) {
        std::vector<Branch> out;
        for (auto &b : branches) {
            bool absorbed = false;
            for (auto &o : out) {
                if (o.bits != b.bits || o.factors.size() != b.factors.size()) {
                    continue;
                }
                bool same = true;
                for (size_t f = 0; same && f < b.factors.size(); f++) {
                    same = proportional(o.factors[f], b.factors[f]);
                }
                if (same) {
                    o.probability += b.probability;
                    absorbed = true;
                    break;
                }
            }
            if (!absorbed) {
                out.push_back(std::move(b));
            }
        }
        return out;
    }

    void finish(const std::vector<Branch> &branches, GadgetSimulation &sim) {
        size_t in_bits = 0;
        for (const auto &p : g_.inputs) {
            in_bits += p.positions.size();
        }
        double best_probability = -1;
        for (const auto &b : branches) {
            GadgetLeaf leaf;
            leaf.bits = b.bits;
            leaf.probability = b.probability;
            LogicalState all = b.factors.at(0);
            for (size_t f = 1; f < b.factors.size(); f++) {
                all = all.tensor(b.factors[f]);
            }
            std::vector<size_t> order;
            auto index_of = [&](const std::string &label) {
                for (size_t i = 0; i < all.num_blocks(); i++) {
                    if (all.blocks()[i].label == label) {
                        return i;
                    }
                }
                fail(ErrorCode::Internal, "Gadget output block '" + label + "' is missing.");
            };
            for (const auto &p : g_.inputs) {
                if (!p.positions.empty()) {
                    order.push_back(index_of(ref_label(p.block)));
                }
            }
            size_t out_bits = 0;
            for (const auto &p : g_.outputs) {
                order.push_back(index_of(p.block));
                out_bits += g_.code->k;
            }
            if (order.size() != all.num_blocks()) {
                fail(ErrorCode::Internal, "Gadget leaves blocks that are neither outputs nor discarded.");
            }
            LogicalProjection proj = project_logical(all.permuted(order));
            size_t rows = size_t{1} << out_bits;
            size_t cols = size_t{1} << in_bits;
            double scale = std::sqrt((double)cols);
            ComplexMatrix full(rows, std::vector<Amplitude>(cols, 0.0));
            for (size_t idx = 0; idx < proj.amplitudes.size(); idx++) {
                full[idx >> in_bits][idx & (cols - 1)] = proj.amplitudes[idx] * scale;
            }
            // Restrict to the listed output positions.
            std::vector<size_t> selected;
            size_t offset = 0;
            for (const auto &p : g_.outputs) {
                for (size_t pos : p.positions) {
                    selected.push_back(offset + pos);
                }
                offset += g_.code->k;
            }
            const ComplexMatrix &ideal =
                g_.ideal_bit.empty() ? g_.ideal.at(0) : g_.ideal.at(b.bits.at(g_.ideal_bit));
            ComplexMatrix action(ideal.size(), std::vector<Amplitude>(cols, 0.0));
            double off_weight = 0;
            for (size_t o = 0; o < rows; o++) {
                uint64_t sel = 0;
                uint64_t rest = o;
                for (size_t j = 0; j < selected.size(); j++) {
                    if ((o >> selected[j]) & 1) {
                        sel |= uint64_t{1} << j;
                        rest &= ~(uint64_t{1} << selected[j]);
                    }
                }
                for (size_t c = 0; c < cols; c++) {
                    if (rest) {
                        off_weight += std::norm(full[o][c]);
                    } else {
                        action[sel][c] = full[o][c];
                    }
                }
            }
            leaf.leakage = (proj.total - proj.captured) + off_weight / cols;
            // Normalize to the ideal's Frobenius norm and remove the global phase.
            double na = 0;
            double ni = 0;
            Amplitude overlap = 0;
            for (size_t r = 0; r < ideal.size(); r++) {
                for (size_t c = 0; c < cols; c++) {
                    na += std::norm(action[r][c]);
                    ni += std::norm(ideal[r][c]);
                    overlap += std::conj(ideal[r][c]) * action[r][c];
                }
            }
            double dev = 1;
            if (na > 0 && std::abs(overlap) > 0) {
                double rescale = std::sqrt(ni / na);
                Amplitude phase = overlap / std::abs(overlap);
                dev = 0;
                for (size_t r = 0; r < ideal.size(); r++) {
                    for (size_t c = 0; c < cols; c++) {
                        action[r][c] *= rescale / phase;
                        dev = std::max(dev, std::abs(action[r][c] - ideal[r][c]));
                    }
                }
            }
            leaf.deviation = std::max(dev, leaf.leakage);
            leaf.action = std::move(action);
            sim.total_probability += leaf.probability;
            sim.max_deviation = std::max(sim.max_deviation, leaf.deviation);
            if (leaf.probability > best_probability) {
                best_probability = leaf.probability;
                sim.action.derived = leaf.action;
                sim.action.predicted = ideal;
                sim.action.has_prediction = true;
                sim.action.logical_qubits = in_bits;
                sim.action.legitimate = leaf.leakage <= 1e-9;
                sim.action.unitarity_deviation =
                    g_.ideal_bit.empty() ? unitarity_deviation(leaf.action) : 0.0;
            }
            sim.leaves.push_back(std::move(leaf));
        }
        sim.action.max_deviation = sim.max_deviation;
        sim.action.max_norm_deviation = std::abs(sim.total_probability - 1);
        sim.action.gate_applications = sim.raw_branches;
    }
};

}  // namespace

bool GadgetSimulation::branch_independent(double tolerance) const {
    return !leaves.empty() && max_deviation <= tolerance;
}

bool GadgetSimulation::passed(double tolerance) const {
    return branch_independent(tolerance) && std::abs(total_probability - 1) <= tolerance;
}

GadgetSimulation simulate_gadget(const Gadget &gadget, uint64_t budget) {
    if (!gadget.code) {
        fail(ErrorCode::InvalidArgument, "Gadget has no code.");
    }
    return Runner(gadget, budget).run();
}

}  // namespace cssft
