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

#include "cssft/report_json.h"

#include <cmath>

namespace cssft {

namespace {

Json real_or_null(const std::optional<double> &v) {
    return v && std::isfinite(*v) ? Json(*v) : Json(nullptr);
}

Json finite(double v) {
    return std::isfinite(v) ? Json(v) : Json(nullptr);
}

}  // namespace

Json matrix_json(const BinaryMatrix &m) {
    Json rows = Json::array();
    for (const auto &r : m.rows()) {
        rows.push_back(r.str());
    }
    return rows;
}

Json complex_matrix_json(const ComplexMatrix &m) {
    Json rows = Json::array();
    for (const auto &row : m) {
        Json out = Json::array();
        for (const auto &z : row) {
            out.push_back(Json::array({z.real(), z.imag()}));
        }
        rows.push_back(out);
    }
    return rows;
}

Json to_json(const ClassicalCode &code) {
    Json j;
    j["label"] = code.label();
    j["family"] = family_name(code.family);
    j["params"] = code.params;
    j["n"] = code.n;
    j["k"] = code.k;
    j["d"] = code.d;
    j["distance_kind"] = distance_kind_name(code.distance_kind);
    j["w"] = code.w;
    j["w_source"] = code.w_source;
    if (code.row_weight_audit) {
        const auto &a = *code.row_weight_audit;
        j["row_weight_audit"] = {
            {"target", a.target},
            {"canonical_rows_match", a.canonical_rows_match},
            {"equivalent_basis_found", a.equivalent_basis_found},
            {"canonical_mean", a.canonical_mean},
        };
    }
    j["notes"] = code.notes;
    return j;
}

Json to_json(const EligibilityCertificate &cert) {
    Json j;
    j["contains_dual"] = cert.contains_dual;
    j["dual_doubly_even"] = cert.dual_doubly_even;
    j["c0_doubly_even"] = cert.c0_doubly_even;
    j["check_row_weights"] = cert.check_row_weights;
    j["lemma1_w"] = cert.lemma1_w ? Json(*cert.lemma1_w) : Json(nullptr);
    if (cert.lemma1_residues) {
        Json r = Json::object();
        for (const auto &[u, res] : *cert.lemma1_residues) {
            r[u] = res;
        }
        j["lemma1_residues"] = r;
        j["lemma1_congruent"] = cert.lemma1_congruent();
    }
    j["sampled_words"] = cert.sampled_words;
    j["sample_violations"] = cert.sample_violations;
    return j;
}

Json to_json(const CssCode &code, bool with_matrices) {
    Json j;
    j["label"] = code.label();
    j["n"] = code.n;
    j["k"] = code.k;
    j["d"] = code.d;
    j["distance_kind"] = distance_kind_name(code.distance_kind);
    j["w"] = code.w;
    j["w_source"] = code.w_source;
    j["origin"] = code.origin;
    j["leaders_certified"] = code.leaders_certified;
    j["mean_leader_weight"] = code.mean_leader_weight();
    LemmaConditions lc = check_lemma_conditions(code);
    j["lemma_conditions"] = {
        {"lemma2", lc.lemma2}, {"lemma3", lc.lemma3}, {"lemma4", lc.lemma4}, {"ddt_identity", lc.ddt_identity}};
    j["ddt_invertible"] = code.dd_inverse.has_value();
    j["certificate"] = to_json(code.certificate);
    if (with_matrices) {
        j["h_tilde"] = matrix_json(code.c0_generator);
        j["d_tilde"] = matrix_json(code.coset_leaders);
        j["stabilizer_x"] = matrix_json(code.stabilizer_x);
        j["stabilizer_z"] = matrix_json(code.stabilizer_z);
    }
    j["notes"] = code.notes;
    return j;
}

Json to_json(const BchConjectureReport &report) {
    Json j;
    j["m"] = report.m;
    j["n"] = (1 << report.m) - 1;
    j["holds"] = report.holds;
    Json entries = Json::array();
    for (const auto &e : report.entries) {
        entries.push_back({
            {"designed_distance", e.designed_distance},
            {"n", e.n},
            {"k_c", e.k_c},
            {"contains_dual", e.contains_dual},
            {"dual_doubly_even", e.dual_doubly_even},
            {"sampled_words", e.sampled_words},
            {"sample_violations", e.sample_violations},
        });
    }
    j["entries"] = entries;
    return j;
}

Json to_json(const LogicalActionReport &report) {
    Json j;
    j["logical_qubits"] = report.logical_qubits;
    j["max_deviation"] = finite(report.max_deviation);
    j["has_prediction"] = report.has_prediction;
    j["legitimate"] = report.legitimate;
    j["unitarity_deviation"] = finite(report.unitarity_deviation);
    j["max_norm_deviation"] = finite(report.max_norm_deviation);
    j["gate_applications"] = report.gate_applications;
    j["passed"] = report.passed();
    if (report.derived.size() <= 16) {
        j["derived"] = complex_matrix_json(report.derived);
        if (report.has_prediction) {
            j["predicted"] = complex_matrix_json(report.predicted);
        }
    }
    return j;
}

Json to_json(const LemmaReport &report) {
    Json j;
    j["lemma"] = report.lemma;
    j["passed"] = report.passed;
    j["mode"] = "simulation";
    if (report.w) {
        j["w"] = report.w;
        j["r0"] = report.r0;
        j["r1"] = report.r1;
        j["r"] = report.r;
    }
    if (!report.empirical_phases.empty()) {
        j["empirical_phases"] = report.empirical_phases;
    }
    Json checks = Json::array();
    for (const auto &c : report.checks) {
        Json cj = to_json(c.report);
        cj["name"] = c.name;
        cj["passed"] = c.passed;
        checks.push_back(cj);
    }
    j["checks"] = checks;
    j["notes"] = report.notes;
    return j;
}

Json to_json(const StabilizerCheck &check) {
    return {{"passed", check.passed}, {"max_deviation", check.max_deviation}, {"applications", check.applications}};
}

Json to_json(const Gadget &gadget) {
    Json j;
    j["name"] = gadget.name();
    j["kind"] = gadget_kind_name(gadget.kind);
    j["variant"] = gadget.variant;
    j["code"] = gadget.code ? gadget.code->label() : "";
    j["logical_indices"] = gadget.logical_indices;
    j["recoveries"] = gadget.recoveries;
    j["ancilla_blocks"] = gadget.ancilla_blocks;
    j["cat_repetitions"] = gadget.cat_repetitions;
    j["merged_measurements"] = gadget.merged_measurements();
    j["block_discipline"] = respects_block_discipline(gadget);
    auto ports = [](const std::vector<GadgetPort> &ps) {
        Json a = Json::array();
        for (const auto &p : ps) {
            a.push_back({{"block", p.block}, {"positions", p.positions}});
        }
        return a;
    };
    j["inputs"] = ports(gadget.inputs);
    j["outputs"] = ports(gadget.outputs);
    Json steps = Json::array();
    for (const auto &s : gadget.steps) {
        steps.push_back(s.str());
    }
    j["steps"] = steps;
    if (!gadget.ideal_bit.empty()) {
        j["ideal_selected_by"] = gadget.ideal_bit;
    }
    return j;
}

Json to_json(const GadgetSimulation &sim) {
    Json j;
    j["passed"] = sim.passed();
    j["branch_independent"] = sim.branch_independent();
    j["total_probability"] = sim.total_probability;
    j["max_deviation"] = finite(sim.max_deviation);
    j["raw_branches"] = sim.raw_branches;
    j["peak_branches"] = sim.peak_branches;
    j["peak_terms"] = sim.peak_terms;
    j["steps"] = sim.steps;
    Json leaves = Json::array();
    for (const auto &l : sim.leaves) {
        Json bits = Json::object();
        for (const auto &[name, b] : l.bits) {
            bits[name] = b;
        }
        leaves.push_back({
            {"bits", bits},
            {"probability", l.probability},
            {"deviation", finite(l.deviation)},
            {"leakage", l.leakage},
        });
    }
    j["leaves"] = leaves;
    j["action"] = to_json(sim.action);
    return j;
}

Json to_json(const TableRow &row) {
    Json j;
    j["code"] = row.code.label();
    j["n"] = row.code.n;
    j["k"] = row.code.k;
    j["d"] = row.code.d;
    j["w"] = row.code.w;
    j["plim"] = row.plim;
    j["gamma_max"] = real_or_null(row.gamma_max);
    j["epsilon_max"] = real_or_null(row.epsilon_max);
    j["scaleup"] = row.scaleup;
    j["p1"] = real_or_null(row.p1);
    j["feasible"] = row.feasible;
    j["name"] = row.code.name;
    j["w_source"] = row.code.w_source;
    j["p1_full_sum"] = real_or_null(row.p1_full);
    if (row.scaleup_finite_K) {
        j["scaleup_finite_K"] = *row.scaleup_finite_K;
    }
    j["round_trip"] = real_or_null(row.round_trip);
    if (row.double_failure) {
        const auto &df = *row.double_failure;
        j["double_failure"] = {
            {"amplified", df.amplified},
            {"wrong_zero_probability", df.wrong_zero_probability},
            {"critical_wrong_zero", finite(df.critical_wrong_zero)},
            {"contribution", df.contribution},
            {"holds", df.holds},
        };
    }
    if (row.gamma_max_unscaled) {
        j["gamma_max_unscaled"] = *row.gamma_max_unscaled;
        j["gamma_reduction"] = real_or_null(row.gamma_reduction);
        j["feasible_at_reduced_gamma"] = row.feasible_at_reduced_gamma.value_or(false);
    }
    if (!row.note.empty()) {
        j["note"] = row.note;
    }
    return j;
}

Json to_json(const RowComparison &cmp) {
    Json j;
    j["code"] = cmp.code;
    j["found"] = cmp.found;
    j["passed"] = cmp.passed;
    j["source"] = "embedded published table (P in 1e-14, gamma and epsilon in 1e-6)";
    Json cols = Json::array();
    for (const auto &c : cmp.columns) {
        cols.push_back({
            {"column", c.column},
            {"published", c.published},
            {"ours", c.ours},
            {"relative_error", finite(c.relative_error)},
            {"comparison", c.exact ? "exact after rounding" : "relative tolerance"},
            {"tolerance", c.tolerance},
            {"passed", c.passed},
        });
    }
    j["columns"] = cols;
    return j;
}

Json to_json(const P1Comparison &cmp) {
    return {
        {"n", cmp.n},
        {"gamma", cmp.gamma},
        {"published", cmp.published},
        {"closed_form", cmp.ours.closed_form},
        {"full_sum", cmp.ours.full_sum},
        {"closed_form_relative_error", cmp.closed_form_relative_error},
        {"full_sum_relative_error", cmp.full_sum_relative_error},
        {"tolerance", cmp.tolerance},
        {"within_tolerance", cmp.within_tolerance},
        {"discrepancy_flagged", cmp.discrepancy},
        {"sufficient_closed_form", cmp.ours.sufficient_closed_form},
        {"sufficient_full_sum", cmp.ours.sufficient_full_sum},
        {"threshold", cmp.ours.threshold},
    };
}

Json to_json(const OverheadReport &report) {
    Json j;
    j["g"] = report.g;
    j["s"] = report.s;
    j["P"] = report.P;
    j["plim"] = report.plim;
    j["P1"] = report.P1;
    j["P1_full_sum"] = report.P1_full;
    j["S"] = report.S.S;
    j["scaleup"] = report.S.asymptotic;
    j["accumulator_blocks"] = report.accumulator;
    j["verification_cx"] = report.verification_cx;
    j["feasible"] = report.feasible;
    if (report.gamma_max) {
        j["gamma_max"] = report.gamma_max->gamma_max;
        j["epsilon_max"] = report.gamma_max->epsilon_max;
    } else {
        j["gamma_max"] = nullptr;
        j["epsilon_max"] = nullptr;
    }
    j["double_failure_holds"] = report.double_failure.holds;
    return j;
}

std::string dump_report(const Json &j) {
    return j.dump(2) + "\n";
}

}  // namespace cssft
