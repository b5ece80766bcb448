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

#include "cssft/cssft.h"

#include <memory>
#include <string>
#include <vector>

#include "cssft/commands.h"
#include "cssft/error.h"
#include "cssft/overhead/overhead.h"
#include "cssft/registry.h"

struct cssft_code {
    std::shared_ptr<const cssft::CssCode> code;
    std::string label;
};

struct cssft_report {
    std::string json;
    std::string text;
    std::string csv;
    bool passed = false;
};

namespace {

thread_local std::string last_error;

template <typename F>
int guarded(F &&body) {
    last_error.clear();
    try {
        body();
        return CSSFT_OK;
    } catch (const cssft::Error &e) {
        last_error = e.what();
        return static_cast<int>(e.code());
    } catch (const std::bad_alloc &) {
        last_error = "Out of memory.";
        return CSSFT_INTERNAL;
    } catch (const std::exception &e) {
        last_error = e.what();
        return CSSFT_INTERNAL;
    }
}

void require(bool ok, const char *what) {
    if (!ok) {
        cssft::fail(cssft::ErrorCode::InvalidArgument, what);
    }
}

cssft::CssOptions css_options(const cssft_build_options *o) {
    cssft::CssOptions out;
    if (o) {
        if (o->max_dim) {
            out.max_dim = o->max_dim;
        }
        if (o->coset_budget) {
            out.coset_budget = o->coset_budget;
        }
    }
    return out;
}

cssft_code *wrap(cssft::CssCode code) {
    auto *h = new cssft_code;
    h->label = code.label();
    h->code = std::make_shared<const cssft::CssCode>(std::move(code));
    return h;
}

cssft_report *wrap(const cssft::CommandResult &r) {
    auto *h = new cssft_report;
    h->json = cssft::dump_report(r.report);
    h->text = r.text;
    h->csv = r.csv;
    h->passed = r.passed;
    return h;
}

cssft::OverheadParams params_from(const cssft_overhead_params *c) {
    require(c, "params is null.");
    cssft::OverheadParams p;
    p.n = c->n;
    p.k = c->k;
    p.d = c->d;
    p.w = c->w;
    if (c->mean_D_weight >= 0) {
        p.mean_D_weight = c->mean_D_weight;
    }
    if (c->K > 0) {
        p.K = c->K;
    }
    p.KQ = c->KQ > 0 ? c->KQ : cssft::DEFAULT_KQ;
    p.gamma = c->gamma;
    if (c->epsilon >= 0) {
        p.epsilon = c->epsilon;
    }
    if (c->epsilon_ratio >= 0) {
        p.epsilon_ratio = c->epsilon_ratio;
    }
    if (c->r >= 0) {
        p.r = c->r;
    }
    p.large_accumulator = c->large_accumulator != 0;
    return p;
}

std::string str_or(const char *s, const char *fallback = "") {
    return s ? std::string(s) : std::string(fallback);
}

}  // namespace

extern "C" {

const char *cssft_version(void) {
    return "1.0.0";
}

const char *cssft_status_name(int status) {
    if (status == CSSFT_OK) {
        return "Ok";
    }
    if (status < 1 || status > CSSFT_INTERNAL) {
        return "Unknown";
    }
    return cssft::error_code_name(static_cast<cssft::ErrorCode>(status));
}

const char *cssft_last_error(void) {
    return last_error.c_str();
}

int cssft_code_registry(const char *name, const cssft_build_options *options, cssft_code **out) {
    return guarded([&] {
        require(name && out, "name and out must be non-null.");
        *out = wrap(cssft::build_registry_code(name, css_options(options)));
    });
}

int cssft_code_bch(int m, int designed_distance, const cssft_build_options *options, cssft_code **out) {
    return guarded([&] {
        require(out, "out is null.");
        auto o = css_options(options);
        *out = wrap(cssft::css_from_classical(cssft::bch_code(m, designed_distance, o.max_dim), o));
    });
}

int cssft_code_reed_muller(int m, const cssft_build_options *options, cssft_code **out) {
    return guarded([&] {
        require(out, "out is null.");
        *out = wrap(cssft::quantum_reed_muller(m, css_options(options)));
    });
}

int cssft_code_extended_qr(int p, const cssft_build_options *options, cssft_code **out) {
    return guarded([&] {
        require(out, "out is null.");
        auto o = css_options(options);
        *out = wrap(cssft::css_from_classical(cssft::extended_qr_code(p, o.max_dim), o));
    });
}

int cssft_code_load(const char *path, const cssft_build_options *options, cssft_code **out) {
    return guarded([&] {
        require(path && out, "path and out must be non-null.");
        auto o = css_options(options);
        cssft::CssCode code = cssft::css_from_classical(cssft::load_code(path, o.max_dim), o);
        code.origin = std::string("file ") + path;
        *out = wrap(std::move(code));
    });
}

int cssft_code_resolve(const char *spec, const cssft_build_options *options, cssft_code **out) {
    return guarded([&] {
        require(spec && out, "spec and out must be non-null.");
        *out = wrap(cssft::resolve_code(spec, css_options(options)));
    });
}

int cssft_code_derive(const cssft_code *code, size_t row, cssft_code **out) {
    return guarded([&] {
        require(code && out, "code and out must be non-null.");
        *out = wrap(cssft::derive_smaller_code(*code->code, row));
    });
}

void cssft_code_free(cssft_code *code) {
    delete code;
}

int cssft_code_params(const cssft_code *code, size_t *n, size_t *k, size_t *d) {
    return guarded([&] {
        require(code, "code is null.");
        if (n) {
            *n = code->code->n;
        }
        if (k) {
            *k = code->code->k;
        }
        if (d) {
            *d = code->code->d;
        }
    });
}

int cssft_code_weight(const cssft_code *code, double *w) {
    return guarded([&] {
        require(code && w, "code and w must be non-null.");
        *w = code->code->w;
    });
}

const char *cssft_code_label(const cssft_code *code) {
    return code ? code->label.c_str() : "";
}

size_t cssft_registry_size(void) {
    return cssft::registry().size();
}

const char *cssft_registry_name(size_t index) {
    const auto &r = cssft::registry();
    return index < r.size() ? r[index].name.c_str() : nullptr;
}

const char *cssft_report_json(const cssft_report *report) {
    return report ? report->json.c_str() : "";
}

const char *cssft_report_text(const cssft_report *report) {
    return report ? report->text.c_str() : "";
}

const char *cssft_report_csv(const cssft_report *report) {
    return report ? report->csv.c_str() : "";
}

int cssft_report_passed(const cssft_report *report) {
    return report && report->passed ? 1 : 0;
}

void cssft_report_free(cssft_report *report) {
    delete report;
}

int cssft_build(const cssft_build_request *request, cssft_report **out) {
    return guarded([&] {
        require(request && out && request->family, "request, family and out must be non-null.");
        cssft::BuildRequest r;
        r.family = request->family;
        r.m = request->m;
        r.delta = request->delta;
        r.p = request->p;
        r.path = str_or(request->path);
        r.name = str_or(request->name);
        r.derive = request->derive;
        r.out_dir = str_or(request->out_dir);
        r.options = css_options(&request->options);
        *out = wrap(cssft::run_build(r));
    });
}

int cssft_code_report(const cssft_code *code, int with_matrices, cssft_report **out) {
    return guarded([&] {
        require(code && out, "code and out must be non-null.");
        cssft::CommandResult r;
        r.report["code"] = cssft::to_json(*code->code, with_matrices != 0);
        r.text = code->label + "\n";
        *out = wrap(r);
    });
}

int cssft_verify(
    const cssft_code *code, const int *lemmas, size_t lemma_count, int w, int stabilizers, cssft_report **out) {
    return guarded([&] {
        require(code && out && (lemmas || lemma_count == 0), "code, lemmas and out must be non-null.");
        cssft::VerifyRequest r;
        r.lemmas.assign(lemmas, lemmas + lemma_count);
        if (w > 0) {
            r.w = w;
        }
        r.stabilizers = stabilizers != 0;
        *out = wrap(cssft::run_verify(code->code, r));
    });
}

int cssft_simulate_gadget(
    const cssft_code *code, const char *kind, const size_t *indices, size_t index_count, const char *variant,
    const char *op, uint64_t budget, cssft_report **out) {
    return guarded([&] {
        require(code && kind && out && (indices || index_count == 0), "code, kind and out must be non-null.");
        cssft::GadgetRequest r;
        r.kind = kind;
        r.indices.assign(indices, indices + index_count);
        r.options.variant = str_or(variant);
        std::string o = str_or(op, "x");
        if (o == "x" || o == "X") {
            r.options.op = cssft::LogicalOperator::X;
        } else if (o == "z" || o == "Z") {
            r.options.op = cssft::LogicalOperator::Z;
        } else {
            cssft::fail(cssft::ErrorCode::InvalidArgument, "op must be x or z.");
        }
        if (budget) {
            r.budget = budget;
        }
        *out = wrap(cssft::run_simulate_gadget(code->code, r));
    });
}

void cssft_overhead_params_init(cssft_overhead_params *params) {
    if (!params) {
        return;
    }
    *params = cssft_overhead_params{};
    params->mean_D_weight = -1;
    params->K = -1;
    params->KQ = cssft::DEFAULT_KQ;
    params->epsilon = -1;
    params->epsilon_ratio = -1;
    params->r = -1;
}

int cssft_error_opportunities(const cssft_overhead_params *params, uint64_t *g, double *s) {
    return guarded([&] {
        require(g && s, "g and s must be non-null.");
        auto p = params_from(params);
        p.validate();
        auto eo = cssft::error_opportunities(p);
        *g = eo.g;
        *s = eo.s;
    });
}

int cssft_failure_probability(const cssft_overhead_params *params, double *P) {
    return guarded([&] {
        require(P, "P is null.");
        *P = cssft::failure_probability(params_from(params));
    });
}

int cssft_plim(int k, double K, double Q, double *plim) {
    return guarded([&] {
        require(plim, "plim is null.");
        *plim = cssft::plim(k, K, Q);
    });
}

int cssft_scale_up(int n, int k, double K, double *S, double *asymptotic) {
    return guarded([&] {
        require(S && asymptotic, "S and asymptotic must be non-null.");
        auto s = cssft::scale_up(n, k, K > 0 ? std::optional<double>(K) : std::nullopt);
        *S = s.S;
        *asymptotic = s.asymptotic;
    });
}

int cssft_solve_gamma_max(const cssft_overhead_params *params, double *gamma_max, double *epsilon_max) {
    return guarded([&] {
        require(gamma_max && epsilon_max, "outputs must be non-null.");
        auto g = cssft::solve_gamma_max(params_from(params));
        *gamma_max = g.gamma_max;
        *epsilon_max = g.epsilon_max;
    });
}

int cssft_ancilla_sufficiency(
    const cssft_overhead_params *params, double gamma, double *closed_form, double *full_sum, int *sufficient) {
    return guarded([&] {
        require(closed_form && full_sum && sufficient, "outputs must be non-null.");
        auto a = cssft::ancilla_sufficiency(params_from(params), gamma);
        *closed_form = a.closed_form;
        *full_sum = a.full_sum;
        *sufficient = a.sufficient_closed_form ? 1 : 0;
    });
}

int cssft_rotation_synthesis(double alpha, double *phi, double *cos_phi) {
    return guarded([&] {
        require(phi && cos_phi, "outputs must be non-null.");
        auto r = cssft::rotation_synthesis(alpha);
        *phi = r.phi;
        *cos_phi = r.cos_phi;
    });
}

int cssft_overhead_evaluate(const cssft_overhead_params *params, cssft_report **out) {
    return guarded([&] {
        require(out, "out is null.");
        auto rep = cssft::evaluate_overhead(params_from(params));
        cssft::CommandResult r;
        r.report["overhead"] = cssft::to_json(rep);
        r.passed = rep.feasible;
        r.text = "P = " + cssft::format_real(rep.P) + ", plim = " + cssft::format_real(rep.plim) +
                 (rep.feasible ? " (feasible)\n" : " (infeasible)\n");
        *out = wrap(r);
    });
}

int cssft_overhead_table(
    const char *const *codes, size_t count, double KQ, double kq_scale, double epsilon_ratio, int compare,
    double tolerance, cssft_report **out) {
    return guarded([&] {
        require(out && (codes || count == 0), "codes and out must be non-null.");
        cssft::OverheadRequest r;
        for (size_t i = 0; i < count; i++) {
            require(codes[i], "code name is null.");
            std::string spec = codes[i];
            if (cssft::find_registry_entry(spec)) {
                r.codes.push_back(cssft::registry_table_code(spec));
            } else {
                cssft::CssCode c = cssft::resolve_code(spec);
                r.codes.push_back(
                    {spec, static_cast<int>(c.n), static_cast<int>(c.k), static_cast<int>(c.d), c.w, c.w_source});
            }
        }
        if (KQ > 0) {
            r.table.KQ = KQ;
        }
        if (kq_scale > 0) {
            r.table.kq_scale = kq_scale;
        }
        if (epsilon_ratio > 0) {
            r.table.epsilon_ratio = epsilon_ratio;
        }
        r.compare = compare != 0;
        if (tolerance > 0) {
            r.tolerance = tolerance;
        }
        *out = wrap(cssft::run_overhead(r));
    });
}

size_t cssft_reference_table_size(void) {
    return cssft::reference_table_codes().size();
}

const char *cssft_reference_table_name(size_t index) {
    static const std::vector<cssft::TableCode> codes = cssft::reference_table_codes();
    return index < codes.size() ? codes[index].name.c_str() : nullptr;
}

int cssft_bch_conjecture(int m_min, int m_max, uint64_t samples, cssft_report **out) {
    return guarded([&] {
        require(out, "out is null.");
        *out = wrap(cssft::run_bch_conjecture(m_min, m_max, samples ? samples : 4096));
    });
}

}  // extern "C"
