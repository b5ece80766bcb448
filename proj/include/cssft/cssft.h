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

/* C interface to the cssft library.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every fallible call returns a cssft_status; on failure the message is
 * available from cssft_last_error() on the same thread until the next call.
 */
#ifndef CSSFT_CSSFT_H
#define CSSFT_CSSFT_H

#include <stddef.h>
#include <stdint.h>

#if defined(CSSFT_BUILDING_LIBRARY)
#define CSSFT_API __attribute__((visibility("default")))
#else
#define CSSFT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. Values match the library's internal error categories and
 * the CLI exit codes. */
typedef enum cssft_status {
    CSSFT_OK = 0,
    CSSFT_INVALID_ARGUMENT = 1,
    CSSFT_INVALID_PARAMETERS = 2,
    CSSFT_DIMENSION_TOO_LARGE = 3,
    CSSFT_NOT_DUAL_CONTAINING = 4,
    CSSFT_SINGULAR_DDT = 5,
    CSSFT_WEIGHT_CONGRUENCE_VIOLATED = 6,
    CSSFT_LEMMA_UNSUPPORTED = 7,
    CSSFT_UNSUPPORTED_ON_STATE = 8,
    CSSFT_INFEASIBLE = 9,
    CSSFT_IO = 10,
    CSSFT_PARSE = 11,
    CSSFT_CHECK_FAILED = 12,
    CSSFT_INTERNAL = 13
} cssft_status;

typedef struct cssft_code cssft_code;
typedef struct cssft_report cssft_report;

CSSFT_API const char *cssft_version(void);
CSSFT_API const char *cssft_status_name(int status);
/* Message of the last failed call on this thread, or "". */
CSSFT_API const char *cssft_last_error(void);

/* Limits for constructions: enumeration dimension (0 = default) and coset
 * search budget (0 = default). */
typedef struct cssft_build_options {
    size_t max_dim;
    uint64_t coset_budget;
} cssft_build_options;

/* Codes. `options` may be NULL. */
CSSFT_API int cssft_code_registry(const char *name, const cssft_build_options *options, cssft_code **out);
CSSFT_API int cssft_code_bch(int m, int designed_distance, const cssft_build_options *options, cssft_code **out);
CSSFT_API int cssft_code_reed_muller(int m, const cssft_build_options *options, cssft_code **out);
CSSFT_API int cssft_code_extended_qr(int p, const cssft_build_options *options, cssft_code **out);
CSSFT_API int cssft_code_load(const char *path, const cssft_build_options *options, cssft_code **out);
/* Registry name or code file path. */
CSSFT_API int cssft_code_resolve(const char *spec, const cssft_build_options *options, cssft_code **out);
/* [[n-1, k+1]] code from deleting H~ row `row`. */
CSSFT_API int cssft_code_derive(const cssft_code *code, size_t row, cssft_code **out);
CSSFT_API void cssft_code_free(cssft_code *code);
CSSFT_API int cssft_code_params(const cssft_code *code, size_t *n, size_t *k, size_t *d);
CSSFT_API int cssft_code_weight(const cssft_code *code, double *w);
/* Label such as "[[7,1,3]]"; owned by the handle. */
CSSFT_API const char *cssft_code_label(const cssft_code *code);

/* Names of the registry codes, in order. */
CSSFT_API size_t cssft_registry_size(void);
CSSFT_API const char *cssft_registry_name(size_t index);

/* Reports: JSON plus a human summary and, for tables, CSV. Strings are
 * owned by the report. */
CSSFT_API const char *cssft_report_json(const cssft_report *report);
CSSFT_API const char *cssft_report_text(const cssft_report *report);
CSSFT_API const char *cssft_report_csv(const cssft_report *report);
/* 1 when every requested check passed. */
CSSFT_API int cssft_report_passed(const cssft_report *report);
CSSFT_API void cssft_report_free(cssft_report *report);

/* Build request for cssft_build. family: "bch", "rm", "qr", "load" or
 * "registry". Unused fields are ignored. */
typedef struct cssft_build_request {
    const char *family;
    int m;
    int delta;
    int p;
    const char *path;
    const char *name;
    int derive;
    /* NULL or "" to skip writing files. */
    const char *out_dir;
    cssft_build_options options;
} cssft_build_request;

CSSFT_API int cssft_build(const cssft_build_request *request, cssft_report **out);
CSSFT_API int cssft_code_report(const cssft_code *code, int with_matrices, cssft_report **out);

/* lemmas: values in 1..5. w <= 0 means unset. */
CSSFT_API int cssft_verify(
    const cssft_code *code, const int *lemmas, size_t lemma_count, int w, int stabilizers, cssft_report **out);

/* kind: merged_measure_recover, intra_block_cx, teleport, toffoli,
 * switch_out, switch_in. variant and op ("x"/"z") may be NULL. budget 0
 * means default. */
CSSFT_API int cssft_simulate_gadget(
    const cssft_code *code, const char *kind, const size_t *indices, size_t index_count, const char *variant,
    const char *op, uint64_t budget, cssft_report **out);

/* Overhead model inputs. Fields set to a negative value take the model
 * default (mean_D_weight: d+1; epsilon: gamma*epsilon_ratio; epsilon_ratio:
 * 1/n; r: t+1; K: infinity). */
typedef struct cssft_overhead_params {
    int n;
    int k;
    int d;
    double w;
    double mean_D_weight;
    double K;
    double KQ;
    double gamma;
    double epsilon;
    double epsilon_ratio;
    int r;
    int large_accumulator;
} cssft_overhead_params;

/* Fills defaults: all optional fields negative, KQ = 2.15e12. */
CSSFT_API void cssft_overhead_params_init(cssft_overhead_params *params);
CSSFT_API int cssft_error_opportunities(const cssft_overhead_params *params, uint64_t *g, double *s);
CSSFT_API int cssft_failure_probability(const cssft_overhead_params *params, double *P);
CSSFT_API int cssft_plim(int k, double K, double Q, double *plim);
CSSFT_API int cssft_scale_up(int n, int k, double K, double *S, double *asymptotic);
CSSFT_API int cssft_solve_gamma_max(const cssft_overhead_params *params, double *gamma_max, double *epsilon_max);
CSSFT_API int cssft_ancilla_sufficiency(
    const cssft_overhead_params *params, double gamma, double *closed_form, double *full_sum, int *sufficient);
CSSFT_API int cssft_rotation_synthesis(double alpha, double *phi, double *cos_phi);
CSSFT_API int cssft_overhead_evaluate(const cssft_overhead_params *params, cssft_report **out);

/* Table over codes given as registry names or file paths. KQ <= 0 means
 * 2.15e12, kq_scale <= 0 means 1, epsilon_ratio <= 0 means 1/n and
 * tolerance <= 0 means 0.4 for the solved columns. */
CSSFT_API int cssft_overhead_table(
    const char *const *codes, size_t count, double KQ, double kq_scale, double epsilon_ratio, int compare,
    double tolerance, cssft_report **out);
/* The seven reference codes. */
CSSFT_API size_t cssft_reference_table_size(void);
CSSFT_API const char *cssft_reference_table_name(size_t index);

CSSFT_API int cssft_bch_conjecture(int m_min, int m_max, uint64_t samples, cssft_report **out);

#ifdef __cplusplus
}
#endif

#endif
