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

#include <cstdlib>
#include <sstream>

#include "cssft/codes/classical_code.h"
#include "cssft/error.h"
#include "cssft/gf2/matrix_io.h"

namespace cssft {

namespace {

bool header_value(const std::string &comment, const std::string &key, std::string &out) {
    if (comment.rfind(key + ":", 0) != 0) {
        return false;
    }
    std::string v = comment.substr(key.size() + 1);
    size_t a = v.find_first_not_of(" \t");
    size_t b = v.find_last_not_of(" \t");
    out = a == std::string::npos ? "" : v.substr(a, b - a + 1);
    return true;
}

size_t parse_count(const std::string &s, const std::string &key) {
    char *end = nullptr;
    unsigned long long v = std::strtoull(s.c_str(), &end, 10);
    if (s.empty() || *end != '\0') {
        fail(ErrorCode::Parse, "Header '" + key + "' is not a non-negative integer.");
    }
    return (size_t)v;
}

}  // namespace

ClassicalCode parse_code_text(const std::string &text, size_t max_dim) {
    MatrixText mt = parse_matrix_text(text);
    std::string kind = "generator";
    std::optional<size_t> n_claim, k_claim, d_claim;
    std::optional<double> w_claim;
    for (const auto &c : mt.comments) {
        std::string v;
        if (header_value(c, "n", v)) {
            n_claim = parse_count(v, "n");
        } else if (header_value(c, "k_c", v)) {
            k_claim = parse_count(v, "k_c");
        } else if (header_value(c, "d", v)) {
            d_claim = parse_count(v, "d");
        } else if (header_value(c, "w", v)) {
            char *end = nullptr;
            double w = std::strtod(v.c_str(), &end);
            if (v.empty() || *end != '\0' || w <= 0) {
                fail(ErrorCode::Parse, "Header 'w' is not a positive number.");
            }
            w_claim = w;
        } else if (header_value(c, "kind", v)) {
            if (v != "generator" && v != "check") {
                fail(ErrorCode::Parse, "Header 'kind' must be 'generator' or 'check'.");
            }
            kind = v;
        }
    }
    if (mt.matrix.num_cols() == 0) {
        fail(ErrorCode::Parse, "Code file contains no matrix rows.");
    }
    if (n_claim.has_value() && *n_claim != mt.matrix.num_cols()) {
        fail(ErrorCode::Parse, "Header n does not match the row length.");
    }
    ClassicalCode code = kind == "generator" ? code_from_generator(mt.matrix, CodeFamily::UserSupplied, {})
                                             : code_from_check(mt.matrix, CodeFamily::UserSupplied, {});
    if (k_claim.has_value() && *k_claim != code.k) {
        fail(
            ErrorCode::InvalidParameters,
            "Header k_c = " + std::to_string(*k_claim) + " but the matrix gives " + std::to_string(code.k) + ".");
    }
    code.d = 0;
    code.distance_kind = DistanceKind::Bound;
    try_exact_distance(code, max_dim);
    if (code.distance_kind == DistanceKind::Exact) {
        if (d_claim.has_value() && *d_claim != code.d) {
            fail(
                ErrorCode::InvalidParameters,
                "Header d = " + std::to_string(*d_claim) + " but enumeration gives " + std::to_string(code.d) + ".");
        }
    } else if (d_claim.has_value()) {
        code.d = *d_claim;
        code.distance_kind = DistanceKind::Claimed;
    }
    if (w_claim.has_value()) {
        code.w = *w_claim;
        code.w_source = "claimed in code file";
    } else {
        double total = 0;
        for (size_t w : code.check.row_weights()) {
            total += (double)w;
        }
        code.w = code.check.empty() ? 0 : total / (double)code.check.num_rows();
        code.w_source = "measured mean check-row weight";
    }
    return code;
}

ClassicalCode load_code(const std::string &path, size_t max_dim) {
    MatrixText probe = read_matrix_file(path);
    std::string text = format_matrix_text(probe.matrix, probe.comments);
    return parse_code_text(text, max_dim);
}

std::string format_code_text(const ClassicalCode &code) {
    std::ostringstream w;
    w.precision(17);
    w << code.w;
    std::vector<std::string> header = {
        "n: " + std::to_string(code.n),
        "k_c: " + std::to_string(code.k),
        "w: " + w.str(),
        "kind: generator",
    };
    if (code.distance_kind != DistanceKind::Bound) {
        header.insert(header.begin() + 2, "d: " + std::to_string(code.d));
    }
    return format_matrix_text(code.generator, header);
}

}  // namespace cssft
