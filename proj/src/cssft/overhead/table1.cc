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

#include "cssft/overhead/table1.h"

#include <cmath>
#include <cstdio>
#include <future>
#include <sstream>

#include "cssft/error.h"

namespace cssft {

namespace {

int decimals_of(const std::string &printed) {
    size_t dot = printed.find('.');
    return dot == std::string::npos ? 0 : static_cast<int>(printed.size() - dot - 1);
}

std::string fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

ColumnCheck exact_column(const std::string &name, const std::string &printed, double value, double unit) {
    ColumnCheck c;
    c.column = name;
    c.published = printed;
    c.ours = render_like(value, unit, printed);
    c.exact = true;
    double pub = std::stod(printed);
    c.relative_error = std::abs(value / unit - pub) / pub;
    c.passed = c.ours == printed;
    return c;
}

ColumnCheck solved_column(
    const std::string &name, const std::string &printed, std::optional<double> value, double unit, double tol) {
    ColumnCheck c;
    c.column = name;
    c.published = printed;
    c.tolerance = tol;
    double pub = std::stod(printed);
    if (!value) {
        c.ours = "infeasible";
        c.relative_error = INFINITY;
        return c;
    }
    c.ours = render_like(*value, unit, printed);
    c.relative_error = std::abs(*value / unit - pub) / pub;
    c.passed = c.relative_error <= tol;
    return c;
}

}  // namespace

std::string TableCode::label() const {
    return "[[" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(d) + "]]";
}

std::vector<TableCode> reference_table_codes() {
    return {
        {"qr99", 99, 5, 15, 20, "minimum distance of the [104,52,20] extended QR code"},
        {"bch127_29", 127, 29, 15, 64, "2^(m-1) BCH check-row weight"},
        {"bch255_143", 255, 143, 15, 128, "2^(m-1) BCH check-row weight"},
        {"bch127_43", 127, 43, 13, 64, "2^(m-1) BCH check-row weight"},
        {"bch63_27", 63, 27, 7, 32, "2^(m-1) BCH check-row weight"},
        {"qr47", 47, 1, 11, 12, "minimum distance of the [48,24,12] extended QR code"},
        {"qr79", 79, 1, 15, 16, "minimum distance of the [80,40,16] extended QR code"},
    };
}

const std::vector<PublishedRow> &published_table() {
    static const std::vector<PublishedRow> rows = {
        {"[[99,5,15]]", "29", "28", "0.28", "100"},   {"[[127,29,15]]", "169", "20", "0.16", "22"},
        {"[[255,143,15]]", "831", "11", "0.04", "9"}, {"[[127,43,13]]", "250", "13", "0.10", "15"},
        {"[[63,27,7]]", "157", "1.4", "0.02", "12"},  {"[[47,1,11]]", "5.8", "14", "0.30", "239"},
        {"[[79,1,15]]", "5.8", "30", "0.38", "399"},
    };
    return rows;
}

std::optional<PublishedRow> published_row(const std::string &label) {
    for (const auto &r : published_table()) {
        if (r.code == label) {
            return r;
        }
    }
    return std::nullopt;
}

TableRow overhead_row(const TableCode &code, const TableOptions &options) {
    if (!(options.kq_scale > 0)) {
        fail(ErrorCode::InvalidParameters, "kq_scale must be positive.");
    }
    OverheadParams p;
    p.n = code.n;
    p.k = code.k;
    p.d = code.d;
    p.w = code.w;
    p.KQ = options.KQ * options.kq_scale;
    p.epsilon_ratio = options.epsilon_ratio;
    p.K = options.K;
    p.validate();

    TableRow row;
    row.code = code;
    row.plim = plim_kq(code.k, p.KQ);
    if (code.k >= 1) {
        ScaleUp s = scale_up(code.n, code.k, options.K);
        row.scaleup = s.asymptotic;
        if (options.K) {
            row.scaleup_finite_K = s.S;
        }
    }
    try {
        GammaMax g = solve_gamma_max(p);
        row.feasible = true;
        row.gamma_max = g.gamma_max;
        row.epsilon_max = g.epsilon_max;
        row.round_trip = std::abs(g.P - g.plim) / g.plim;
        AncillaSufficiency a = ancilla_sufficiency(p, g.gamma_max);
        row.p1 = a.closed_form;
        row.p1_full = a.full_sum;
        p.gamma = g.gamma_max;
        row.double_failure = double_failure_check(p);
        if (g.capped) {
            row.note = "limit met at the upper bracket gamma = 0.1";
        }
        if (options.kq_scale != 1) {
            OverheadParams base = p;
            base.KQ = options.KQ;
            base.gamma = 0;
            GammaMax g0 = solve_gamma_max(base);
            row.gamma_max_unscaled = g0.gamma_max;
            row.gamma_reduction = g0.gamma_max / g.gamma_max;
            OverheadParams reduced = p;
            reduced.gamma = g0.gamma_max * std::pow(options.kq_scale, -1.0 / (p.t() + 1));
            row.feasible_at_reduced_gamma = failure_probability(reduced) <= row.plim;
        }
    } catch (const Error &e) {
        if (e.code() != ErrorCode::Infeasible) {
            throw;
        }
        row.feasible = false;
        row.note = e.what();
    }
    return row;
}

std::vector<TableRow> overhead_table(const std::vector<TableCode> &codes, const TableOptions &options) {
    std::vector<std::future<TableRow>> jobs;
    jobs.reserve(codes.size());
    for (const auto &c : codes) {
        jobs.push_back(std::async(std::launch::async, [&c, &options] { return overhead_row(c, options); }));
    }
    std::vector<TableRow> rows;
    rows.reserve(codes.size());
    for (auto &j : jobs) {
        rows.push_back(j.get());
    }
    return rows;
}

std::string render_like(double value, double unit, const std::string &printed) {
    return fixed(value / unit, decimals_of(printed));
}

RowComparison compare_with_published(const TableRow &row, double tolerance) {
    RowComparison out;
    out.code = row.code.label();
    auto pub = published_row(out.code);
    if (!pub) {
        return out;
    }
    out.found = true;
    out.columns.push_back(exact_column("P", pub->P, row.plim, 1e-14));
    out.columns.push_back(solved_column("gamma", pub->gamma, row.gamma_max, 1e-6, tolerance));
    out.columns.push_back(solved_column("epsilon", pub->epsilon, row.epsilon_max, 1e-6, tolerance));
    out.columns.push_back(exact_column("(5n+4)/k", pub->scaleup, row.scaleup, 1));
    out.passed = true;
    for (const auto &c : out.columns) {
        out.passed = out.passed && c.passed;
    }
    return out;
}

std::vector<P1Comparison> p1_published_checks() {
    struct Ref {
        int n, k, d;
        double w, gamma, published;
    };
    const Ref refs[] = {{127, 29, 15, 64, 2e-5, 0.25}, {255, 143, 15, 128, 1.1e-5, 0.31}};
    std::vector<P1Comparison> out;
    for (const auto &r : refs) {
        OverheadParams p;
        p.n = r.n;
        p.k = r.k;
        p.d = r.d;
        p.w = r.w;
        P1Comparison c;
        c.n = r.n;
        c.gamma = r.gamma;
        c.published = r.published;
        c.ours = ancilla_sufficiency(p, r.gamma);
        c.closed_form_relative_error = std::abs(c.ours.closed_form - r.published) / r.published;
        c.full_sum_relative_error = std::abs(c.ours.full_sum - r.published) / r.published;
        c.within_tolerance = c.closed_form_relative_error <= c.tolerance;
        c.discrepancy = c.closed_form_relative_error > 0.05;
        out.push_back(c);
    }
    return out;
}

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string table_csv(const std::vector<TableRow> &rows) {
    std::ostringstream out;
    out << "code,P,gamma,epsilon,(5n+4)/k\n";
    for (const auto &r : rows) {
        out << '"' << r.code.label() << "\"," << format_real(r.plim) << ',';
        out << (r.gamma_max ? format_real(*r.gamma_max) : "") << ',';
        out << (r.epsilon_max ? format_real(*r.epsilon_max) : "") << ',';
        out << format_real(r.scaleup) << '\n';
    }
    return out.str();
}

std::string table_text(const std::vector<TableRow> &rows, bool compare, double tolerance) {
    std::ostringstream out;
    char buf[256];
    std::snprintf(
        buf, sizeof buf, "%-16s %10s %10s %10s %9s\n", "code", "P(1e-14)", "gamma(1e-6)", "eps(1e-6)", "(5n+4)/k");
    out << buf;
    for (const auto &r : rows) {
        std::string g = r.gamma_max ? fixed(*r.gamma_max / 1e-6, 2) : "infeasible";
        std::string e = r.epsilon_max ? fixed(*r.epsilon_max / 1e-6, 3) : "-";
        std::snprintf(
            buf, sizeof buf, "%-16s %10s %10s %10s %9s\n", r.code.label().c_str(), fixed(r.plim / 1e-14, 2).c_str(),
            g.c_str(), e.c_str(), fixed(r.scaleup, 1).c_str());
        out << buf;
        if (compare) {
            RowComparison c = compare_with_published(r, tolerance);
            if (!c.found) {
                out << "    (no published row)\n";
                continue;
            }
            for (const auto &col : c.columns) {
                std::snprintf(
                    buf, sizeof buf, "    %-9s published %-6s ours %-8s rel %.3f %s\n", col.column.c_str(),
                    col.published.c_str(), col.ours.c_str(), col.relative_error, col.passed ? "ok" : "MISMATCH");
                out << buf;
            }
        }
    }
    return out.str();
}

}  // namespace cssft
