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

#ifndef _CSSFT_OVERHEAD_TABLE1_H
#define _CSSFT_OVERHEAD_TABLE1_H

#include <optional>
#include <string>
#include <vector>

#include "cssft/overhead/overhead.h"

namespace cssft {

/// Code parameters the overhead table needs.
struct TableCode {
    std::string name;
    int n = 0;
    int k = 0;
    int d = 0;
    double w = 0;
    std::string w_source;

    std::string label() const;
};

/// The seven codes of the reference table, with w from the family rules:
/// 2^{m-1} for BCH, the starting minimum distance for codes derived from
/// extended QR codes.
std::vector<TableCode> reference_table_codes();

/// Published row, kept as printed so the number of digits is known.
/// P is in units of 1e-14, gamma and epsilon in units of 1e-6.
struct PublishedRow {
    std::string code;
    std::string P;
    std::string gamma;
    std::string epsilon;
    std::string scaleup;
};

const std::vector<PublishedRow> &published_table();
std::optional<PublishedRow> published_row(const std::string &label);

struct TableOptions {
    double KQ = DEFAULT_KQ;
    /// Multiplies KQ; 6561 = 3^8 for thousand-digit factoring.
    double kq_scale = 1;
    std::optional<double> epsilon_ratio;
    std::optional<double> K;
};

struct TableRow {
    TableCode code;
    double plim = 0;
    bool feasible = false;
    std::optional<double> gamma_max;
    std::optional<double> epsilon_max;
    /// (5n+4)/k.
    double scaleup = 0;
    /// S with the finite K, when one is given.
    std::optional<double> scaleup_finite_K;
    /// P1 closed form and full sum at gamma_max.
    std::optional<double> p1;
    std::optional<double> p1_full;
    /// Round-trip |P(γ_max) - plim| / plim.
    std::optional<double> round_trip;
    std::optional<DoubleFailureCheck> double_failure;
    /// With kq_scale != 1: γ_max at the unscaled KQ, the ratio of the two,
    /// and whether the scaled limit is met at unscaled γ_max divided by
    /// kq_scale^{1/(t+1)}.
    std::optional<double> gamma_max_unscaled;
    std::optional<double> gamma_reduction;
    std::optional<bool> feasible_at_reduced_gamma;
    std::string note;
};

/// Evaluates every code, in parallel. Infeasible rows are marked, not thrown.
std::vector<TableRow> overhead_table(const std::vector<TableCode> &codes, const TableOptions &options = {});
TableRow overhead_row(const TableCode &code, const TableOptions &options = {});

struct ColumnCheck {
    std::string column;
    std::string published;
    /// Our value rendered like the published one (same units and digits).
    std::string ours;
    double relative_error = 0;
    double tolerance = 0;
    /// Exact columns compare rendered strings; solved columns use tolerance.
    bool exact = false;
    bool passed = false;
};

struct RowComparison {
    std::string code;
    bool found = false;
    std::vector<ColumnCheck> columns;
    bool passed = false;
};

/// Tolerance for the solved gamma and epsilon columns.
inline constexpr double SOLVED_COLUMN_TOLERANCE = 0.40;

RowComparison compare_with_published(const TableRow &row, double tolerance = SOLVED_COLUMN_TOLERANCE);

/// Renders value / unit with the same number of decimals as `printed`.
std::string render_like(double value, double unit, const std::string &printed);

/// Published ancilla sufficiency figures.
struct P1Comparison {
    int n = 0;
    double gamma = 0;
    double published = 0;
    AncillaSufficiency ours;
    double closed_form_relative_error = 0;
    double full_sum_relative_error = 0;
    double tolerance = 0.35;
    bool within_tolerance = false;
    /// Closed form differs from the published value by more than 5%.
    bool discrepancy = false;
};

std::vector<P1Comparison> p1_published_checks();

/// CSV with header "code,P,gamma,epsilon,(5n+4)/k". Infeasible rows leave
/// gamma and epsilon empty.
std::string table_csv(const std::vector<TableRow> &rows);
std::string table_text(
    const std::vector<TableRow> &rows, bool compare = false, double tolerance = SOLVED_COLUMN_TOLERANCE);

/// Shortest round-trip-stable rendering with 10 significant digits.
std::string format_real(double v);

}  // namespace cssft

#endif
