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

#ifndef _CSSFT_OVERHEAD_OVERHEAD_H
#define _CSSFT_OVERHEAD_OVERHEAD_H

#include <cstdint>
#include <optional>

namespace cssft {

/// Per-algorithm size used by default: K * Q for factoring a 430-bit number.
inline constexpr double DEFAULT_KQ = 2.15e12;

/// Inputs to the recovery failure model.
struct OverheadParams {
    int n = 0;
    int k = 0;
    int d = 0;
    /// Mean weight of a row of H~.
    double w = 0;
    /// Mean weight of a row of D~; d + 1 when unset.
    std::optional<double> mean_D_weight;
    /// Logical qubits K. Unset means K -> infinity for the scale-up.
    std::optional<double> K;
    /// Product K * Q.
    double KQ = DEFAULT_KQ;
    double gamma = 0;
    /// Memory error per time step. When unset, gamma * epsilon_ratio.
    std::optional<double> epsilon;
    /// epsilon / gamma; 1/n when unset.
    std::optional<double> epsilon_ratio;
    /// Syndrome repetitions; t + 1 when unset.
    std::optional<int> r;
    /// Size the accumulator as ~K/4k blocks instead of 3.
    bool large_accumulator = false;

    int t() const;
    int repetitions() const;
    double mean_leader_weight() const;
    double ratio() const;
    double memory_error() const;
    /// Checks ranges; throws InvalidParameters.
    void validate() const;
};

struct ScaleUp {
    /// (5n+4)/k (1 + 3k/K); equal to `asymptotic` when K is unset.
    double S = 0;
    /// The K -> infinity value (5n+4)/k.
    double asymptotic = 0;
};

/// Throws InvalidParameters unless k >= 1 and K >= k.
ScaleUp scale_up(int n, int k, std::optional<double> K = std::nullopt);

/// Number of accumulator blocks: 3, or ceil(K/4k) for the larger sizing.
double accumulator_blocks(int k, std::optional<double> K, bool large);

struct ErrorOpportunities {
    uint64_t g = 0;
    /// Can be a half-integer, so kept as a real.
    double s = 0;
};

/// g = n(4r+1), s = n((w+2)(n-k)/2 + (mean_D+1)k + n(2+r/2)).
ErrorOpportunities error_opportunities(const OverheadParams &p);

/// Per-opportunity rate 2γ/3 + (s/g)(2ε/3).
double opportunity_rate(uint64_t g, double s, double gamma, double epsilon);

/// 2 * sum_{i=from}^{g} C(g,i) q^i in log space. Stops once terms fall
/// below 1e-30 of the running sum.
double binomial_tail_sum(uint64_t g, uint64_t from, double q);

/// Failure probability of one block per recovery.
double failure_probability(const OverheadParams &p);
/// Same, with g, s and t given directly.
double failure_probability(uint64_t g, double s, int t, double gamma, double epsilon);

/// k / (8KQ).
double plim(int k, double K, double Q);
double plim_kq(int k, double KQ);

struct GammaMax {
    double gamma_max = 0;
    double epsilon_max = 0;
    double P = 0;
    double plim = 0;
    int iterations = 0;
    /// Even γ = 1e-1 meets the limit; gamma_max is the upper bracket.
    bool capped = false;
};

/// Bisection on γ in [1e-12, 1e-1] with ε = γ * ratio until P matches plim
/// within relative 1e-6. Throws Infeasible when γ = 1e-12 already fails.
GammaMax solve_gamma_max(const OverheadParams &p);

struct AncillaSufficiency {
    double gamma = 0;
    /// 32 n r γ / 3.
    double closed_form = 0;
    /// Failure sum starting from i = 1.
    double full_sum = 0;
    /// Fraction of ancillas the accounting allows to be needed: 2/7.
    double threshold = 2.0 / 7.0;
    bool sufficient_closed_form = false;
    bool sufficient_full_sum = false;
};

AncillaSufficiency ancilla_sufficiency(const OverheadParams &p, double gamma);

struct RotationSynthesis {
    double alpha = 0;
    double cos_phi = 0;
    double phi = 0;
};

/// Two Toffolis, measurements and P(α) give P(φ) with
/// cos φ = (6 + 10 cos α) / (10 + 6 cos α).
RotationSynthesis rotation_synthesis(double alpha);
/// The α = π/2 case, cos φ = 3/5.
RotationSynthesis rotation_base_case();

/// Two recoveries without correction in between accumulate about
/// 2^{t+1} P; weighted by the chance of a wrongly zero syndrome this must
/// stay below the limit.
struct DoubleFailureCheck {
    double amplified = 0;
    double wrong_zero_probability = 0;
    double bound = 0;
    double contribution = 0;
    double plim = 0;
    /// Largest wrong-zero probability that keeps the contribution under plim.
    double critical_wrong_zero = 0;
    bool holds = false;
};

/// `wrong_zero` defaults to the bound 2^{-(t+1)}.
DoubleFailureCheck double_failure_check(const OverheadParams &p, std::optional<double> wrong_zero = std::nullopt);

/// Everything the model says about one parameter set.
struct OverheadReport {
    uint64_t g = 0;
    double s = 0;
    double P = 0;
    double plim = 0;
    double P1 = 0;
    double P1_full = 0;
    ScaleUp S;
    double accumulator = 3;
    /// CX count to verify one ancilla, w(n-k)/2 + mean_D k.
    double verification_cx = 0;
    std::optional<GammaMax> gamma_max;
    bool feasible = false;
    DoubleFailureCheck double_failure;
};

/// Evaluates P at p.gamma and solves for γ_max. Infeasibility is recorded,
/// not thrown.
OverheadReport evaluate_overhead(const OverheadParams &p);

}  // namespace cssft

#endif
