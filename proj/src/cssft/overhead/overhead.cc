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

#include "cssft/overhead/overhead.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "cssft/error.h"

namespace cssft {

namespace {

constexpr double GAMMA_LO = 1e-12;
constexpr double GAMMA_HI = 1e-1;
constexpr double SOLVE_RTOL = 1e-6;
constexpr double TRUNCATION = 1e-30;

double rel(double a, double b) {
    return std::abs(a - b) / std::abs(b);
}

}  // namespace

int OverheadParams::t() const {
    return (d - 1) / 2;
}

int OverheadParams::repetitions() const {
    return r.value_or(t() + 1);
}

double OverheadParams::mean_leader_weight() const {
    return mean_D_weight.value_or(d + 1.0);
}

double OverheadParams::ratio() const {
    return epsilon_ratio.value_or(1.0 / n);
}

double OverheadParams::memory_error() const {
    return epsilon.value_or(gamma * ratio());
}

void OverheadParams::validate() const {
    if (n < 1 || k < 0 || k > n || d < 1) {
        fail(ErrorCode::InvalidParameters, "Code parameters need n >= 1, 0 <= k <= n and d >= 1.");
    }
    if (w < 0 || mean_leader_weight() < 0) {
        fail(ErrorCode::InvalidParameters, "Row weights must be non-negative.");
    }
    if (repetitions() < 0) {
        fail(ErrorCode::InvalidParameters, "r must be non-negative.");
    }
    if (!(KQ >= 1)) {
        fail(ErrorCode::InvalidParameters, "KQ must be at least 1.");
    }
    double e = memory_error();
    if (!(gamma >= 0 && gamma <= 1 && e >= 0 && e <= 1)) {
        fail(ErrorCode::InvalidParameters, "gamma and epsilon must lie in [0, 1].");
    }
    if (ratio() < 0) {
        fail(ErrorCode::InvalidParameters, "epsilon_ratio must be non-negative.");
    }
}

ScaleUp scale_up(int n, int k, std::optional<double> K) {
    if (k < 1) {
        fail(ErrorCode::InvalidParameters, "Scale-up needs k >= 1.");
    }
    if (K && !(*K >= k)) {
        fail(ErrorCode::InvalidParameters, "Scale-up needs K >= k.");
    }
    ScaleUp out;
    out.asymptotic = (5.0 * n + 4.0) / k;
    out.S = K ? out.asymptotic * (1.0 + 3.0 * k / *K) : out.asymptotic;
    return out;
}

double accumulator_blocks(int k, std::optional<double> K, bool large) {
    if (!large || !K || k < 1) {
        return 3;
    }
    return std::max(3.0, std::ceil(*K / (4.0 * k)));
}

ErrorOpportunities error_opportunities(const OverheadParams &p) {
    double n = p.n;
    double k = p.k;
    double r = p.repetitions();
    ErrorOpportunities out;
    out.g = static_cast<uint64_t>(p.n) * static_cast<uint64_t>(4 * p.repetitions() + 1);
    out.s = n * ((p.w + 2) * (n - k) / 2 + (p.mean_leader_weight() + 1) * k + n * (2 + r / 2));
    return out;
}

double opportunity_rate(uint64_t g, double s, double gamma, double epsilon) {
    return 2 * gamma / 3 + (s / static_cast<double>(g)) * (2 * epsilon / 3);
}

double binomial_tail_sum(uint64_t g, uint64_t from, double q) {
    if (from == 0) {
        // The i = 0 term is 1.
        return 2 + binomial_tail_sum(g, 1, q);
    }
    if (q <= 0 || from > g) {
        return 0;
    }
    double lq = std::log(q);
    double lg = std::lgamma(static_cast<double>(g) + 1);
    // Sum relative to the first term to keep everything in range.
    auto log_term = [&](uint64_t i) {
        double di = static_cast<double>(i);
        return lg - std::lgamma(di + 1) - std::lgamma(static_cast<double>(g - i) + 1) + di * lq;
    };
    double l0 = log_term(from);
    double acc = 0;
    double lmax = l0;
    for (uint64_t i = from; i <= g; i++) {
        double li = log_term(i);
        if (li > lmax) {
            acc *= std::exp(lmax - li);
            lmax = li;
        }
        double term = std::exp(li - lmax);
        acc += term;
        if (i > from && term < TRUNCATION * acc) {
            break;
        }
    }
    return 2 * std::exp(lmax + std::log(acc));
}

double failure_probability(uint64_t g, double s, int t, double gamma, double epsilon) {
    return binomial_tail_sum(g, static_cast<uint64_t>(t) + 1, opportunity_rate(g, s, gamma, epsilon));
}

double failure_probability(const OverheadParams &p) {
    p.validate();
    ErrorOpportunities eo = error_opportunities(p);
    return failure_probability(eo.g, eo.s, p.t(), p.gamma, p.memory_error());
}

double plim(int k, double K, double Q) {
    if (!(K >= 1 && Q >= 1)) {
        fail(ErrorCode::InvalidParameters, "K and Q must be at least 1.");
    }
    return k / (8 * K * Q);
}

double plim_kq(int k, double KQ) {
    if (!(KQ >= 1)) {
        fail(ErrorCode::InvalidParameters, "KQ must be at least 1.");
    }
    return k / (8 * KQ);
}

GammaMax solve_gamma_max(const OverheadParams &params) {
    OverheadParams p = params;
    p.epsilon.reset();
    p.gamma = 0;
    p.validate();
    ErrorOpportunities eo = error_opportunities(p);
    double ratio = p.ratio();
    auto P_at = [&](double gamma) {
        return failure_probability(eo.g, eo.s, p.t(), gamma, gamma * ratio);
    };
    GammaMax out;
    out.plim = plim_kq(p.k, p.KQ);
    double lo = GAMMA_LO;
    double hi = GAMMA_HI;
    double P_lo = P_at(lo);
    if (P_lo > out.plim) {
        fail(
            ErrorCode::Infeasible, "Code " + std::to_string(p.n) + "," + std::to_string(p.k) + "," +
                                       std::to_string(p.d) + " cannot meet the failure limit even at gamma = 1e-12.");
    }
    double P_hi = P_at(hi);
    if (P_hi <= out.plim) {
        out.gamma_max = hi;
        out.epsilon_max = hi * ratio;
        out.P = P_hi;
        out.capped = true;
        return out;
    }
    double mid = lo;
    double P_mid = P_lo;
    for (out.iterations = 0; out.iterations < 400; out.iterations++) {
        mid = std::sqrt(lo * hi);
        P_mid = P_at(mid);
        if (rel(P_mid, out.plim) <= SOLVE_RTOL) {
            break;
        }
        if (P_mid < out.plim) {
            lo = mid;
        } else {
            hi = mid;
        }
        if (hi / lo - 1 < 1e-15) {
            break;
        }
    }
    out.gamma_max = mid;
    out.epsilon_max = mid * ratio;
    out.P = P_mid;
    return out;
}

AncillaSufficiency ancilla_sufficiency(const OverheadParams &params, double gamma) {
    OverheadParams p = params;
    p.gamma = gamma;
    p.epsilon.reset();
    p.validate();
    ErrorOpportunities eo = error_opportunities(p);
    AncillaSufficiency out;
    out.gamma = gamma;
    out.closed_form = 32.0 * p.n * p.repetitions() * gamma / 3.0;
    double q = opportunity_rate(eo.g, eo.s, gamma, p.memory_error());
    // sum_{i=1}^{g} C(g,i) q^i = (1+q)^g - 1.
    out.full_sum = 2 * std::expm1(static_cast<double>(eo.g) * std::log1p(q));
    out.sufficient_closed_form = out.closed_form <= out.threshold;
    out.sufficient_full_sum = out.full_sum <= out.threshold;
    return out;
}

RotationSynthesis rotation_synthesis(double alpha) {
    RotationSynthesis out;
    out.alpha = alpha;
    double c = std::cos(alpha);
    out.cos_phi = (6 + 10 * c) / (10 + 6 * c);
    out.phi = std::acos(std::clamp(out.cos_phi, -1.0, 1.0));
    return out;
}

RotationSynthesis rotation_base_case() {
    return rotation_synthesis(std::numbers::pi / 2);
}

DoubleFailureCheck double_failure_check(const OverheadParams &p, std::optional<double> wrong_zero) {
    DoubleFailureCheck out;
    double P = failure_probability(p);
    out.amplified = std::ldexp(P, p.t() + 1);
    out.bound = std::ldexp(1.0, -(p.t() + 1));
    out.wrong_zero_probability = wrong_zero.value_or(out.bound);
    out.contribution = out.wrong_zero_probability * out.amplified;
    out.plim = plim_kq(p.k, p.KQ);
    out.critical_wrong_zero = out.amplified > 0 ? out.plim / out.amplified : INFINITY;
    // At γ_max with the default bound the contribution equals P, which the
    // solver only matches to the limit within its tolerance.
    out.holds = out.contribution <= out.plim * (1 + 1e-5);
    return out;
}

OverheadReport evaluate_overhead(const OverheadParams &p) {
    p.validate();
    OverheadReport out;
    ErrorOpportunities eo = error_opportunities(p);
    out.g = eo.g;
    out.s = eo.s;
    out.P = failure_probability(p);
    out.plim = plim_kq(p.k, p.KQ);
    AncillaSufficiency a = ancilla_sufficiency(p, p.gamma);
    out.P1 = a.closed_form;
    out.P1_full = a.full_sum;
    if (p.k >= 1) {
        out.S = scale_up(p.n, p.k, p.K);
    }
    out.accumulator = accumulator_blocks(p.k, p.K, p.large_accumulator);
    out.verification_cx = p.w * (p.n - p.k) / 2.0 + p.mean_leader_weight() * p.k;
    try {
        out.gamma_max = solve_gamma_max(p);
        out.feasible = out.P <= out.plim;
    } catch (const Error &e) {
        if (e.code() != ErrorCode::Infeasible) {
            throw;
        }
        out.feasible = false;
    }
    out.double_failure = double_failure_check(p);
    return out;
}

}  // namespace cssft
