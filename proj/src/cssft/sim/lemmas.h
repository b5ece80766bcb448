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

#ifndef _CSSFT_SIM_LEMMAS_H
#define _CSSFT_SIM_LEMMAS_H

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "cssft/sim/logical_action.h"

namespace cssft {

/// One simulated check: a gate sequence, its predicted logical action and
/// the derived one.
struct LemmaCheck {
    std::string name;
    LogicalActionReport report;
    bool passed = false;
};

struct LemmaReport {
    std::string lemma;
    std::vector<LemmaCheck> checks;
    bool passed = true;
    /// Lemma 1 data.
    int w = 0;
    int r0 = 0;
    int r1 = 0;
    int r = 0;
    /// Empirical diagonal phases (radians) of the single-block check.
    std::vector<double> empirical_phases;
    std::vector<std::string> notes;

    void add(LemmaCheck check);
};

/// Bitwise CX between two blocks is the k-fold logical CNOT.
LemmaReport verify_lemma2(std::shared_ptr<const CssCode> code);
/// Bitwise H gives 2^{-k/2} (-1)^{u M v^T} and bitwise CZ gives
/// diag (-1)^{u M v^T}, with M = D D^T. Needs C0 = C^perp.
LemmaReport verify_lemma3(std::shared_ptr<const CssCode> code);
/// Bitwise P(pi/2) gives diag i^{|uD|}. Needs a doubly-even C0 = C^perp.
LemmaReport verify_lemma4(std::shared_ptr<const CssCode> code);
/// Bitwise P(2pi/w), CP(4pi/w), CCP(8pi/w) on a k = 1 code whose cosets have
/// constant weights r0, r1 mod w. Throws WeightCongruenceViolated otherwise.
LemmaReport verify_lemma1(std::shared_ptr<const CssCode> code, int w);
/// Bitwise CCZ from two code blocks onto an n-qubit cat register gives
/// (-1)^{a u M v^T}.
LemmaReport verify_lemma5(std::shared_ptr<const CssCode> code);

struct StabilizerCheck {
    bool passed = true;
    double max_deviation = 0;
    size_t applications = 0;
};

/// Applies every X-type and Z-type stabilizer generator to every encoded
/// basis state and checks the state is unchanged.
StabilizerCheck check_stabilizer_invariance(std::shared_ptr<const CssCode> code);

}  // namespace cssft

#endif
