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

#ifndef _CSSFT_CSS_CSS_CODE_H
#define _CSSFT_CSS_CSS_CODE_H

#include <optional>
#include <string>
#include <vector>

#include "cssft/codes/certify.h"
#include "cssft/codes/classical_code.h"
#include "cssft/css/pauli.h"

namespace cssft {

/// A CSS code built from nested classical codes C0 <= C with C0 <= C^perp.
///
/// Encoded basis states are |u>_L = sum_{x in C0} |x + u D>, X-type
/// stabilizers are C0 and Z-type stabilizers are C^perp.
struct CssCode {
    size_t n = 0;
    size_t k = 0;
    size_t d = 0;
    DistanceKind distance_kind = DistanceKind::Design;
    /// Reduced echelon basis of C0 (the matrix H~).
    BinaryMatrix c0_generator;
    /// Basis of C: the rows of H~ followed by the rows of D~.
    BinaryMatrix c_generator;
    /// Coset leaders D~ (k x n).
    BinaryMatrix coset_leaders;
    BinaryMatrix stabilizer_x;
    BinaryMatrix stabilizer_z;
    /// D~ D~^T (k x k) and its inverse when it exists.
    BinaryMatrix dd_transpose;
    std::optional<BinaryMatrix> dd_inverse;
    EligibilityCertificate certificate;
    /// True when every coset leader came from an exhaustive search.
    bool leaders_certified = false;
    /// Mean H~ row weight used by the overhead model.
    double w = 0;
    std::string w_source;
    std::string origin;
    std::vector<std::string> notes;

    std::string label() const;
    double mean_leader_weight() const;
};

struct CssOptions {
    uint64_t coset_budget = DEFAULT_COSET_BUDGET;
    size_t max_dim = DEFAULT_MAX_DIM;
};

/// C0 = C^perp. Throws NotDualContaining when C does not contain its dual.
CssCode css_from_classical(const ClassicalCode &code, const CssOptions &options = {});

/// General construction. Throws InvalidArgument unless C0 <= C and
/// C0 is orthogonal to C. `w` is the overhead weight to record; when
/// absent the mean row weight of `c0` is used.
CssCode css_from_pair(
    const BinaryMatrix &c0, const BinaryMatrix &c, const CssOptions &options = {}, std::optional<double> w = std::nullopt,
    const std::string &w_source = "");

/// [[2^m - 1, 1, 3]] code with C the punctured first-order RM code and C0
/// its even-weight subcode.
CssCode quantum_reed_muller(int m, const CssOptions &options = {});

PauliProduct encoded_x(const CssCode &code, const BitVector &u);
/// Z_{u (D D^T)^-1 D}. Throws SingularDDT when D D^T is singular.
PauliProduct encoded_z(const CssCode &code, const BitVector &u);

/// [[n - 1, k + 1, >= d - 1]] code from deleting row `row_index` of the
/// reduced H~ and the coordinate of that row's pivot. The new distance is
/// exact when enumeration is feasible and a bound otherwise.
CssCode derive_smaller_code(const CssCode &code, size_t row_index, const CssOptions &options = {});

struct LemmaConditions {
    bool lemma2 = true;
    /// C0 = C^perp.
    bool lemma3 = false;
    /// Lemma 3 plus a doubly-even C0.
    bool lemma4 = false;
    bool ddt_identity = false;
};

LemmaConditions check_lemma_conditions(const CssCode &code);

/// Quantum distance min(wt(C \ C0), wt(C0^perp \ C^perp)); for k = 0 the
/// minimum nonzero weight of C0^perp. nullopt when enumeration is infeasible.
std::optional<size_t> quantum_distance(const CssCode &code, size_t max_dim = DEFAULT_MAX_DIM);

}  // namespace cssft

#endif
