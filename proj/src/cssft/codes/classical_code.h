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

#ifndef _CSSFT_CODES_CLASSICAL_CODE_H
#define _CSSFT_CODES_CLASSICAL_CODE_H

#include <optional>
#include <string>
#include <vector>

#include "cssft/gf2/binary_matrix.h"
#include "cssft/gf2/enumerate.h"

namespace cssft {

enum class CodeFamily { Bch, PuncturedRM, ExtendedQR, UserSupplied };

/// How a recorded minimum distance was obtained.
enum class DistanceKind {
    /// Verified by enumeration.
    Exact,
    /// Designed distance of the construction, not enumerated.
    Design,
    /// Known value for the family, not enumerated.
    Tabulated,
    /// Supplied by the user, not enumerated.
    Claimed,
    /// Only a lower bound is known.
    Bound,
};

const char *family_name(CodeFamily f);
const char *distance_kind_name(DistanceKind k);

/// Check of the claim that the construction's check rows all have a single
/// target weight, with a fallback search for an equivalent basis.
struct RowWeightAudit {
    size_t target = 0;
    bool canonical_rows_match = false;
    bool equivalent_basis_found = false;
    double canonical_mean = 0;
    std::vector<size_t> canonical_weights;
};

/// A binary linear [n, k_c, d] code.
struct ClassicalCode {
    size_t n = 0;
    size_t k = 0;
    size_t d = 0;
    DistanceKind distance_kind = DistanceKind::Design;
    /// Reduced echelon generator (k rows).
    BinaryMatrix generator;
    /// Full-rank parity check matrix (n - k rows).
    BinaryMatrix check;
    /// Check rows as produced by the construction, before row reduction.
    /// Equal to `check` for families without a canonical unreduced basis.
    BinaryMatrix check_rows;
    CodeFamily family = CodeFamily::UserSupplied;
    std::vector<int> params;
    /// Mean parity-check row weight fed to the overhead model.
    double w = 0;
    std::string w_source;
    std::optional<RowWeightAudit> row_weight_audit;
    /// Free-form notes produced during construction.
    std::vector<std::string> notes;

    std::string label() const;
};

/// Fills generator/check/k from a generating set. Distance is left unset.
ClassicalCode code_from_generator(const BinaryMatrix &generators, CodeFamily family, std::vector<int> params);
/// Same, from a parity check matrix.
ClassicalCode code_from_check(const BinaryMatrix &checks, CodeFamily family, std::vector<int> params);

/// Tries to make the distance exact by enumeration of the code or (via
/// MacWilliams) of its dual. Leaves the code unchanged when both are too big.
void try_exact_distance(ClassicalCode &code, size_t max_dim = DEFAULT_MAX_DIM);

ClassicalCode bch_code(int m, int designed_distance, size_t max_dim = DEFAULT_MAX_DIM);
ClassicalCode punctured_reed_muller(int r, int m, size_t max_dim = DEFAULT_MAX_DIM);
ClassicalCode extended_qr_code(int p, size_t max_dim = DEFAULT_MAX_DIM);

/// Loads the matrix text format with optional header comments
/// "n: ..", "k_c: ..", "d: ..", "w: ..", "kind: generator|check".
ClassicalCode load_code(const std::string &path, size_t max_dim = DEFAULT_MAX_DIM);
ClassicalCode parse_code_text(const std::string &text, size_t max_dim = DEFAULT_MAX_DIM);
std::string format_code_text(const ClassicalCode &code);

/// Result of searching for a basis of a row space made only of words of a
/// given weight.
struct ConstantWeightBasis {
    bool found = false;
    BinaryMatrix basis;
    uint64_t samples = 0;
};

/// Randomized (fixed seed) search for a basis of rowspace(m) consisting of
/// words of weight `weight`. A returned basis is verified to span the space.
ConstantWeightBasis find_constant_weight_basis(const BinaryMatrix &m, size_t weight, uint64_t max_samples = 1u << 20);

}  // namespace cssft

#endif
