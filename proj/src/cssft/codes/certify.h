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

#ifndef _CSSFT_CODES_CERTIFY_H
#define _CSSFT_CODES_CERTIFY_H

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cssft/codes/classical_code.h"

namespace cssft {

struct EligibilityCertificate {
    bool contains_dual = false;
    bool dual_doubly_even = false;
    /// True when C0 (the X-stabilizer space) is doubly even.
    bool c0_doubly_even = false;
    std::vector<size_t> check_row_weights;
    std::optional<int> lemma1_w;
    /// Coset label (bits of u) -> weight residue mod w shared by every word
    /// in C0 + uD, or -1 when the weights in that coset disagree mod w.
    std::optional<std::map<std::string, int>> lemma1_residues;
    /// Random codewords of the dual whose weight was checked mod 4.
    uint64_t sampled_words = 0;
    uint64_t sample_violations = 0;

    /// True when every coset has a single residue.
    bool lemma1_congruent() const;
};

/// Exact doubly-even test from a generating set: every generator has weight
/// 0 mod 4 and every pair overlaps evenly. Since
/// wt(a + b) = wt(a) + wt(b) - 2|a & b|, this holds iff the whole span is
/// doubly even.
bool is_doubly_even(const BinaryMatrix &generators);

struct WeightSample {
    uint64_t samples = 0;
    uint64_t violations = 0;
};

/// Checks weights mod 4 of random words of rowspace(generators) (fixed seed).
WeightSample sample_doubly_even(const BinaryMatrix &generators, uint64_t samples, uint64_t seed = 0x9e3779b97f4a7c15);

/// Rows of `c` extending rowspace(c0) to rowspace(c), taken in order.
BinaryMatrix complement_basis(const BinaryMatrix &c0, const BinaryMatrix &c);

/// Weight residues mod w of each coset c0 + u*leaders, keyed by u's bits.
std::map<std::string, int> coset_weight_residues(
    const BinaryMatrix &c0, const BinaryMatrix &leaders, int w, size_t max_dim = DEFAULT_MAX_DIM);

/// Certificate for the CSS construction with C0 = C^perp.
EligibilityCertificate certify(
    const ClassicalCode &code, std::optional<int> w = std::nullopt, size_t max_dim = DEFAULT_MAX_DIM,
    uint64_t samples = 4096);

struct BchConjectureEntry {
    int designed_distance = 0;
    size_t n = 0;
    size_t k_c = 0;
    bool contains_dual = false;
    bool dual_doubly_even = false;
    uint64_t sampled_words = 0;
    uint64_t sample_violations = 0;
};

struct BchConjectureReport {
    int m = 0;
    /// One entry per distinct narrow-sense BCH code of length 2^m - 1.
    std::vector<BchConjectureEntry> entries;
    /// Every dual-containing entry has a doubly-even dual.
    bool holds = true;
};

/// Checks, for each narrow-sense BCH code of length 2^m - 1 (3 <= m <= 8),
/// whether a dual-containing code has a doubly-even dual.
BchConjectureReport verify_bch_dual_conjecture(int m, uint64_t samples = 4096);

}  // namespace cssft

#endif
