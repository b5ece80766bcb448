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

#ifndef _CSSFT_GF2_BINARY_MATRIX_H
#define _CSSFT_GF2_BINARY_MATRIX_H

#include <optional>
#include <string>
#include <vector>

#include "cssft/gf2/bit_vector.h"

namespace cssft {

/// Dense matrix over GF(2) stored as a list of packed rows.
class BinaryMatrix {
   public:
    BinaryMatrix() = default;
    BinaryMatrix(size_t num_rows, size_t num_cols);
    BinaryMatrix(std::vector<BitVector> rows, size_t num_cols);

    static BinaryMatrix identity(size_t n);
    /// Rows given as '0'/'1' strings; all must have equal length.
    static BinaryMatrix from_strings(const std::vector<std::string> &rows);

    size_t num_rows() const {
        return rows_.size();
    }
    size_t num_cols() const {
        return num_cols_;
    }
    bool empty() const {
        return rows_.empty();
    }
    const BitVector &row(size_t i) const {
        return rows_[i];
    }
    BitVector &row(size_t i) {
        return rows_[i];
    }
    const std::vector<BitVector> &rows() const {
        return rows_;
    }
    bool get(size_t r, size_t c) const {
        return rows_[r].get(c);
    }
    void set(size_t r, size_t c, bool v) {
        rows_[r].set(c, v);
    }

    void append_row(const BitVector &row);
    BinaryMatrix without_row(size_t index) const;
    BinaryMatrix without_col(size_t index) const;
    BinaryMatrix stacked(const BinaryMatrix &below) const;

    BinaryMatrix transposed() const;
    /// Ordinary product this * other.
    BinaryMatrix operator*(const BinaryMatrix &other) const;
    /// this * other^T, computed from row dot products.
    BinaryMatrix mul_transpose(const BinaryMatrix &other) const;
    /// Row vector u times this matrix: XOR of the rows selected by u.
    BitVector left_mul(const BitVector &u) const;
    /// This matrix times column vector v: the vector of row parities with v.
    BitVector right_mul(const BitVector &v) const;

    bool is_zero() const;
    bool operator==(const BinaryMatrix &other) const = default;

    std::vector<size_t> row_weights() const;
    std::string str() const;

   private:
    size_t num_cols_ = 0;
    std::vector<BitVector> rows_;
};

struct RrefResult {
    /// Nonzero rows of the reduced echelon form, in pivot order.
    BinaryMatrix matrix;
    size_t rank = 0;
    /// Pivot column of each row of `matrix`.
    std::vector<size_t> pivots;
};

/// Reduced row echelon form. The returned matrix keeps all input rows, with
/// the zero rows at the bottom, so rref(rref(m)) == rref(m).
RrefResult rref(const BinaryMatrix &m);
/// Reduced echelon basis of the row space (zero rows dropped).
RrefResult row_basis(const BinaryMatrix &m);
size_t rank(const BinaryMatrix &m);
/// Basis of {v : m v^T = 0}.
BinaryMatrix null_space(const BinaryMatrix &m);
bool is_self_orthogonal(const BinaryMatrix &m);
bool row_space_contains(const RrefResult &basis, const BitVector &v);
bool same_row_space(const BinaryMatrix &a, const BinaryMatrix &b);
/// Reduces v against a reduced echelon basis; the result is a canonical
/// representative of the coset v + rowspace.
BitVector reduce(const RrefResult &basis, const BitVector &v);
/// Coordinates of v in the reduced echelon basis, or nullopt if v is outside.
std::optional<BitVector> coordinates(const RrefResult &basis, const BitVector &v);
/// Inverse of a square matrix, or nullopt when singular.
std::optional<BinaryMatrix> inverse(const BinaryMatrix &m);

}  // namespace cssft

#endif
