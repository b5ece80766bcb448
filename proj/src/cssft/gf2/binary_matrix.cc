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

#include "cssft/gf2/binary_matrix.h"

#include <utility>

#include "cssft/error.h"

namespace cssft {

BinaryMatrix::BinaryMatrix(size_t num_rows, size_t num_cols) : num_cols_(num_cols), rows_(num_rows, BitVector(num_cols)) {
}

BinaryMatrix::BinaryMatrix(std::vector<BitVector> rows, size_t num_cols) : num_cols_(num_cols), rows_(std::move(rows)) {
    for (const auto &r : rows_) {
        if (r.size() != num_cols_) {
            fail(ErrorCode::InvalidArgument, "Row length does not match column count.");
        }
    }
}

BinaryMatrix BinaryMatrix::identity(size_t n) {
    BinaryMatrix m(n, n);
    for (size_t i = 0; i < n; i++) {
        m.set(i, i, true);
    }
    return m;
}

BinaryMatrix BinaryMatrix::from_strings(const std::vector<std::string> &rows) {
    if (rows.empty()) {
        return BinaryMatrix();
    }
    std::vector<BitVector> parsed;
    for (const auto &r : rows) {
        parsed.push_back(BitVector::from_string(r));
    }
    size_t cols = parsed[0].size();
    return BinaryMatrix(std::move(parsed), cols);
}

void BinaryMatrix::append_row(const BitVector &row) {
    if (rows_.empty() && num_cols_ == 0) {
        num_cols_ = row.size();
    }
    if (row.size() != num_cols_) {
        fail(ErrorCode::InvalidArgument, "Row length does not match column count.");
    }
    rows_.push_back(row);
}

BinaryMatrix BinaryMatrix::without_row(size_t index) const {
    BinaryMatrix result = *this;
    result.rows_.erase(result.rows_.begin() + index);
    return result;
}

BinaryMatrix BinaryMatrix::without_col(size_t index) const {
    BinaryMatrix result(0, num_cols_ - 1);
    for (const auto &r : rows_) {
        result.rows_.push_back(r.without(index));
    }
    return result;
}

BinaryMatrix BinaryMatrix::stacked(const BinaryMatrix &below) const {
    if (empty()) {
        return below;
    }
    if (below.empty()) {
        return *this;
    }
    BinaryMatrix result = *this;
    for (const auto &r : below.rows_) {
        result.append_row(r);
    }
    return result;
}

BinaryMatrix BinaryMatrix::transposed() const {
    BinaryMatrix result(num_cols_, rows_.size());
    for (size_t r = 0; r < rows_.size(); r++) {
        for (size_t c = 0; c < num_cols_; c++) {
            if (rows_[r].get(c)) {
                result.set(c, r, true);
            }
        }
    }
    return result;
}

BinaryMatrix BinaryMatrix::operator*(const BinaryMatrix &other) const {
    if (num_cols_ != other.num_rows()) {
        fail(ErrorCode::InvalidArgument, "Matrix product dimension mismatch.");
    }
    BinaryMatrix result(0, other.num_cols());
    for (const auto &r : rows_) {
        result.rows_.push_back(other.left_mul(r));
    }
    return result;
}

BinaryMatrix BinaryMatrix::mul_transpose(const BinaryMatrix &other) const {
    if (num_cols_ != other.num_cols()) {
        fail(ErrorCode::InvalidArgument, "Matrix product dimension mismatch.");
    }
    BinaryMatrix result(rows_.size(), other.num_rows());
    for (size_t i = 0; i < rows_.size(); i++) {
        for (size_t j = 0; j < other.num_rows(); j++) {
            if (rows_[i].dot(other.row(j))) {
                result.set(i, j, true);
            }
        }
    }
    return result;
}

BitVector BinaryMatrix::left_mul(const BitVector &u) const {
    if (u.size() != rows_.size()) {
        fail(ErrorCode::InvalidArgument, "Vector-matrix dimension mismatch.");
    }
    BitVector result(num_cols_);
    for (size_t i = 0; i < rows_.size(); i++) {
        if (u.get(i)) {
            result ^= rows_[i];
        }
    }
    return result;
}

BitVector BinaryMatrix::right_mul(const BitVector &v) const {
    if (v.size() != num_cols_) {
        fail(ErrorCode::InvalidArgument, "Matrix-vector dimension mismatch.");
    }
    BitVector result(rows_.size());
    for (size_t i = 0; i < rows_.size(); i++) {
        if (rows_[i].dot(v)) {
            result.set(i, true);
        }
    }
    return result;
}

bool BinaryMatrix::is_zero() const {
    for (const auto &r : rows_) {
        if (!r.is_zero()) {
            return false;
        }
    }
    return true;
}

std::vector<size_t> BinaryMatrix::row_weights() const {
    std::vector<size_t> out;
    for (const auto &r : rows_) {
        out.push_back(r.weight());
    }
    return out;
}

std::string BinaryMatrix::str() const {
    std::string out;
    for (const auto &r : rows_) {
        out += r.str();
        out += '\n';
    }
    return out;
}

RrefResult rref(const BinaryMatrix &m) {
    RrefResult result;
    std::vector<BitVector> rows = m.rows();
    size_t n = m.num_cols();
    size_t next = 0;
    for (size_t c = 0; c < n && next < rows.size(); c++) {
        size_t pivot = next;
        while (pivot < rows.size() && !rows[pivot].get(c)) {
            pivot++;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[next], rows[pivot]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != next && rows[r].get(c)) {
                rows[r] ^= rows[next];
            }
        }
        result.pivots.push_back(c);
        next++;
    }
    result.rank = next;
    result.matrix = BinaryMatrix(std::move(rows), n);
    return result;
}

RrefResult row_basis(const BinaryMatrix &m) {
    RrefResult r = rref(m);
    std::vector<BitVector> kept(r.matrix.rows().begin(), r.matrix.rows().begin() + r.rank);
    r.matrix = BinaryMatrix(std::move(kept), m.num_cols());
    return r;
}

size_t rank(const BinaryMatrix &m) {
    return rref(m).rank;
}

BinaryMatrix null_space(const BinaryMatrix &m) {
    size_t n = m.num_cols();
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (size_t p : r.pivots) {
        is_pivot[p] = true;
    }
    BinaryMatrix result(0, n);
    for (size_t free = 0; free < n; free++) {
        if (is_pivot[free]) {
            continue;
        }
        BitVector v(n);
        v.set(free, true);
        for (size_t i = 0; i < r.rank; i++) {
            if (r.matrix.get(i, free)) {
                v.set(r.pivots[i], true);
            }
        }
        result.append_row(v);
    }
    return result;
}

bool is_self_orthogonal(const BinaryMatrix &m) {
    for (size_t i = 0; i < m.num_rows(); i++) {
        for (size_t j = i; j < m.num_rows(); j++) {
            if (m.row(i).dot(m.row(j))) {
                return false;
            }
        }
    }
    return true;
}

BitVector reduce(const RrefResult &basis, const BitVector &v) {
    BitVector out = v;
    for (size_t i = 0; i < basis.rank; i++) {
        if (out.get(basis.pivots[i])) {
            out ^= basis.matrix.row(i);
        }
    }
    return out;
}

bool row_space_contains(const RrefResult &basis, const BitVector &v) {
    return reduce(basis, v).is_zero();
}

std::optional<BitVector> coordinates(const RrefResult &basis, const BitVector &v) {
    BitVector out = v;
    BitVector coords(basis.rank);
    for (size_t i = 0; i < basis.rank; i++) {
        if (out.get(basis.pivots[i])) {
            out ^= basis.matrix.row(i);
            coords.set(i, true);
        }
    }
    if (!out.is_zero()) {
        return std::nullopt;
    }
    return coords;
}

bool same_row_space(const BinaryMatrix &a, const BinaryMatrix &b) {
    if (a.num_cols() != b.num_cols()) {
        return false;
    }
    RrefResult ra = row_basis(a);
    RrefResult rb = row_basis(b);
    return ra.rank == rb.rank && ra.matrix == rb.matrix;
}

std::optional<BinaryMatrix> inverse(const BinaryMatrix &m) {
    size_t n = m.num_rows();
    if (m.num_cols() != n) {
        fail(ErrorCode::InvalidArgument, "inverse needs a square matrix.");
    }
    BinaryMatrix aug(n, 2 * n);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            aug.set(i, j, m.get(i, j));
        }
        aug.set(i, n + i, true);
    }
    RrefResult r = rref(aug);
    if (r.rank < n || (n > 0 && r.pivots[n - 1] != n - 1)) {
        return std::nullopt;
    }
    BinaryMatrix inv(n, n);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            inv.set(i, j, r.matrix.get(i, n + j));
        }
    }
    return inv;
}

}  // namespace cssft
