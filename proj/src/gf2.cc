// Copyright 2026 The graphprep Authors
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

#include "graphprep/gf2.h"

#include <utility>

#include "graphprep/errors.h"

namespace graphprep {

Gf2Matrix::Gf2Matrix(size_t rows, size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {
}

Gf2Matrix Gf2Matrix::identity(size_t n) {
    Gf2Matrix m(n, n);
    for (size_t i = 0; i < n; i++) {
        m.set(i, i);
    }
    return m;
}

Gf2Matrix Gf2Matrix::from_rows(std::initializer_list<std::string_view> rows) {
    Gf2Matrix m;
    bool first = true;
    for (auto r : rows) {
        BitVec v = BitVec::from_string(r);
        if (first) {
            m.cols_ = v.size();
            first = false;
        }
        m.append_row(std::move(v));
    }
    return m;
}

void Gf2Matrix::append_row(BitVec row) {
    if (rows_.empty() && cols_ == 0) {
        cols_ = row.size();
    }
    if (row.size() != cols_) {
        throw DimensionMismatchError("row length " + std::to_string(row.size()) + " != " + std::to_string(cols_));
    }
    rows_.push_back(std::move(row));
}

Gf2Matrix Gf2Matrix::transpose() const {
    Gf2Matrix t(cols_, rows_.size());
    for (size_t r = 0; r < rows_.size(); r++) {
        for (size_t c : rows_[r].ones()) {
            t.set(c, r);
        }
    }
    return t;
}

RowEchelon row_reduce(const Gf2Matrix &m) {
    RowEchelon out{m, {}};
    Gf2Matrix &a = out.reduced;
    size_t next_row = 0;
    for (size_t c = 0; c < a.cols() && next_row < a.rows(); c++) {
        size_t pivot = next_row;
        while (pivot < a.rows() && !a.get(pivot, c)) {
            pivot++;
        }
        if (pivot == a.rows()) {
            continue;
        }
        std::swap(a.row(pivot), a.row(next_row));
        for (size_t r = 0; r < a.rows(); r++) {
            if (r != next_row && a.get(r, c)) {
                a.row(r) ^= a.row(next_row);
            }
        }
        out.pivot_cols.push_back(c);
        next_row++;
    }
    return out;
}

size_t rank(const Gf2Matrix &m) {
    return row_reduce(m).pivot_cols.size();
}

Gf2Vector mat_vec(const Gf2Matrix &m, const Gf2Vector &x) {
    if (x.size() != m.cols()) {
        throw DimensionMismatchError("vector length " + std::to_string(x.size()) + " != matrix cols " +
                                     std::to_string(m.cols()));
    }
    Gf2Vector y(m.rows());
    for (size_t r = 0; r < m.rows(); r++) {
        if (m.row(r).dot(x)) {
            y.set(r);
        }
    }
    return y;
}

std::optional<Gf2Vector> solve(const Gf2Matrix &m, const Gf2Vector &b) {
    if (b.size() != m.rows()) {
        throw DimensionMismatchError("rhs length " + std::to_string(b.size()) + " != matrix rows " +
                                     std::to_string(m.rows()));
    }
    // Augment with b as the last column and reduce.
    Gf2Matrix aug(m.rows(), m.cols() + 1);
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c : m.row(r).ones()) {
            aug.set(r, c);
        }
        if (b.get(r)) {
            aug.set(r, m.cols());
        }
    }
    RowEchelon re = row_reduce(aug);
    if (!re.pivot_cols.empty() && re.pivot_cols.back() == m.cols()) {
        return std::nullopt;
    }
    Gf2Vector x(m.cols());
    for (size_t i = 0; i < re.pivot_cols.size(); i++) {
        if (re.reduced.get(i, m.cols())) {
            x.set(re.pivot_cols[i]);
        }
    }
    return x;
}

std::vector<Gf2Vector> nullspace(const Gf2Matrix &m) {
    RowEchelon re = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : re.pivot_cols) {
        is_pivot[c] = true;
    }
    std::vector<Gf2Vector> basis;
    for (size_t f = 0; f < m.cols(); f++) {
        if (is_pivot[f]) {
            continue;
        }
        Gf2Vector x(m.cols());
        x.set(f);
        for (size_t i = 0; i < re.pivot_cols.size(); i++) {
            if (re.reduced.get(i, f)) {
                x.set(re.pivot_cols[i]);
            }
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace graphprep
