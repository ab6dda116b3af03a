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

#ifndef GRAPHPREP_GF2_H
#define GRAPHPREP_GF2_H

#include <cstddef>
#include <optional>
#include <vector>

#include "graphprep/bitvec.h"

namespace graphprep {

using Gf2Vector = BitVec;

/// Dense matrix over GF(2), one BitVec per row.
class Gf2Matrix {
   public:
    Gf2Matrix() = default;
    Gf2Matrix(size_t rows, size_t cols);
    static Gf2Matrix identity(size_t n);
    /// Rows given as '0'/'1' strings of equal length.
    static Gf2Matrix from_rows(std::initializer_list<std::string_view> rows);

    size_t rows() const {
        return rows_.size();
    }
    size_t cols() const {
        return cols_;
    }
    bool get(size_t r, size_t c) const {
        return rows_[r].get(c);
    }
    void set(size_t r, size_t c, bool v = true) {
        rows_[r].set(c, v);
    }
    const BitVec &row(size_t r) const {
        return rows_[r];
    }
    BitVec &row(size_t r) {
        return rows_[r];
    }
    void append_row(BitVec row);

    Gf2Matrix transpose() const;

    bool operator==(const Gf2Matrix &) const = default;

   private:
    size_t cols_ = 0;
    std::vector<BitVec> rows_;
};

size_t rank(const Gf2Matrix &m);

/// Throws DimensionMismatchError unless x.size() == m.cols().
Gf2Vector mat_vec(const Gf2Matrix &m, const Gf2Vector &x);

/// Some x with m x = b, or nullopt when the system is inconsistent. Free
/// variables are set to 0, so the answer is reproducible. Throws
/// DimensionMismatchError unless b.size() == m.rows().
std::optional<Gf2Vector> solve(const Gf2Matrix &m, const Gf2Vector &b);

/// Basis of {x : m x = 0}, one vector per free column in increasing order.
std::vector<Gf2Vector> nullspace(const Gf2Matrix &m);

/// Reduced row echelon form. Pivots are taken at the lowest usable row for
/// each column scanned left to right.
struct RowEchelon {
    Gf2Matrix reduced;
    std::vector<size_t> pivot_cols;
};
RowEchelon row_reduce(const Gf2Matrix &m);

}  // namespace graphprep

#endif
