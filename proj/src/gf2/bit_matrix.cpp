// Copyright 2026 The crfc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "crfc/gf2/bit_matrix.hpp"

#include "crfc/errors.hpp"

namespace crfc::gf2 {

BitMatrix::BitMatrix(std::initializer_list<std::string_view> rows) {
  bool first = true;
  for (const auto r : rows) {
    if (first) {
      cols_ = r.size();
      first = false;
    } else if (r.size() != cols_) {
      throw UsageError("matrix rows must have equal length");
    }
    rows_.push_back(BitVector::from_string(r));
  }
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::from_rows(std::vector<BitVector> rows, std::size_t cols) {
  BitMatrix m;
  m.cols_ = cols;
  for (auto& r : rows) m.append_row(std::move(r));
  return m;
}

void BitMatrix::append_row(BitVector row) {
  if (row.size() != cols_) throw UsageError("row length does not match matrix width");
  rows_.push_back(std::move(row));
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    for (const auto c : rows_[r].ones()) t.set(c, r);
  }
  return t;
}

BitVector BitMatrix::column(std::size_t c) const {
  if (c >= cols_) throw UsageError("column index out of range");
  BitVector v(rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    if (rows_[r].get(c)) v.set(r);
  }
  return v;
}

}  // namespace crfc::gf2
