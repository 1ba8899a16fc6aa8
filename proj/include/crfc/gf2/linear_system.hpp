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

#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "crfc/gf2/bit_matrix.hpp"
#include "crfc/gf2/bit_vector.hpp"

namespace crfc::gf2 {

/// A * x = rhs over GF(2). One equation per coefficient row.
struct LinearSystem {
  BitMatrix coefficients;
  BitVector rhs;

  /// Throws UsageError unless coefficients.rows() == rhs.size().
  LinearSystem(BitMatrix a, BitVector b);
};

struct NoSolution {
  friend bool operator==(NoSolution, NoSolution) = default;
};
struct Underdetermined {
  std::size_t rank = 0;
  friend bool operator==(Underdetermined, Underdetermined) = default;
};

using SolveResult = std::variant<BitVector, NoSolution, Underdetermined>;

/// Dimension of the row space. Does not modify `m`.
std::size_t rank(const BitMatrix& m);

/// Unique solution when the coefficients have full column rank and the system
/// is consistent; NoSolution when inconsistent (regardless of rank);
/// Underdetermined otherwise.
SolveResult solve_unique(const LinearSystem& sys);

/// Solve A * X = B for every column of B at once. `rhs` has one row per
/// equation and one column per right-hand side. The elimination on A is done
/// once; result[j] is the outcome for column j of `rhs`.
std::vector<SolveResult> solve_unique_multi(const BitMatrix& coefficients, const BitMatrix& rhs);

/// Number of rows j with <row_j, x> == rhs_j. Throws UsageError when
/// x.size() != coefficients.cols().
std::size_t count_satisfied(const LinearSystem& sys, const BitVector& x);

/// Gauss-Jordan elimination over rows carrying a coefficient part of width
/// `cols` followed by `rhs_width` right-hand-side bits. Rows are stored as one
/// BitVector each so a row operation is a single xor over both parts.
class AugmentedEliminator {
 public:
  AugmentedEliminator(std::size_t cols, std::size_t rhs_width);

  std::size_t cols() const noexcept { return cols_; }
  std::size_t rhs_width() const noexcept { return rhs_width_; }

  /// Append an equation. `coefficients.size()` must equal cols() and
  /// `rhs.size()` rhs_width().
  void add_row(const BitVector& coefficients, const BitVector& rhs);

  /// Reduce to reduced row echelon form; returns the rank of the coefficient part.
  std::size_t reduce();

  std::size_t rank() const noexcept { return pivots_.size(); }
  /// Solution outcome for right-hand side column `j`. Requires reduce().
  SolveResult solution(std::size_t j) const;

 private:
  std::size_t cols_;
  std::size_t rhs_width_;
  std::vector<BitVector> rows_;
  std::vector<std::size_t> pivots_;  // pivot column of reduced row i
  bool reduced_ = false;
};

/// Online basis for the row space: insert vectors one at a time and learn
/// whether each raised the rank.
class IncrementalBasis {
 public:
  explicit IncrementalBasis(std::size_t cols);

  /// Returns true and keeps `v` when it is independent of the vectors so far.
  bool insert(const BitVector& v);
  std::size_t rank() const noexcept { return basis_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  bool full() const noexcept { return basis_.size() == cols_; }

 private:
  std::size_t cols_;
  // Reduced vectors, each with a distinct leading (lowest) set bit.
  std::vector<BitVector> basis_;
  std::vector<std::ptrdiff_t> by_pivot_;
};

}  // namespace crfc::gf2
