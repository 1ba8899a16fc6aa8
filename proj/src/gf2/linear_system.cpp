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

#include "crfc/gf2/linear_system.hpp"

#include <utility>

#include "crfc/errors.hpp"

namespace crfc::gf2 {

LinearSystem::LinearSystem(BitMatrix a, BitVector b) : coefficients(std::move(a)), rhs(std::move(b)) {
  if (coefficients.rows() != rhs.size()) {
    throw UsageError("linear system has " + std::to_string(coefficients.rows()) + " rows but rhs of length " +
                     std::to_string(rhs.size()));
  }
}

AugmentedEliminator::AugmentedEliminator(std::size_t cols, std::size_t rhs_width)
    : cols_(cols), rhs_width_(rhs_width) {}

void AugmentedEliminator::add_row(const BitVector& coefficients, const BitVector& rhs) {
  if (coefficients.size() != cols_ || rhs.size() != rhs_width_) {
    throw UsageError("augmented row has the wrong width");
  }
  BitVector row(cols_ + rhs_width_);
  // Coefficients first, right-hand sides after. Word-copy when the split is aligned.
  if (cols_ % BitVector::kWordBits == 0) {
    auto dst = row.words();
    const auto src = coefficients.words();
    std::copy(src.begin(), src.end(), dst.begin());
  } else {
    for (const auto i : coefficients.ones()) row.set(i);
  }
  for (const auto i : rhs.ones()) row.set(cols_ + i);
  rows_.push_back(std::move(row));
  reduced_ = false;
}

std::size_t AugmentedEliminator::reduce() {
  pivots_.clear();
  const auto& k = kernels::active();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows_.size() && !rows_[pivot].get(col)) ++pivot;
    if (pivot == rows_.size()) continue;
    std::swap(rows_[pivot], rows_[rank]);
    const auto& prow = rows_[rank];
    // Columns below `col` are already cleared in the pivot row, so skip those words.
    const std::size_t first_word = col / BitVector::kWordBits;
    const std::size_t nwords = prow.words().size() - first_word;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (r != rank && rows_[r].get(col)) {
        k.xor_into(rows_[r].words().data() + first_word, prow.words().data() + first_word, nwords);
      }
    }
    pivots_.push_back(col);
    ++rank;
  }
  reduced_ = true;
  return rank;
}

SolveResult AugmentedEliminator::solution(std::size_t j) const {
  if (!reduced_) throw UsageError("solution() requires reduce()");
  if (j >= rhs_width_) throw UsageError("rhs column out of range");
  for (std::size_t r = pivots_.size(); r < rows_.size(); ++r) {
    if (rows_[r].get(cols_ + j)) return NoSolution{};
  }
  if (pivots_.size() < cols_) return Underdetermined{pivots_.size()};
  BitVector x(cols_);
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    if (rows_[r].get(cols_ + j)) x.set(pivots_[r]);
  }
  return x;
}

std::size_t rank(const BitMatrix& m) {
  AugmentedEliminator e(m.cols(), 0);
  const BitVector empty;
  for (const auto& row : m.row_data()) e.add_row(row, empty);
  return e.reduce();
}

SolveResult solve_unique(const LinearSystem& sys) {
  AugmentedEliminator e(sys.coefficients.cols(), 1);
  BitVector bit(1);
  for (std::size_t r = 0; r < sys.coefficients.rows(); ++r) {
    bit.set(0, sys.rhs.get(r));
    e.add_row(sys.coefficients.row(r), bit);
  }
  e.reduce();
  return e.solution(0);
}

std::vector<SolveResult> solve_unique_multi(const BitMatrix& coefficients, const BitMatrix& rhs) {
  if (coefficients.rows() != rhs.rows()) throw UsageError("coefficient and rhs row counts differ");
  AugmentedEliminator e(coefficients.cols(), rhs.cols());
  for (std::size_t r = 0; r < coefficients.rows(); ++r) e.add_row(coefficients.row(r), rhs.row(r));
  e.reduce();
  std::vector<SolveResult> out;
  out.reserve(rhs.cols());
  for (std::size_t j = 0; j < rhs.cols(); ++j) out.push_back(e.solution(j));
  return out;
}

std::size_t count_satisfied(const LinearSystem& sys, const BitVector& x) {
  if (x.size() != sys.coefficients.cols()) {
    throw UsageError("candidate has " + std::to_string(x.size()) + " bits but the system has " +
                     std::to_string(sys.coefficients.cols()) + " unknowns");
  }
  const auto& k = kernels::active();
  std::size_t satisfied = 0;
  for (std::size_t r = 0; r < sys.coefficients.rows(); ++r) {
    const auto& row = sys.coefficients.row(r);
    const bool lhs = (k.and_popcount(row.words().data(), x.words().data(), row.words().size()) & 1U) != 0;
    if (lhs == sys.rhs.get(r)) ++satisfied;
  }
  return satisfied;
}

IncrementalBasis::IncrementalBasis(std::size_t cols) : cols_(cols), by_pivot_(cols, -1) {}

bool IncrementalBasis::insert(const BitVector& v) {
  if (v.size() != cols_) throw UsageError("basis vector has the wrong length");
  BitVector w = v;
  while (true) {
    const auto ones = w.words();
    std::size_t lead = cols_;
    for (std::size_t i = 0; i < ones.size(); ++i) {
      if (ones[i] != 0) {
        lead = i * BitVector::kWordBits + static_cast<std::size_t>(std::countr_zero(ones[i]));
        break;
      }
    }
    if (lead == cols_) return false;
    const auto slot = by_pivot_[lead];
    if (slot < 0) {
      by_pivot_[lead] = static_cast<std::ptrdiff_t>(basis_.size());
      basis_.push_back(std::move(w));
      return true;
    }
    w ^= basis_[static_cast<std::size_t>(slot)];
  }
}

}  // namespace crfc::gf2
