#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cmdef/field.hpp"

namespace cmdef {

using GfVector = std::vector<Coeff>;

// Dense matrix over GF(p), row-major.
class GfMatrix {
 public:
  GfMatrix(std::size_t rows, std::size_t cols, Coeff p);
  static GfMatrix identity(std::size_t n, Coeff p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Coeff p() const { return p_; }

  Coeff& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Coeff operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  GfVector row(std::size_t i) const;
  GfVector column(std::size_t j) const;
  GfMatrix transpose() const;
  std::size_t rank() const;

  friend GfMatrix operator*(const GfMatrix& a, const GfMatrix& b);
  friend GfVector operator*(const GfMatrix& a, const GfVector& v);
  friend bool operator==(const GfMatrix&, const GfMatrix&) = default;

 private:
  std::size_t rows_, cols_;
  Coeff p_;
  std::vector<Coeff> data_;
};

// Reduced row echelon form over GF(p), grown one row at a time. Every stored row
// is monic at its pivot column and zero at every other row's pivot column.
// Pivot choice is the first nonzero column of the reduced incoming row, so the
// result is a deterministic function of the insertion sequence.
class RowEchelon {
 public:
  RowEchelon(Coeff p, std::size_t ncols);

  std::size_t ncols() const { return ncols_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<GfVector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  // Row index holding the pivot for column c, if any.
  std::optional<std::size_t> pivot_row(std::size_t c) const;

  // Returns true when the row was independent and has been added.
  bool insert(GfVector row);
  bool insert_sparse(std::span<const std::pair<std::size_t, Coeff>> entries);
  GfVector reduce(GfVector row) const;
  bool contains(const GfVector& row) const;

  // Basis of {x : row . x = 0 for every stored row}, one vector per free column
  // in increasing column order.
  std::vector<GfVector> nullspace() const;

 private:
  PrimeField f_;
  std::size_t ncols_;
  std::vector<GfVector> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::ptrdiff_t> pivot_of_col_;
};

// Outcome of solving A x = b exactly. rank counts pivots among the unknown
// columns; augmented_rank counts them in [A | b]. Solvable iff the two agree.
struct SolveResult {
  std::optional<GfVector> solution;
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  std::size_t rank = 0;
  std::size_t augmented_rank = 0;
};

// Sparse linear system over GF(p): rows are lists of (column, coefficient) plus
// a right-hand side value. Columns index unknowns 0..unknowns-1.
class SparseSystem {
 public:
  SparseSystem(Coeff p, std::size_t unknowns);

  void add_equation(std::vector<std::pair<std::size_t, Coeff>> lhs, Coeff rhs);
  std::size_t unknowns() const { return unknowns_; }
  std::size_t equations() const { return rows_.size(); }

  SolveResult solve() const;
  // Solutions of the homogeneous system (right-hand sides ignored).
  std::vector<GfVector> nullspace() const;

 private:
  Coeff p_;
  std::size_t unknowns_;
  std::vector<std::pair<std::vector<std::pair<std::size_t, Coeff>>, Coeff>> rows_;
};

// Canonical reduced echelon basis of the span of `vectors` (rows in pivot order).
std::vector<GfVector> echelon_basis(std::span<const GfVector> vectors, Coeff p, std::size_t dim);

// Left inverse L (cols x rows) of a full-column-rank matrix M, so that L M = I.
// Throws InvalidArgument when M is rank deficient.
GfMatrix left_inverse(const GfMatrix& m);

}  // namespace cmdef
