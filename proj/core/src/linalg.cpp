#include "cmdef/linalg.hpp"

#include <algorithm>

#include "cmdef/errors.hpp"

namespace cmdef {

namespace {

// In-place Gauss-Jordan elimination restricted to the first `limit` columns.
// Returns pivot columns in row order.
std::vector<std::size_t> gauss_jordan(GfMatrix& m, std::size_t limit) {
  PrimeField f(m.p());
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < limit && r < m.rows(); ++c) {
    std::size_t sel = r;
    while (sel < m.rows() && m(sel, c) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(r, j));
    Coeff inv = f.inv(m(r, c));
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Coeff factor = m(i, c);
      for (std::size_t j = 0; j < m.cols(); ++j)
        m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

// ---------------------------------------------------------------- GfMatrix

GfMatrix::GfMatrix(std::size_t rows, std::size_t cols, Coeff p)
    : rows_(rows), cols_(cols), p_(PrimeField(p).p()), data_(rows * cols, 0) {}

GfMatrix GfMatrix::identity(std::size_t n, Coeff p) {
  GfMatrix m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

GfVector GfMatrix::row(std::size_t i) const {
  return GfVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

GfVector GfMatrix::column(std::size_t j) const {
  GfVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

GfMatrix GfMatrix::transpose() const {
  GfMatrix t(cols_, rows_, p_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::size_t GfMatrix::rank() const {
  GfMatrix copy = *this;
  return gauss_jordan(copy, cols_).size();
}

GfMatrix operator*(const GfMatrix& a, const GfMatrix& b) {
  if (a.cols_ != b.rows_ || a.p_ != b.p_) throw InvalidArgument("GF(p) matrix shape mismatch");
  PrimeField f(a.p_);
  GfMatrix r(a.rows_, b.cols_, a.p_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      Coeff x = a(i, k);
      if (!x) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) = f.add(r(i, j), f.mul(x, b(k, j)));
    }
  return r;
}

GfVector operator*(const GfMatrix& a, const GfVector& v) {
  if (a.cols_ != v.size()) throw InvalidArgument("GF(p) matrix-vector shape mismatch");
  PrimeField f(a.p_);
  GfVector r(a.rows_, 0);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) r[i] = f.add(r[i], f.mul(a(i, k), v[k]));
  return r;
}

// -------------------------------------------------------------- RowEchelon

RowEchelon::RowEchelon(Coeff p, std::size_t ncols)
    : f_(p), ncols_(ncols), pivot_of_col_(ncols, -1) {}

std::optional<std::size_t> RowEchelon::pivot_row(std::size_t c) const {
  if (pivot_of_col_[c] < 0) return std::nullopt;
  return static_cast<std::size_t>(pivot_of_col_[c]);
}

GfVector RowEchelon::reduce(GfVector row) const {
  for (std::size_t c = 0; c < ncols_; ++c) {
    if (row[c] == 0 || pivot_of_col_[c] < 0) continue;
    const GfVector& pr = rows_[static_cast<std::size_t>(pivot_of_col_[c])];
    Coeff factor = row[c];
    for (std::size_t j = 0; j < ncols_; ++j)
      if (pr[j]) row[j] = f_.sub(row[j], f_.mul(factor, pr[j]));
  }
  return row;
}

bool RowEchelon::contains(const GfVector& row) const {
  GfVector r = reduce(row);
  return std::all_of(r.begin(), r.end(), [](Coeff c) { return c == 0; });
}

bool RowEchelon::insert(GfVector row) {
  if (row.size() != ncols_) throw InvalidArgument("row length mismatch");
  row = reduce(std::move(row));
  std::size_t pc = 0;
  while (pc < ncols_ && row[pc] == 0) ++pc;
  if (pc == ncols_) return false;
  Coeff inv = f_.inv(row[pc]);
  for (auto& x : row) x = f_.mul(x, inv);
  for (auto& other : rows_) {
    Coeff factor = other[pc];
    if (!factor) continue;
    for (std::size_t j = 0; j < ncols_; ++j)
      if (row[j]) other[j] = f_.sub(other[j], f_.mul(factor, row[j]));
  }
  pivot_of_col_[pc] = static_cast<std::ptrdiff_t>(rows_.size());
  pivots_.push_back(pc);
  rows_.push_back(std::move(row));
  return true;
}

bool RowEchelon::insert_sparse(std::span<const std::pair<std::size_t, Coeff>> entries) {
  GfVector row(ncols_, 0);
  for (auto [c, v] : entries) row[c] = f_.add(row[c], v % f_.p());
  return insert(std::move(row));
}

std::vector<GfVector> RowEchelon::nullspace() const {
  std::vector<GfVector> basis;
  for (std::size_t free = 0; free < ncols_; ++free) {
    if (pivot_of_col_[free] >= 0) continue;
    GfVector v(ncols_, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < rows_.size(); ++r) v[pivots_[r]] = f_.neg(rows_[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

// ------------------------------------------------------------ SparseSystem

SparseSystem::SparseSystem(Coeff p, std::size_t unknowns) : p_(p), unknowns_(unknowns) {}

void SparseSystem::add_equation(std::vector<std::pair<std::size_t, Coeff>> lhs, Coeff rhs) {
  for (auto& e : lhs)
    if (e.first >= unknowns_) throw InvalidArgument("equation references unknown out of range");
  rows_.emplace_back(std::move(lhs), rhs % p_);
}

SolveResult SparseSystem::solve() const {
  // Augmented column sits last, so a pivot there certifies inconsistency.
  RowEchelon ech(p_, unknowns_ + 1);
  for (const auto& [lhs, rhs] : rows_) {
    std::vector<std::pair<std::size_t, Coeff>> entries = lhs;
    if (rhs) entries.emplace_back(unknowns_, rhs);
    ech.insert_sparse(entries);
  }
  SolveResult res;
  res.unknowns = unknowns_;
  res.equations = rows_.size();
  res.augmented_rank = ech.rank();
  res.rank = ech.rank() - (ech.pivot_row(unknowns_) ? 1 : 0);
  if (res.rank == res.augmented_rank) {
    GfVector x(unknowns_, 0);
    for (std::size_t r = 0; r < ech.rank(); ++r) x[ech.pivots()[r]] = ech.rows()[r][unknowns_];
    res.solution = std::move(x);
  }
  return res;
}

std::vector<GfVector> SparseSystem::nullspace() const {
  RowEchelon ech(p_, unknowns_);
  for (const auto& row : rows_) ech.insert_sparse(row.first);
  return ech.nullspace();
}

// ----------------------------------------------------------------- helpers

std::vector<GfVector> echelon_basis(std::span<const GfVector> vectors, Coeff p, std::size_t dim) {
  GfMatrix m(vectors.size(), dim, p);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != dim) throw InvalidArgument("vector length mismatch");
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = vectors[i][j] % p;
  }
  auto pivots = gauss_jordan(m, dim);
  std::vector<GfVector> out;
  for (std::size_t r = 0; r < pivots.size(); ++r) out.push_back(m.row(r));
  return out;
}

GfMatrix left_inverse(const GfMatrix& m) {
  const std::size_t n = m.rows(), k = m.cols();
  // Row-reduce [M^T | I_k]; the right block then holds E with E M^T = RREF.
  GfMatrix aug(k, n + k, m.p());
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(j, i);
    aug(i, n + i) = 1;
  }
  auto pivots = gauss_jordan(aug, n);
  if (pivots.size() != k) throw InvalidArgument("matrix does not have full column rank");
  GfMatrix l(k, n, m.p());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t r = 0; r < k; ++r) l(i, pivots[r]) = aug(r, n + i);
  return l;
}

}  // namespace cmdef
