#pragma once

#include <cstddef>
#include <vector>

#include "vcwl/rational.hpp"

namespace vcwl {

/// Dense matrix over the rationals with exact elimination.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Reduced row echelon form; pivot columns returned through `pivots`.
  Matrix rref(std::vector<std::size_t>* pivots = nullptr) const;
  std::size_t rank() const;
  /// Basis of {v : A v = 0}, one vector per free column.
  std::vector<std::vector<Rational>> kernel() const;
  Rational determinant() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Sparse vector: (index, value) pairs with strictly increasing indices and
/// nonzero values.
using SparseVector = std::vector<std::pair<int, Rational>>;

/// Incrementally maintained row echelon basis of a subspace of Q^dim.
///
/// Every stored row has a distinct pivot (its first nonzero index) with
/// value 1, and no stored row has a nonzero entry at another row's pivot,
/// so reduce() yields the canonical representative whose support avoids
/// all pivots.
class Echelon {
 public:
  explicit Echelon(int dim = 0) : dim_(dim), pivot_row_(static_cast<std::size_t>(dim), -1) {}

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  bool is_pivot(int index) const { return pivot_row_[static_cast<std::size_t>(index)] >= 0; }
  const std::vector<SparseVector>& rows() const { return rows_; }

  /// Canonical remainder of v modulo the span.
  SparseVector reduce(const SparseVector& v) const;
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }
  /// Adds v to the span; returns false if it was already contained.
  bool insert(const SparseVector& v);

 private:
  int dim_;
  std::vector<SparseVector> rows_;
  std::vector<int> pivot_row_;
};

/// Kernel of the linear map whose i-th column image is images[i]
/// (all images in Q^target_dim). Returned vectors live in Q^images.size().
std::vector<SparseVector> kernel_of_columns(const std::vector<SparseVector>& images, int target_dim);

SparseVector to_sparse(const std::vector<Rational>& dense);
std::vector<Rational> to_dense(const SparseVector& v, int dim);
/// a += f * b
void axpy(SparseVector& a, const Rational& f, const SparseVector& b);

}  // namespace vcwl
