#include "vcwl/matrix.hpp"

#include <algorithm>

#include "vcwl/error.hpp"

namespace vcwl {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::rref(std::vector<std::size_t>* pivots) const {
  Matrix a = *this;
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t p = r;
    while (p < rows_ && a(p, c) == 0) ++p;
    if (p == rows_) continue;
    if (p != r) {
      for (std::size_t k = 0; k < cols_; ++k) swap(a(p, k), a(r, k));
    }
    Rational inv = 1 / a(r, c);
    for (std::size_t k = c; k < cols_; ++k) a(r, k) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t k = c; k < cols_; ++k) a(i, k) -= f * a(r, k);
    }
    piv.push_back(c);
    ++r;
  }
  if (pivots) *pivots = std::move(piv);
  return a;
}

std::size_t Matrix::rank() const {
  std::vector<std::size_t> piv;
  rref(&piv);
  return piv.size();
}

std::vector<std::vector<Rational>> Matrix::kernel() const {
  std::vector<std::size_t> piv;
  Matrix a = rref(&piv);
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols_);
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational Matrix::determinant() const {
  if (rows_ != cols_) throw DimensionError("determinant of a non-square matrix");
  Matrix a = *this;
  Rational det = 1;
  for (std::size_t c = 0; c < cols_; ++c) {
    std::size_t p = c;
    while (p < rows_ && a(p, c) == 0) ++p;
    if (p == rows_) return 0;
    if (p != c) {
      for (std::size_t k = 0; k < cols_; ++k) swap(a(p, k), a(c, k));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < rows_; ++i) {
      if (a(i, c) == 0) continue;
      Rational f = a(i, c) / a(c, c);
      for (std::size_t k = c; k < cols_; ++k) a(i, k) -= f * a(c, k);
    }
  }
  return det;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  Matrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
    }
  }
  return r;
}

SparseVector to_sparse(const std::vector<Rational>& dense) {
  SparseVector v;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] != 0) v.emplace_back(static_cast<int>(i), dense[i]);
  }
  return v;
}

std::vector<Rational> to_dense(const SparseVector& v, int dim) {
  std::vector<Rational> w(static_cast<std::size_t>(dim));
  for (const auto& [i, x] : v) w[static_cast<std::size_t>(i)] = x;
  return w;
}

void axpy(SparseVector& a, const Rational& f, const SparseVector& b) {
  if (f == 0 || b.empty()) return;
  SparseVector out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(std::move(a[i++]));
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, f * b[j].second);
      ++j;
    } else {
      Rational x = a[i].second + f * b[j].second;
      if (x != 0) out.emplace_back(a[i].first, std::move(x));
      ++i;
      ++j;
    }
  }
  a = std::move(out);
}

SparseVector Echelon::reduce(const SparseVector& v) const {
  if (v.empty()) return {};
  if (!v.empty() && v.back().first >= dim_) throw DimensionError("vector outside echelon space");
  if (rows_.empty()) return v;
  // Sparse fast path: touch only pivots that actually occur.
  bool hits = false;
  for (const auto& [i, x] : v) {
    if (pivot_row_[static_cast<std::size_t>(i)] >= 0) {
      hits = true;
      break;
    }
  }
  if (!hits) return v;
  SparseVector w = v;
  std::size_t pos = 0;
  while (pos < w.size()) {
    int idx = w[pos].first;
    int r = pivot_row_[static_cast<std::size_t>(idx)];
    if (r < 0) {
      ++pos;
      continue;
    }
    Rational f = -w[pos].second;
    axpy(w, f, rows_[static_cast<std::size_t>(r)]);
    // the pivot entry is gone; entries before pos are unaffected
  }
  return w;
}

bool Echelon::insert(const SparseVector& v) {
  SparseVector w = reduce(v);
  if (w.empty()) return false;
  int piv = w.front().first;
  Rational inv = 1 / w.front().second;
  for (auto& [i, x] : w) x *= inv;
  // keep other rows free of the new pivot
  for (auto& row : rows_) {
    auto it = std::lower_bound(row.begin(), row.end(), piv,
                               [](const auto& e, int key) { return e.first < key; });
    if (it != row.end() && it->first == piv) {
      Rational f = -it->second;
      axpy(row, f, w);
    }
  }
  pivot_row_[static_cast<std::size_t>(piv)] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(w));
  return true;
}

std::vector<SparseVector> kernel_of_columns(const std::vector<SparseVector>& images, int target_dim) {
  // Each stored row pairs an image (pivot-normalized) with its combination.
  struct Row {
    SparseVector image;
    SparseVector combo;
  };
  std::vector<Row> rows;
  std::vector<int> pivot_row(static_cast<std::size_t>(target_dim), -1);
  std::vector<SparseVector> kernel;
  for (std::size_t col = 0; col < images.size(); ++col) {
    SparseVector img = images[col];
    std::sort(img.begin(), img.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVector combo{{static_cast<int>(col), Rational(1)}};
    std::size_t pos = 0;
    while (pos < img.size()) {
      int r = pivot_row[static_cast<std::size_t>(img[pos].first)];
      if (r < 0) {
        ++pos;
        continue;
      }
      Rational f = -img[pos].second;
      axpy(img, f, rows[static_cast<std::size_t>(r)].image);
      axpy(combo, f, rows[static_cast<std::size_t>(r)].combo);
    }
    if (img.empty()) {
      kernel.push_back(std::move(combo));
      continue;
    }
    Rational inv = 1 / img.front().second;
    for (auto& [i, x] : img) x *= inv;
    for (auto& [i, x] : combo) x *= inv;
    pivot_row[static_cast<std::size_t>(img.front().first)] = static_cast<int>(rows.size());
    rows.push_back({std::move(img), std::move(combo)});
  }
  return kernel;
}

}  // namespace vcwl
