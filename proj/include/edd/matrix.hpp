#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "edd/error.hpp"
#include "edd/fraction.hpp"
#include "edd/ring.hpp"

namespace edd {

/// Dense row-major matrix over a ring or its fraction field. Zero rows or
/// zero columns are allowed and behave as empty blocks.
template <class T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) throw ShapeError("entry count does not match shape");
  }
  Matrix(std::initializer_list<std::initializer_list<T>> rows) : rows_(rows.size()) {
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw ShapeError("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  /// rows x cols matrix with `diag` on the leading diagonal.
  static Matrix diagonal(const std::vector<T>& diag, std::size_t rows, std::size_t cols) {
    if (diag.size() > rows || diag.size() > cols) throw ShapeError("diagonal longer than matrix");
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
  }
  static Matrix diagonal(const std::vector<T>& diag) { return diagonal(diag, diag.size(), diag.size()); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const std::vector<T>& entries() const { return data_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw ShapeError("block out of range");
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw ShapeError("block out of range");
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  /// Rows (a, b) <- [[x, y], [z, w]] * rows (a, b).
  void combine_rows(std::size_t a, std::size_t b, const T& x, const T& y, const T& z, const T& w) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const T ra = (*this)(a, j);
      const T rb = (*this)(b, j);
      (*this)(a, j) = x * ra + y * rb;
      (*this)(b, j) = z * ra + w * rb;
    }
  }
  /// Columns (a, b) <- columns (a, b) * [[x, z], [y, w]], i.e. col a = x*ca + y*cb.
  void combine_cols(std::size_t a, std::size_t b, const T& x, const T& y, const T& z, const T& w) {
    for (std::size_t i = 0; i < rows_; ++i) {
      const T ca = (*this)(i, a);
      const T cb = (*this)(i, b);
      (*this)(i, a) = x * ca + y * cb;
      (*this)(i, b) = z * ca + w * cb;
    }
  }
  void scale_row(std::size_t r, const T& s) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = s * (*this)(r, j);
  }
  void scale_col(std::size_t c, const T& s) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = (*this)(i, c) * s;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw ShapeError("product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = c(i, j) + aik * b(k, j);
      }
    return c;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix c(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) c.data_[k] = a.data_[k] + b.data_[k];
    return c;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix c(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) c.data_[k] = a.data_[k] - b.data_[k];
    return c;
  }
  friend Matrix operator-(const Matrix& a) {
    Matrix c(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) c.data_[k] = -a.data_[k];
    return c;
  }
  friend Matrix operator*(const T& s, const Matrix& a) {
    Matrix c(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) c.data_[k] = s * a.data_[k];
    return c;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void require_same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw ShapeError("shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class R>
using MatF = Matrix<Frac<R>>;

// ---------------------------------------------------------------------------
// Block assembly

template <class T>
Matrix<T> hcat(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows()) throw ShapeError("hcat row mismatch");
  Matrix<T> c(a.rows(), a.cols() + b.cols());
  c.set_block(0, 0, a);
  c.set_block(0, a.cols(), b);
  return c;
}

template <class T>
Matrix<T> vcat(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.cols()) throw ShapeError("vcat column mismatch");
  Matrix<T> c(a.rows() + b.rows(), a.cols());
  c.set_block(0, 0, a);
  c.set_block(a.rows(), 0, b);
  return c;
}

template <class T>
Matrix<T> direct_sum(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> c(a.rows() + b.rows(), a.cols() + b.cols());
  c.set_block(0, 0, a);
  c.set_block(a.rows(), a.cols(), b);
  return c;
}

/// [[a, b], [c, d]].
template <class T>
Matrix<T> block2x2(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& c, const Matrix<T>& d) {
  return vcat(hcat(a, b), hcat(c, d));
}

// ---------------------------------------------------------------------------
// Ring <-> field conversion

template <EuclideanRing R>
MatF<R> to_field(const Matrix<R>& m) {
  std::vector<Frac<R>> e;
  e.reserve(m.entries().size());
  for (const auto& x : m.entries()) e.emplace_back(x);
  return MatF<R>(m.rows(), m.cols(), std::move(e));
}

template <EuclideanRing R>
const MatF<R>& to_field(const MatF<R>& m) {
  return m;
}

template <EuclideanRing R>
bool is_integral(const MatF<R>& m) {
  for (const auto& x : m.entries())
    if (!x.is_integral()) return false;
  return true;
}

/// Entries as ring elements; throws when some entry has a nontrivial denominator.
template <EuclideanRing R>
Matrix<R> to_ring(const MatF<R>& m) {
  std::vector<R> e;
  e.reserve(m.entries().size());
  for (const auto& x : m.entries()) {
    if (!x.is_integral()) throw HypothesisError("entry " + to_string(x) + " is not in the ring " + R::name);
    e.push_back(x.num());
  }
  return Matrix<R>(m.rows(), m.cols(), std::move(e));
}

/// Least common denominator of the entries (1 for empty matrices).
template <EuclideanRing R>
R lcd(const MatF<R>& m) {
  R acc = R::one();
  for (const auto& x : m.entries()) acc = lcm(acc, x.den());
  return acc;
}

template <EuclideanRing R>
R lcd(const Matrix<R>&) {
  return R::one();
}

/// s * m as a ring matrix; s * m must be ring valued.
template <EuclideanRing R>
Matrix<R> scale_to_ring(const R& s, const MatF<R>& m) {
  return to_ring(Frac<R>(s) * m);
}

// ---------------------------------------------------------------------------
// Determinant, rank, inverse

namespace detail {

template <EuclideanRing R>
R det_bareiss(Matrix<R> m) {
  const std::size_t n = m.rows();
  if (n == 0) return R::one();
  bool negate = false;
  R prev = R::one();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m(piv, k).is_zero()) ++piv;
    if (piv == n) return R::zero();
    if (piv != k) {
      m.swap_rows(piv, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = divide_exact(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
      m(i, k) = R::zero();
    }
    prev = m(k, k);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

/// Gaussian elimination in place; returns (rank, determinant if square).
template <class F>
std::pair<std::size_t, F> eliminate(Matrix<F>& m) {
  std::size_t rank = 0;
  F det = F(1);
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t piv = rank;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) {
      det = F();
      continue;
    }
    if (piv != rank) {
      m.swap_rows(piv, rank);
      det = -det;
    }
    const F p = m(rank, col);
    det = det * p;
    const F inv = F(1) / p;
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      if (m(i, col).is_zero()) continue;
      const F f = m(i, col) * inv;
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(rank, j);
    }
    ++rank;
  }
  if (rank < m.rows()) det = F();
  return {rank, det};
}

}  // namespace detail

/// Exact determinant; det of the 0x0 matrix is 1.
template <class T>
T det(const Matrix<T>& m) {
  if (!m.is_square()) throw ShapeError("determinant of non-square matrix");
  if constexpr (is_frac_v<T>) {
    if (m.rows() == 0) return T(1);
    Matrix<T> w = m;
    return detail::eliminate(w).second;
  } else {
    return detail::det_bareiss(m);
  }
}

/// Rank over the fraction field; 0 for empty matrices.
template <class T>
std::size_t rank(const Matrix<T>& m) {
  if constexpr (is_frac_v<T>) {
    Matrix<T> w = m;
    return detail::eliminate(w).first;
  } else {
    MatF<T> w = to_field(m);
    return detail::eliminate(w).first;
  }
}

/// Inverse over the fraction field; throws on singular input.
template <EuclideanRing R>
MatF<R> inverse(const MatF<R>& m) {
  if (!m.is_square()) throw ShapeError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  MatF<R> w = hcat(m, MatF<R>::identity(n));
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && w(piv, col).is_zero()) ++piv;
    if (piv == n) throw HypothesisError("singular matrix");
    w.swap_rows(piv, col);
    const Frac<R> inv = w(col, col).inverse();
    w.scale_row(col, inv);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || w(i, col).is_zero()) continue;
      const Frac<R> f = w(i, col);
      for (std::size_t j = col; j < 2 * n; ++j) w(i, j) = w(i, j) - f * w(col, j);
    }
  }
  return w.block(0, n, n, n);
}

/// Inverse of a unimodular ring matrix, as a ring matrix.
template <EuclideanRing R>
Matrix<R> inverse_unimodular(const Matrix<R>& m) {
  if (!is_unit(det(m))) throw HypothesisError("matrix is not unimodular");
  return to_ring(inverse(to_field(m)));
}

template <EuclideanRing R>
bool is_unimodular(const Matrix<R>& m) {
  return m.is_square() && is_unit(det(m));
}

// ---------------------------------------------------------------------------
// Index sets and minors

/// Strictly increasing list of 1-based indices.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::initializer_list<std::size_t> idx) : IndexSet(std::vector<std::size_t>(idx)) {}
  explicit IndexSet(std::vector<std::size_t> idx) : idx_(std::move(idx)) {
    for (std::size_t k = 0; k < idx_.size(); ++k) {
      if (idx_[k] == 0) throw ShapeError("index sets are 1-based");
      if (k > 0 && idx_[k] <= idx_[k - 1]) throw ShapeError("index set must be strictly increasing");
    }
  }

  /// {1, ..., n}.
  static IndexSet range(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = k + 1;
    return IndexSet(std::move(v));
  }

  std::size_t size() const { return idx_.size(); }
  bool empty() const { return idx_.empty(); }
  const std::vector<std::size_t>& indices() const { return idx_; }
  std::size_t max() const { return idx_.empty() ? 0 : idx_.back(); }

  /// Every index shifted by `offset`.
  IndexSet shifted(std::size_t offset) const {
    std::vector<std::size_t> v(idx_);
    for (auto& x : v) x += offset;
    return IndexSet(std::move(v));
  }

  /// Union with a set whose indices all exceed ours.
  IndexSet concat(const IndexSet& later) const {
    std::vector<std::size_t> v(idx_);
    v.insert(v.end(), later.idx_.begin(), later.idx_.end());
    return IndexSet(std::move(v));
  }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<std::size_t> idx_;
};

template <class T>
Matrix<T> submatrix(const Matrix<T>& m, const IndexSet& rows, const IndexSet& cols) {
  if (rows.max() > m.rows() || cols.max() > m.cols()) throw ShapeError("index set out of bounds");
  Matrix<T> s(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = m(rows.indices()[i] - 1, cols.indices()[j] - 1);
  return s;
}

template <class T>
T minor(const Matrix<T>& m, const IndexSet& rows, const IndexSet& cols) {
  if (rows.size() != cols.size()) throw ShapeError("minor needs |I| == |J|");
  return det(submatrix(m, rows, cols));
}

/// Calls f(I) for every k-subset of {1..n} in lexicographic order.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i + 1;
  while (true) {
    f(IndexSet(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

template <class T>
std::string to_string(const Matrix<T>& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += i == 0 ? "[" : ", [";
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j == 0 ? "" : ", ") + to_string(m(i, j));
    s += "]";
  }
  return s + "]";
}

}  // namespace edd
