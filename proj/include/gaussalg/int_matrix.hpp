#pragma once

#include "gaussalg/errors.hpp"
#include "gaussalg/integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

namespace gaussalg {

/// Dense matrix of arbitrary-precision integers. Row-major, value semantics.
class IntMatrix {
public:
  IntMatrix() : rows_(0), cols_(0) {}

  IntMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
    if (rows < 0 || cols < 0) throw input_error("matrix extents must be non-negative");
  }

  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    a_.reserve(static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_));
    for (const auto& r : rows) {
      if (static_cast<int>(r.size()) != cols_) throw input_error("ragged matrix initializer");
      for (long long v : r) a_.emplace_back(v);
    }
  }

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Integer& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Integer& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  void swap_rows(int i, int j) {
    for (int c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }

  IntMatrix transposed() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  std::vector<Integer> row(int i) const {
    std::vector<Integer> r(static_cast<std::size_t>(cols_));
    for (int j = 0; j < cols_; ++j) r[static_cast<std::size_t>(j)] = (*this)(i, j);
    return r;
  }

  std::vector<Integer> col(int j) const {
    std::vector<Integer> c(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) c[static_cast<std::size_t>(i)] = (*this)(i, j);
    return c;
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

private:
  int rows_;
  int cols_;
  std::vector<Integer> a_;
};

/// Exact determinant by fraction-free (Bareiss) elimination. Sign is reported
/// for the row/column order as given.
inline Integer det_exact(IntMatrix m) {
  if (m.rows() != m.cols()) throw input_error("det_exact: matrix is not square");
  const int n = m.rows();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    int p = -1;
    for (int i = k; i < n; ++i)
      if (m(i, k) != 0) {
        p = i;
        break;
      }
    if (p < 0) return 0;
    if (p != k) {
      m.swap_rows(p, k);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : Integer(-m(n - 1, n - 1));
}

/// Rank over the rationals, by fraction-free elimination with column skipping.
inline int rank(IntMatrix m) {
  const int rows = m.rows(), cols = m.cols();
  int r = 0;
  Integer prev = 1;
  for (int col = 0; col < cols && r < rows; ++col) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (m(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r) m.swap_rows(p, r);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j) m(i, j) = (m(r, col) * m(i, j) - m(i, col) * m(r, j)) / prev;
      m(i, col) = 0;
    }
    prev = m(r, col);
    ++r;
  }
  return r;
}

/// Row Hermite normal form, zero rows removed: pivots positive with strictly
/// increasing pivot columns, entries above each pivot reduced into [0, pivot).
inline IntMatrix hnf_rows(IntMatrix m) {
  const int rows = m.rows(), cols = m.cols();
  int r = 0;
  for (int col = 0; col < cols && r < rows; ++col) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (m(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r) m.swap_rows(p, r);
    for (int i = r + 1; i < rows; ++i) {
      if (m(i, col) == 0) continue;
      const Xgcd x = xgcd(m(r, col), m(i, col));
      const Integer ar = m(r, col) / x.g;
      const Integer ai = m(i, col) / x.g;
      for (int j = col; j < cols; ++j) {
        Integer top = x.p * m(r, j) + x.q * m(i, j);
        Integer bot = ar * m(i, j) - ai * m(r, j);
        m(r, j) = std::move(top);
        m(i, j) = std::move(bot);
      }
    }
    if (m(r, col) < 0)
      for (int j = col; j < cols; ++j) m(r, j) = -m(r, j);
    for (int i = 0; i < r; ++i) {
      const Integer q = floor_div(m(i, col), m(r, col));
      if (q == 0) continue;
      for (int j = col; j < cols; ++j) m(i, j) -= q * m(r, j);
    }
    ++r;
  }
  IntMatrix h(r, cols);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < cols; ++j) h(i, j) = m(i, j);
  return h;
}

/// A subgroup of Z^ambient, held as a row Hermite normal form basis.
class LatticeBasis {
public:
  LatticeBasis() : ambient_(0) {}

  /// Lattice generated by the rows of `generators` (need not be independent).
  static LatticeBasis from_rows(int ambient, const IntMatrix& generators) {
    if (generators.cols() != ambient) throw input_error("lattice generators have wrong ambient dimension");
    LatticeBasis b;
    b.ambient_ = ambient;
    b.basis_ = hnf_rows(generators);
    return b;
  }

  static LatticeBasis zero(int ambient) { return from_rows(ambient, IntMatrix(0, ambient)); }

  int ambient() const { return ambient_; }
  int rank() const { return basis_.rows(); }
  const IntMatrix& basis() const { return basis_; }

  /// Membership via pivot reduction against the HNF rows.
  bool contains(std::vector<Integer> v) const {
    GAUSSALG_CHECK(static_cast<int>(v.size()) == ambient_);
    int row = 0;
    for (int col = 0; col < ambient_ && row < basis_.rows(); ++col) {
      if (basis_(row, col) == 0) continue; // not this row's pivot column
      const Integer& piv = basis_(row, col);
      if (v[static_cast<std::size_t>(col)] % piv != 0) return false;
      const Integer q = v[static_cast<std::size_t>(col)] / piv;
      if (q != 0)
        for (int j = col; j < ambient_; ++j) v[static_cast<std::size_t>(j)] -= q * basis_(row, j);
      ++row;
    }
    for (const Integer& x : v)
      if (x != 0) return false;
    return true;
  }

  friend bool operator==(const LatticeBasis& a, const LatticeBasis& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

private:
  int ambient_;
  IntMatrix basis_;
};

/// True iff the two bases generate the same subgroup of Z^d.
inline bool lattice_equal(const LatticeBasis& a, const LatticeBasis& b) {
  if (a.ambient() != b.ambient()) throw input_error("lattice_equal: ambient dimension mismatch");
  return a.basis() == b.basis();
}

/// HNF basis of the integer kernel {v : Mv = 0}. The returned lattice is
/// saturated, so its basis vectors are primitive.
inline LatticeBasis kernel_lattice(const IntMatrix& m) {
  const int n = m.cols();
  const int rows = m.rows();
  // Row-reduce [M^T | I] over Z; rows whose left block vanishes carry a kernel
  // basis of M in the right block.
  IntMatrix b(n, rows + n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < rows; ++j) b(i, j) = m(j, i);
    b(i, rows + i) = 1;
  }
  int r = 0;
  for (int col = 0; col < rows && r < n; ++col) {
    int p = -1;
    for (int i = r; i < n; ++i)
      if (b(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r) b.swap_rows(p, r);
    for (int i = r + 1; i < n; ++i) {
      if (b(i, col) == 0) continue;
      const Xgcd x = xgcd(b(r, col), b(i, col));
      const Integer ar = b(r, col) / x.g;
      const Integer ai = b(i, col) / x.g;
      for (int j = col; j < rows + n; ++j) {
        Integer top = x.p * b(r, j) + x.q * b(i, j);
        Integer bot = ar * b(i, j) - ai * b(r, j);
        b(r, j) = std::move(top);
        b(i, j) = std::move(bot);
      }
    }
    ++r;
  }
  IntMatrix ker(n - r, n);
  for (int i = r; i < n; ++i)
    for (int j = 0; j < n; ++j) ker(i - r, j) = b(i, rows + j);
  return LatticeBasis::from_rows(n, ker);
}

} // namespace gaussalg
