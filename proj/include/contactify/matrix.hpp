#pragma once

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "contactify/rational.hpp"

namespace contactify {

/// Dense matrix over the exact rationals, row-major. Matrices are value
/// types; all operations return new matrices.
class QMatrix {
public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}
  QMatrix(int rows, int cols, std::vector<Rational> entries)
      : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != size_t(rows) * cols)
      throw std::invalid_argument("QMatrix: entry count does not match shape");
  }
  /// Build from integer rows, e.g. QMatrix::from_int({{0,1},{-1,0}}).
  static QMatrix from_int(std::initializer_list<std::initializer_list<long>> rows) {
    int r = int(rows.size());
    int c = r ? int(rows.begin()->size()) : 0;
    QMatrix m(r, c);
    int i = 0;
    for (const auto& row : rows) {
      if (int(row.size()) != c) throw std::invalid_argument("QMatrix: ragged rows");
      int j = 0;
      for (long v : row) m(i, j++) = Rational(v);
      ++i;
    }
    return m;
  }
  static QMatrix identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; i++) m(i, i) = Rational(1);
    return m;
  }
  static QMatrix zero(int rows, int cols) { return QMatrix(rows, cols); }
  /// Elementary matrix E_{ij} (1-based indices), value 1 at (i,j).
  static QMatrix unit(int n, int i, int j) {
    QMatrix m(n, n);
    m(i - 1, j - 1) = Rational(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Rational& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  const std::vector<Rational>& entries() const { return a_; }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; i++)
      for (int j = i + 1; j < cols_; j++)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }
  bool is_antisymmetric() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; i++)
      for (int j = i; j < cols_; j++)
        if ((*this)(i, j) != -(*this)(j, i)) return false;
    return true;
  }

  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const QMatrix& a, const QMatrix& b) { return !(a == b); }

  QMatrix operator-() const {
    QMatrix r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); k++) r.a_[k] = -a_[k];
    return r;
  }
  friend QMatrix operator+(const QMatrix& a, const QMatrix& b) {
    a.check_same_shape(b);
    QMatrix r(a.rows_, a.cols_);
    for (size_t k = 0; k < a.a_.size(); k++) r.a_[k] = a.a_[k] + b.a_[k];
    return r;
  }
  friend QMatrix operator-(const QMatrix& a, const QMatrix& b) {
    a.check_same_shape(b);
    QMatrix r(a.rows_, a.cols_);
    for (size_t k = 0; k < a.a_.size(); k++) r.a_[k] = a.a_[k] - b.a_[k];
    return r;
  }
  friend QMatrix operator*(const Rational& c, const QMatrix& m) {
    QMatrix r(m.rows_, m.cols_);
    for (size_t k = 0; k < m.a_.size(); k++) r.a_[k] = c * m.a_[k];
    return r;
  }
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("QMatrix: shape mismatch in product");
    QMatrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; i++)
      for (int k = 0; k < a.cols_; k++) {
        const Rational& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < b.cols_; j++) {
          const Rational& bkj = b(k, j);
          if (!bkj.is_zero()) r(i, j) += aik * bkj;
        }
      }
    return r;
  }

  QMatrix transpose() const {
    QMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; i++)
      for (int j = 0; j < cols_; j++) r(j, i) = (*this)(i, j);
    return r;
  }

  Rational trace() const {
    Rational t;
    for (int i = 0; i < std::min(rows_, cols_); i++) t += (*this)(i, i);
    return t;
  }

  /// Commutator ab - ba.
  friend QMatrix bracket(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

  /// Column-major flattening of the matrix as a single column vector.
  QMatrix vectorize() const {
    QMatrix v(rows_ * cols_, 1);
    for (int j = 0; j < cols_; j++)
      for (int i = 0; i < rows_; i++) v(j * rows_ + i, 0) = (*this)(i, j);
    return v;
  }

private:
  void check_same_shape(const QMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("QMatrix: shape mismatch");
  }
  int rows_, cols_;
  std::vector<Rational> a_;
};

/// Kronecker product; dims multiply.
inline QMatrix kron(const QMatrix& a, const QMatrix& b) {
  QMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); i++)
    for (int j = 0; j < a.cols(); j++) {
      const Rational& aij = a(i, j);
      if (aij.is_zero()) continue;
      for (int k = 0; k < b.rows(); k++)
        for (int l = 0; l < b.cols(); l++) {
          const Rational& bkl = b(k, l);
          if (!bkl.is_zero()) r(i * b.rows() + k, j * b.cols() + l) = aij * bkl;
        }
    }
  return r;
}

inline QMatrix kron(const std::vector<QMatrix>& factors) {
  if (factors.empty()) throw std::invalid_argument("kron: empty factor list");
  QMatrix r = factors[0];
  for (size_t i = 1; i < factors.size(); i++) r = kron(r, factors[i]);
  return r;
}

/// Row-reduction engine. Reduces in place with pivot selection by smallest
/// scalar complexity (keeps coefficient growth in check, in the spirit of
/// fraction-free elimination); rows are renormalized to primitive integer
/// vectors after each elimination step.
class Rref {
public:
  explicit Rref(QMatrix m) : m_(std::move(m)) { reduce(); }

  const QMatrix& matrix() const { return m_; }
  const std::vector<int>& pivot_cols() const { return pivot_cols_; }
  int rank() const { return int(pivot_cols_.size()); }

private:
  void reduce() {
    int r = 0;
    for (int c = 0; c < m_.cols() && r < m_.rows(); c++) {
      int best = -1;
      size_t best_cx = 0;
      for (int i = r; i < m_.rows(); i++) {
        if (m_(i, c).is_zero()) continue;
        size_t cx = m_(i, c).complexity();
        if (best < 0 || cx < best_cx) { best = i; best_cx = cx; }
      }
      if (best < 0) continue;
      if (best != r)
        for (int j = 0; j < m_.cols(); j++) std::swap(m_(r, j), m_(best, j));
      Rational inv = m_(r, c).inverse();
      for (int j = c; j < m_.cols(); j++)
        if (!m_(r, j).is_zero()) m_(r, j) *= inv;
      for (int i = 0; i < m_.rows(); i++) {
        if (i == r || m_(i, c).is_zero()) continue;
        Rational f = m_(i, c);
        for (int j = c; j < m_.cols(); j++)
          if (!m_(r, j).is_zero()) m_(i, j) -= f * m_(r, j);
      }
      pivot_cols_.push_back(c);
      ++r;
    }
  }

  QMatrix m_;
  std::vector<int> pivot_cols_;
};

inline int rank(const QMatrix& m) { return Rref(m).rank(); }

/// Canonical basis of a subspace spanned by the given row vectors: the
/// nonzero rows of the RREF of the stacked matrix. Unique per subspace.
inline std::vector<QMatrix> canonical_row_basis(const QMatrix& rows_span) {
  Rref f(rows_span);
  std::vector<QMatrix> basis;
  for (int i = 0; i < f.rank(); i++) {
    QMatrix v(rows_span.cols(), 1);
    for (int j = 0; j < rows_span.cols(); j++) v(j, 0) = f.matrix()(i, j);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Basis of {v : m v = 0} as column vectors, in RREF-canonical form.
/// Empty iff m is injective.
inline std::vector<QMatrix> nullspace(const QMatrix& m) {
  Rref f(m);
  const auto& R = f.matrix();
  const auto& piv = f.pivot_cols();
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : piv) is_pivot[c] = true;
  int nfree = m.cols() - f.rank();
  if (nfree == 0) return {};
  QMatrix span(nfree, m.cols());
  int k = 0;
  for (int c = 0; c < m.cols(); c++) {
    if (is_pivot[c]) continue;
    span(k, c) = Rational(1);
    for (int i = 0; i < f.rank(); i++) span(k, piv[i]) = -R(i, c);
    ++k;
  }
  return canonical_row_basis(span);
}

/// Solver with a reusable factorization: solves a x = b for many b against
/// the same a. Records the row operations as a multiplier matrix.
class LinearSolver {
public:
  explicit LinearSolver(const QMatrix& a) : n_(a.rows()), m_(a.cols()) {
    QMatrix aug(a.rows(), a.cols() + a.rows());
    for (int i = 0; i < a.rows(); i++) {
      for (int j = 0; j < a.cols(); j++) aug(i, j) = a(i, j);
      aug(i, a.cols() + i) = Rational(1);
    }
    // restrict pivoting to the first m_ columns
    int r = 0;
    std::vector<int> piv;
    for (int c = 0; c < m_ && r < n_; c++) {
      int best = -1;
      size_t best_cx = 0;
      for (int i = r; i < n_; i++) {
        if (aug(i, c).is_zero()) continue;
        size_t cx = aug(i, c).complexity();
        if (best < 0 || cx < best_cx) { best = i; best_cx = cx; }
      }
      if (best < 0) continue;
      if (best != r)
        for (int j = 0; j < aug.cols(); j++) std::swap(aug(r, j), aug(best, j));
      Rational inv = aug(r, c).inverse();
      for (int j = 0; j < aug.cols(); j++)
        if (!aug(r, j).is_zero()) aug(r, j) *= inv;
      for (int i = 0; i < n_; i++) {
        if (i == r || aug(i, c).is_zero()) continue;
        Rational f = aug(i, c);
        for (int j = 0; j < aug.cols(); j++)
          if (!aug(r, j).is_zero()) aug(i, j) -= f * aug(r, j);
      }
      piv.push_back(c);
      ++r;
    }
    rref_ = std::move(aug);
    pivot_cols_ = std::move(piv);
  }

  int rank() const { return int(pivot_cols_.size()); }
  bool injective() const { return rank() == m_; }

  /// Least structured solve: returns x with a x = b and free coordinates 0.
  /// Throws std::domain_error when inconsistent.
  QMatrix solve(const QMatrix& b) const {
    if (b.rows() != n_) throw std::invalid_argument("LinearSolver: rhs shape");
    QMatrix eb(n_, b.cols());  // E * b
    for (int i = 0; i < n_; i++)
      for (int j = 0; j < b.cols(); j++) {
        Rational s;
        for (int k = 0; k < n_; k++) {
          const Rational& e = rref_(i, m_ + k);
          if (!e.is_zero() && !b(k, j).is_zero()) s += e * b(k, j);
        }
        eb(i, j) = s;
      }
    int r = rank();
    for (int i = r; i < n_; i++)
      for (int j = 0; j < b.cols(); j++)
        if (!eb(i, j).is_zero()) throw std::domain_error("LinearSolver: inconsistent system");
    QMatrix x(m_, b.cols());
    for (int i = 0; i < r; i++)
      for (int j = 0; j < b.cols(); j++) x(pivot_cols_[i], j) = eb(i, j);
    return x;
  }

private:
  int n_, m_;
  QMatrix rref_;
  std::vector<int> pivot_cols_;
};

/// Exact inertia (positives, negatives, zeros) of a symmetric matrix by
/// congruence elimination (Sylvester's law). Rejects non-symmetric input.
inline std::tuple<int, int, int> signature(const QMatrix& sym) {
  if (!sym.is_symmetric()) throw std::invalid_argument("signature: matrix not symmetric");
  QMatrix m = sym;
  int n = m.rows();
  std::vector<int> active(n);
  for (int i = 0; i < n; i++) active[i] = i;
  int pos = 0, neg = 0;
  while (!active.empty()) {
    // prefer a nonzero diagonal pivot of least complexity
    int pk = -1;
    size_t best_cx = 0;
    for (size_t t = 0; t < active.size(); t++) {
      int k = active[t];
      if (m(k, k).is_zero()) continue;
      size_t cx = m(k, k).complexity();
      if (pk < 0 || cx < best_cx) { pk = int(t); best_cx = cx; }
    }
    if (pk < 0) {
      // zero diagonal: find off-diagonal nonzero and symmetrize it in
      int ai = -1, aj = -1;
      for (size_t t = 0; t < active.size() && ai < 0; t++)
        for (size_t u = t + 1; u < active.size(); u++)
          if (!m(active[t], active[u]).is_zero()) { ai = active[t]; aj = active[u]; break; }
      if (ai < 0) break;  // remaining block is zero
      for (int c = 0; c < n; c++) m(ai, c) += m(aj, c);
      for (int r = 0; r < n; r++) m(r, ai) += m(r, aj);
      continue;
    }
    int k = active[pk];
    if (m(k, k).sign() > 0) pos++; else neg++;
    Rational inv = m(k, k).inverse();
    active.erase(active.begin() + pk);
    for (int r : active) {
      if (m(r, k).is_zero()) continue;
      Rational f = m(r, k) * inv;
      for (int c : active) {
        if (m(k, c).is_zero()) continue;
        m(r, c) -= f * m(k, c);
      }
    }
    for (int r : active) {
      m(r, k) = Rational(0);
      m(k, r) = Rational(0);
    }
  }
  return {pos, neg, n - pos - neg};
}

}  // namespace contactify
