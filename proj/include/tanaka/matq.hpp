#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "tanaka/rational.hpp"

namespace tanaka {

/// Dense row-major matrix over Q.
class MatQ {
 public:
  MatQ() : rows_(0), cols_(0) {}
  MatQ(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}

  static MatQ identity(std::size_t n) {
    MatQ m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return e_[i * cols_ + j];
  }

  bool operator==(const MatQ& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }
  bool operator!=(const MatQ& o) const { return !(*this == o); }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }

  MatQ transpose() const {
    MatQ t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  MatQ operator*(const MatQ& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("MatQ: shape mismatch in *");
    MatQ p(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Rational& a = (*this)(i, k);
        if (a.is_zero()) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          if (o(k, j).is_zero()) continue;
          p(i, j) += a * o(k, j);
        }
      }
    return p;
  }

  MatQ operator+(const MatQ& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("MatQ: shape mismatch in +");
    MatQ s(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) s.e_[i] = e_[i] + o.e_[i];
    return s;
  }

  MatQ operator-(const MatQ& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("MatQ: shape mismatch in -");
    MatQ s(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) s.e_[i] = e_[i] - o.e_[i];
    return s;
  }

  MatQ scaled(const Rational& c) const {
    MatQ s(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) s.e_[i] = e_[i] * c;
    return s;
  }

  std::vector<Rational> apply(const std::vector<Rational>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("MatQ: apply size mismatch");
    std::vector<Rational> r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!(*this)(i, j).is_zero() && !v[j].is_zero()) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  std::vector<Rational> col(std::size_t j) const {
    std::vector<Rational> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  void set_col(std::size_t j, const std::vector<Rational>& v) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
  }

  static MatQ from_columns(std::size_t ambient,
                           const std::vector<std::vector<Rational>>& cols) {
    MatQ m(ambient, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != ambient)
        throw std::invalid_argument("MatQ: column length mismatch");
      m.set_col(j, cols[j]);
    }
    return m;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> e_;
};

struct RrefResult {
  MatQ r;
  std::vector<std::size_t> pivots;  // pivot columns, increasing
  std::size_t rank = 0;
};

/// Reduced row-echelon form with deterministic first-nonzero pivoting.
inline RrefResult rref(MatQ m) {
  RrefResult out;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t piv = lead;
    while (piv < rows && m(piv, c).is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != lead)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(lead, j));
    const Rational inv = m(lead, c).inv();
    for (std::size_t j = c; j < cols; ++j) m(lead, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == lead || m(i, c).is_zero()) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < cols; ++j) m(i, j) -= f * m(lead, j);
    }
    out.pivots.push_back(c);
    ++lead;
  }
  out.rank = out.pivots.size();
  out.r = std::move(m);
  return out;
}

inline std::size_t rank(const MatQ& m) { return rref(m).rank; }

/// Null space of m; returned as a matrix whose columns form a basis.
inline MatQ kernel(const MatQ& m) {
  const RrefResult rr = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : rr.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  MatQ k(cols, free_cols.size());
  for (std::size_t fj = 0; fj < free_cols.size(); ++fj) {
    const std::size_t fc = free_cols[fj];
    k(fc, fj) = Rational(1);
    for (std::size_t pi = 0; pi < rr.pivots.size(); ++pi)
      k(rr.pivots[pi], fj) = -rr.r(pi, fc);
  }
  return k;
}

/// Exact determinant by fraction-free-style Gaussian elimination.
inline Rational det(MatQ m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: square matrix required");
  const std::size_t n = m.rows();
  Rational d(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c).is_zero()) ++piv;
    if (piv == n) return Rational(0);
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      d = -d;
    }
    d *= m(c, c);
    const Rational inv = m(c, c).inv();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      const Rational f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return d;
}

/// Solves m x = b; returns false when inconsistent. Free variables are set to 0.
inline bool solve(const MatQ& m, const std::vector<Rational>& b,
                  std::vector<Rational>& x) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs size mismatch");
  MatQ aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const RrefResult rr = rref(aug);
  for (std::size_t p : rr.pivots)
    if (p == m.cols()) return false;
  x.assign(m.cols(), Rational(0));
  for (std::size_t pi = 0; pi < rr.pivots.size(); ++pi)
    x[rr.pivots[pi]] = rr.r(pi, m.cols());
  return true;
}

}  // namespace tanaka
