#pragma once

#include <stdexcept>
#include <vector>

#include "tanaka/matq.hpp"

namespace tanaka {

/// Linear subspace of Q^n held in a canonical reduced echelon basis, so two
/// Subspace values describing the same space compare equal field-by-field.
class Subspace {
 public:
  Subspace() : ambient_(0) {}

  explicit Subspace(std::size_t ambient_dim)
      : ambient_(ambient_dim), basis_(ambient_dim, 0) {}

  /// Spanning columns -> canonical basis (pivots normalized, zeros above).
  static Subspace span_columns(const MatQ& columns) {
    Subspace s(columns.rows());
    const RrefResult rr = rref(columns.transpose());
    MatQ b(columns.rows(), rr.rank);
    for (std::size_t i = 0; i < rr.rank; ++i)
      for (std::size_t j = 0; j < columns.rows(); ++j) b(j, i) = rr.r(i, j);
    s.basis_ = std::move(b);
    return s;
  }

  static Subspace span_vectors(std::size_t ambient,
                               const std::vector<std::vector<Rational>>& vecs) {
    return span_columns(MatQ::from_columns(ambient, vecs));
  }

  static Subspace full(std::size_t ambient) {
    return span_columns(MatQ::identity(ambient));
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.cols(); }
  const MatQ& basis() const { return basis_; }
  std::vector<Rational> basis_vector(std::size_t j) const { return basis_.col(j); }

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  bool contains(const std::vector<Rational>& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("Subspace: ambient mismatch");
    std::vector<Rational> x;
    return solve(basis_, v, x);
  }

  bool contains(const Subspace& o) const {
    check_same_ambient(o);
    for (std::size_t j = 0; j < o.dim(); ++j)
      if (!contains(o.basis_vector(j))) return false;
    return true;
  }

  Subspace sum(const Subspace& o) const {
    check_same_ambient(o);
    MatQ cols(ambient_, dim() + o.dim());
    for (std::size_t j = 0; j < dim(); ++j) cols.set_col(j, basis_vector(j));
    for (std::size_t j = 0; j < o.dim(); ++j)
      cols.set_col(dim() + j, o.basis_vector(j));
    return span_columns(cols);
  }

  Subspace intersection(const Subspace& o) const {
    check_same_ambient(o);
    // v = A x = B y  <=>  [A | -B] (x,y)^T = 0.
    MatQ sys(ambient_, dim() + o.dim());
    for (std::size_t i = 0; i < ambient_; ++i) {
      for (std::size_t j = 0; j < dim(); ++j) sys(i, j) = basis_(i, j);
      for (std::size_t j = 0; j < o.dim(); ++j) sys(i, dim() + j) = -o.basis_(i, j);
    }
    const MatQ k = kernel(sys);
    MatQ cols(ambient_, k.cols());
    for (std::size_t c = 0; c < k.cols(); ++c) {
      std::vector<Rational> v(ambient_);
      for (std::size_t i = 0; i < ambient_; ++i)
        for (std::size_t j = 0; j < dim(); ++j)
          if (!basis_(i, j).is_zero() && !k(j, c).is_zero())
            v[i] += basis_(i, j) * k(j, c);
      cols.set_col(c, v);
    }
    return span_columns(cols);
  }

  /// Skew complement {v : form(v, w) = 0 for all w in this subspace}.
  /// The form must be skew-symmetric; it may be degenerate.
  Subspace skew_complement(const MatQ& form) const {
    if (form.rows() != ambient_ || form.cols() != ambient_)
      throw std::invalid_argument("skew_complement: form shape mismatch");
    for (std::size_t i = 0; i < ambient_; ++i)
      for (std::size_t j = 0; j <= i; ++j)
        if (form(i, j) != -form(j, i))
          throw std::invalid_argument("skew_complement: form not skew-symmetric");
    return skew_complement_unchecked(form);
  }

  Subspace skew_complement_unchecked(const MatQ& form) const {
    const MatQ constraints = (form * basis_).transpose();
    return span_columns(kernel(constraints));
  }

 private:
  void check_same_ambient(const Subspace& o) const {
    if (ambient_ != o.ambient_)
      throw std::invalid_argument("Subspace: ambient dimension mismatch");
  }

  std::size_t ambient_;
  MatQ basis_;  // ambient x dim, canonical
};

}  // namespace tanaka
