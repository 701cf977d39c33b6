#pragma once

#include <optional>
#include <vector>

#include "varwit/matrix.hpp"

namespace varwit {

/// Subspace of F^n, stored as an RREF basis with zero rows removed. The RREF
/// basis is unique, so equality of subspaces is equality of bases.
class Subspace {
 public:
  static Subspace zero(const FieldSpec& f, std::size_t ambient) {
    return Subspace(ExactMatrix(f, 0, ambient));
  }

  static Subspace full(const FieldSpec& f, std::size_t ambient) {
    return Subspace(ExactMatrix::identity(f, ambient));
  }

  static Subspace span(const FieldSpec& f, const std::vector<Vector>& vectors,
                       std::size_t ambient) {
    return from_rows(ExactMatrix::from_rows(f, vectors, ambient));
  }

  /// Row space of an arbitrary matrix.
  static Subspace from_rows(const ExactMatrix& m) {
    auto [r, rk] = rref(m);
    ExactMatrix basis(m.field(), rk, m.cols());
    for (std::size_t i = 0; i < rk; ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) basis.at(i, j) = r.at(i, j);
    return Subspace(basis);
  }

  const FieldSpec& field() const { return basis_.field(); }
  std::size_t ambient() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const ExactMatrix& basis() const { return basis_; }

  Subspace sum(const Subspace& o) const {
    check(o);
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < dim(); ++i) rows.push_back(basis_.row(i));
    for (std::size_t i = 0; i < o.dim(); ++i) rows.push_back(o.basis_.row(i));
    return span(field(), rows, ambient());
  }

  /// Intersection via the kernel of the stacked basis transposes: a kernel
  /// vector (lambda, mu) with lambda*A = mu*B picks out a common element.
  Subspace intersect(const Subspace& o) const {
    check(o);
    if (dim() == 0 || o.dim() == 0) return zero(field(), ambient());
    ExactMatrix stacked(field(), ambient(), dim() + o.dim());
    for (std::size_t j = 0; j < dim(); ++j)
      for (std::size_t i = 0; i < ambient(); ++i)
        stacked.at(i, j) = basis_.at(j, i);
    for (std::size_t j = 0; j < o.dim(); ++j)
      for (std::size_t i = 0; i < ambient(); ++i)
        stacked.at(i, dim() + j) = -o.basis_.at(j, i);
    Subspace ker = kernel_of(stacked);
    std::vector<Vector> rows;
    for (std::size_t r = 0; r < ker.dim(); ++r) {
      Vector coeffs = ker.basis_.row(r);
      Vector v(ambient(), Scalar::zero(field()));
      for (std::size_t j = 0; j < dim(); ++j)
        for (std::size_t i = 0; i < ambient(); ++i)
          v[i] += coeffs[j] * basis_.at(j, i);
      rows.push_back(v);
    }
    return span(field(), rows, ambient());
  }

  bool contains(const Vector& v) const {
    if (v.size() != ambient())
      throw std::invalid_argument("Subspace: ambient mismatch");
    return coordinates(v).has_value();
  }

  bool leq(const Subspace& o) const {
    check(o);
    for (std::size_t i = 0; i < dim(); ++i)
      if (!o.contains(basis_.row(i))) return false;
    return true;
  }

  /// Coordinates of v in the RREF basis, or nullopt if v is outside.
  /// Pivot columns make this a read-off plus a verification pass.
  std::optional<Vector> coordinates(const Vector& v) const {
    if (v.size() != ambient())
      throw std::invalid_argument("Subspace: ambient mismatch");
    Vector coords;
    coords.reserve(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      std::size_t p = pivot_col(i);
      coords.push_back(v[p]);
    }
    Vector rec(ambient(), Scalar::zero(field()));
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < ambient(); ++j)
        rec[j] += coords[i] * basis_.at(i, j);
    if (rec != v) return std::nullopt;
    return coords;
  }

  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  /// {v : m v = 0}, as a subspace of F^cols.
  static Subspace kernel_of(const ExactMatrix& m) {
    auto [r, rk] = rref(m);
    std::vector<std::size_t> pivots;
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t i = 0, col = 0; i < rk; ++i) {
      while (col < m.cols() && r.at(i, col).is_zero()) ++col;
      pivots.push_back(col);
      is_pivot[col] = true;
    }
    std::vector<Vector> rows;
    for (std::size_t free = 0; free < m.cols(); ++free) {
      if (is_pivot[free]) continue;
      Vector v(m.cols(), Scalar::zero(m.field()));
      v[free] = Scalar::one(m.field());
      for (std::size_t i = 0; i < rk; ++i) v[pivots[i]] = -r.at(i, free);
      rows.push_back(v);
    }
    return span(m.field(), rows, m.cols());
  }

 private:
  explicit Subspace(ExactMatrix basis) : basis_(std::move(basis)) {}

  std::size_t pivot_col(std::size_t row) const {
    for (std::size_t j = 0; j < ambient(); ++j)
      if (!basis_.at(row, j).is_zero()) return j;
    throw std::logic_error("Subspace: zero row in basis");
  }

  void check(const Subspace& o) const {
    if (field() != o.field() || ambient() != o.ambient())
      throw std::invalid_argument("Subspace: ambient or field mismatch");
  }

  ExactMatrix basis_;
};

inline Subspace kernel(const ExactMatrix& m) { return Subspace::kernel_of(m); }

}  // namespace varwit
