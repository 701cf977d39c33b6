#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "varwit/field.hpp"

namespace varwit {

using Vector = std::vector<Scalar>;

/// Dense matrix of exact field elements, row-major.
class ExactMatrix {
 public:
  ExactMatrix(const FieldSpec& f, std::size_t rows, std::size_t cols)
      : field_(f), rows_(rows), cols_(cols),
        e_(rows * cols, Scalar::zero(f)) {}

  static ExactMatrix identity(const FieldSpec& f, std::size_t n) {
    ExactMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
  }

  static ExactMatrix from_rows(const FieldSpec& f,
                               const std::vector<Vector>& rows,
                               std::size_t cols) {
    ExactMatrix m(f, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols)
        throw std::invalid_argument("ExactMatrix: row length mismatch");
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const {
    return e_[i * cols_ + j];
  }

  Vector row(std::size_t i) const {
    return Vector(e_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  e_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  ExactMatrix operator+(const ExactMatrix& o) const {
    check_same_shape(o);
    ExactMatrix m(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] += o.e_[i];
    return m;
  }

  ExactMatrix operator-(const ExactMatrix& o) const {
    check_same_shape(o);
    ExactMatrix m(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] -= o.e_[i];
    return m;
  }

  ExactMatrix operator*(const ExactMatrix& o) const {
    if (field_ != o.field_)
      throw std::invalid_argument("ExactMatrix: field mismatch");
    if (cols_ != o.rows_)
      throw std::invalid_argument("ExactMatrix: shape mismatch in product");
    ExactMatrix m(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Scalar& a = at(i, k);
        if (a.is_zero()) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          m.at(i, j) += a * o.at(k, j);
      }
    return m;
  }

  ExactMatrix operator*(const Scalar& s) const {
    ExactMatrix m(*this);
    for (auto& x : m.e_) x *= s;
    return m;
  }

  Vector apply(const Vector& v) const {
    if (v.size() != cols_)
      throw std::invalid_argument("ExactMatrix: vector length mismatch");
    Vector r(rows_, Scalar::zero(field_));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
    return r;
  }

  ExactMatrix transpose() const {
    ExactMatrix m(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
  }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }

  bool operator==(const ExactMatrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ &&
           e_ == o.e_;
  }
  bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

  /// Row-major flattening, for treating matrices as coordinate vectors.
  Vector flatten() const { return e_; }

  static ExactMatrix unflatten(const FieldSpec& f, const Vector& v,
                               std::size_t rows, std::size_t cols) {
    if (v.size() != rows * cols)
      throw std::invalid_argument("ExactMatrix: unflatten size mismatch");
    ExactMatrix m(f, rows, cols);
    m.e_ = v;
    return m;
  }

 private:
  void check_same_shape(const ExactMatrix& o) const {
    if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("ExactMatrix: shape or field mismatch");
  }

  FieldSpec field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> e_;
};

inline ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b) {
  return a * b - b * a;
}

/// Reduced row echelon form. Pivot = first nonzero entry in column order.
inline std::pair<ExactMatrix, std::size_t> rref(const ExactMatrix& m) {
  ExactMatrix r(m);
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < r.cols() && pivot_row < r.rows(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < r.rows() && r.at(sel, col).is_zero()) ++sel;
    if (sel == r.rows()) continue;
    if (sel != pivot_row)
      for (std::size_t j = 0; j < r.cols(); ++j)
        std::swap(r.at(sel, j), r.at(pivot_row, j));
    Scalar inv = r.at(pivot_row, col).inverse();
    for (std::size_t j = col; j < r.cols(); ++j)
      r.at(pivot_row, j) *= inv;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == pivot_row || r.at(i, col).is_zero()) continue;
      Scalar factor = r.at(i, col);
      for (std::size_t j = col; j < r.cols(); ++j)
        r.at(i, j) -= factor * r.at(pivot_row, j);
    }
    ++pivot_row;
  }
  return {r, pivot_row};
}

inline std::size_t rank(const ExactMatrix& m) { return rref(m).second; }

}  // namespace varwit
