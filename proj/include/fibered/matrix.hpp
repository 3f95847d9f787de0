#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "fibered/errors.hpp"
#include "fibered/laurent.hpp"

namespace fibered {

/// Dense row-major matrix over a ring type T.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw DimensionMismatch("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  Matrix select_rows(const std::vector<std::size_t>& idx) const {
    Matrix m;
    m.rows_ = idx.size();
    m.cols_ = cols_;
    m.data_.reserve(m.rows_ * cols_);
    for (auto i : idx)
      for (std::size_t j = 0; j < cols_; ++j) m.data_.push_back((*this)(i, j));
    return m;
  }

  Matrix transpose() const {
    Matrix m;
    m.rows_ = cols_;
    m.cols_ = rows_;
    m.data_.reserve(data_.size());
    for (std::size_t j = 0; j < cols_; ++j)
      for (std::size_t i = 0; i < rows_; ++i) m.data_.push_back((*this)(i, j));
    return m;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using LaurentMatrix = Matrix<LaurentPoly>;

inline LaurentMatrix zero_matrix(std::size_t rows, std::size_t cols, std::size_t nvars) {
  return LaurentMatrix(rows, cols, LaurentPoly(nvars));
}

inline LaurentMatrix identity_matrix(std::size_t n, std::size_t nvars) {
  LaurentMatrix m = zero_matrix(n, n, nvars);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = LaurentPoly::one(nvars);
  return m;
}

/// Number of variables shared by all entries (0 for an empty matrix).
inline std::size_t matrix_nvars(const LaurentMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return m(0, 0).nvars();
}

inline LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape mismatch");
  std::size_t nv = a.rows() && a.cols() ? a(0, 0).nvars() : matrix_nvars(b);
  LaurentMatrix c = zero_matrix(a.rows(), b.cols(), nv);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const LaurentPoly& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
    }
  return c;
}

inline LaurentMatrix operator+(LaurentMatrix a, const LaurentMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix sum shape");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) += b(i, j);
  return a;
}

inline LaurentMatrix operator-(LaurentMatrix a, const LaurentMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix difference shape");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= b(i, j);
  return a;
}

inline LaurentMatrix scaled(LaurentMatrix a, const LaurentPoly& s) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = a(i, j) * s;
  return a;
}

}  // namespace fibered
