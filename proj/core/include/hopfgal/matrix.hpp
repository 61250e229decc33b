#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <vector>

#include "hopfgal/field.hpp"

namespace hopfgal {

// Dense matrix over an exact field.  Rows × cols, row-major.  A matrix with
// r rows and c cols represents a linear map from a c-dimensional space to an
// r-dimensional one (vectors are coordinate columns).
class Matrix {
 public:
  Matrix(const Field& f, std::size_t rows, std::size_t cols)
      : f_(f), rows_(rows), cols_(cols), a_(rows * cols, Scalar(0)) {}

  static Matrix identity(const Field& f, std::size_t n);
  // Build from explicit rows of long entries (test/gallery convenience).
  static Matrix from_rows(const Field& f,
                          std::initializer_list<std::initializer_list<long>> rows);
  // Column j of the result is fn(j); fn returns vectors of length out_dim.
  static Matrix from_columns(const Field& f, std::size_t out_dim, std::size_t in_dim,
                             const std::function<Vec(std::size_t)>& fn);
  static Matrix from_column_vecs(const Field& f, std::size_t out_dim,
                                 const std::vector<Vec>& cols);
  static Matrix from_row_vecs(const Field& f, std::size_t cols,
                              const std::vector<Vec>& rows);

  const Field& field() const { return f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Vec apply(const Vec& v) const;
  Matrix transpose() const;
  Matrix scaled(const Scalar& c) const;
  bool is_zero() const;

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  void set_row(std::size_t i, const Vec& v);
  void set_col(std::size_t j, const Vec& v);

  // Kronecker product: (A⊗B)(x⊗y) = (Ax)⊗(By), tensor indices lexicographic
  // in (left factor, right factor).
  static Matrix kron(const Matrix& A, const Matrix& B);
  static Matrix hstack(const Matrix& A, const Matrix& B);
  static Matrix vstack(const Matrix& A, const Matrix& B);

 private:
  Field f_;
  std::size_t rows_, cols_;
  std::vector<Scalar> a_;
};

// The matrix of a bilinear map V×W → U, built column-by-column over basis
// pairs: column (i·dimW + j) is fn(i, j).
Matrix from_bilinear(const Field& f, std::size_t out_dim, std::size_t dimV,
                     std::size_t dimW,
                     const std::function<Vec(std::size_t, std::size_t)>& fn);

}  // namespace hopfgal
