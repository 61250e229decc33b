#include "hopfgal/matrix.hpp"

#include "hopfgal/errors.hpp"

namespace hopfgal {

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

Matrix Matrix::from_rows(const Field& f,
                         std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.begin()->size();
  Matrix m(f, r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionError("ragged rows in matrix literal");
    std::size_t j = 0;
    for (long v : row) m.at(i, j++) = f.from_long(v);
    ++i;
  }
  return m;
}

Matrix Matrix::from_columns(const Field& f, std::size_t out_dim, std::size_t in_dim,
                            const std::function<Vec(std::size_t)>& fn) {
  Matrix m(f, out_dim, in_dim);
  for (std::size_t j = 0; j < in_dim; ++j) {
    Vec v = fn(j);
    if (v.size() != out_dim) throw DimensionError("column generator has wrong length");
    for (std::size_t i = 0; i < out_dim; ++i) m.at(i, j) = v[i];
  }
  return m;
}

Matrix Matrix::from_column_vecs(const Field& f, std::size_t out_dim,
                                const std::vector<Vec>& cols) {
  Matrix m(f, out_dim, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != out_dim) throw DimensionError("column has wrong length");
    for (std::size_t i = 0; i < out_dim; ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

Matrix Matrix::from_row_vecs(const Field& f, std::size_t cols,
                             const std::vector<Vec>& rows) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionError("row has wrong length");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (!(f_ == o.f_)) throw FieldMismatch("matrix product over different fields");
  if (cols_ != o.rows_) throw DimensionError("matrix product dimension mismatch");
  Matrix m(f_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& aik = at(i, k);
      if (f_.is_zero(aik)) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& bkj = o.at(k, j);
        if (f_.is_zero(bkj)) continue;
        m.at(i, j) = f_.add(m.at(i, j), f_.mul(aik, bkj));
      }
    }
  }
  return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (!(f_ == o.f_)) throw FieldMismatch("matrix sum over different fields");
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionError("matrix sum dimension mismatch");
  Matrix m(f_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = f_.add(a_[i], o.a_[i]);
  return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (!(f_ == o.f_)) throw FieldMismatch("matrix difference over different fields");
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DimensionError("matrix difference dimension mismatch");
  Matrix m(f_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = f_.sub(a_[i], o.a_[i]);
  return m;
}

bool Matrix::operator==(const Matrix& o) const {
  if (!(f_ == o.f_) || rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (a_[i] != o.a_[i]) return false;
  return true;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw DimensionError("matrix apply dimension mismatch");
  Vec out(rows_, Scalar(0));
  for (std::size_t j = 0; j < cols_; ++j) {
    if (f_.is_zero(v[j])) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Scalar& aij = at(i, j);
      if (f_.is_zero(aij)) continue;
      out[i] = f_.add(out[i], f_.mul(aij, v[j]));
    }
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix m(f_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix m(f_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = f_.mul(a_[i], c);
  return m;
}

bool Matrix::is_zero() const {
  for (const Scalar& s : a_)
    if (!f_.is_zero(s)) return false;
  return true;
}

Vec Matrix::row(std::size_t i) const {
  Vec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

Vec Matrix::col(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

void Matrix::set_row(std::size_t i, const Vec& v) {
  if (v.size() != cols_) throw DimensionError("set_row length mismatch");
  for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
}

void Matrix::set_col(std::size_t j, const Vec& v) {
  if (v.size() != rows_) throw DimensionError("set_col length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

Matrix Matrix::kron(const Matrix& A, const Matrix& B) {
  if (!(A.f_ == B.f_)) throw FieldMismatch("kron over different fields");
  const Field& f = A.f_;
  Matrix m(f, A.rows_ * B.rows_, A.cols_ * B.cols_);
  for (std::size_t ia = 0; ia < A.rows_; ++ia)
    for (std::size_t ja = 0; ja < A.cols_; ++ja) {
      const Scalar& a = A.at(ia, ja);
      if (f.is_zero(a)) continue;
      for (std::size_t ib = 0; ib < B.rows_; ++ib)
        for (std::size_t jb = 0; jb < B.cols_; ++jb) {
          const Scalar& b = B.at(ib, jb);
          if (f.is_zero(b)) continue;
          m.at(ia * B.rows_ + ib, ja * B.cols_ + jb) = f.mul(a, b);
        }
    }
  return m;
}

Matrix Matrix::hstack(const Matrix& A, const Matrix& B) {
  if (!(A.f_ == B.f_)) throw FieldMismatch("hstack over different fields");
  if (A.rows_ != B.rows_) throw DimensionError("hstack row mismatch");
  Matrix m(A.f_, A.rows_, A.cols_ + B.cols_);
  for (std::size_t i = 0; i < A.rows_; ++i) {
    for (std::size_t j = 0; j < A.cols_; ++j) m.at(i, j) = A.at(i, j);
    for (std::size_t j = 0; j < B.cols_; ++j) m.at(i, A.cols_ + j) = B.at(i, j);
  }
  return m;
}

Matrix Matrix::vstack(const Matrix& A, const Matrix& B) {
  if (!(A.f_ == B.f_)) throw FieldMismatch("vstack over different fields");
  if (A.cols_ != B.cols_) throw DimensionError("vstack column mismatch");
  Matrix m(A.f_, A.rows_ + B.rows_, A.cols_);
  for (std::size_t j = 0; j < A.cols_; ++j) {
    for (std::size_t i = 0; i < A.rows_; ++i) m.at(i, j) = A.at(i, j);
    for (std::size_t i = 0; i < B.rows_; ++i) m.at(A.rows_ + i, j) = B.at(i, j);
  }
  return m;
}

Matrix from_bilinear(const Field& f, std::size_t out_dim, std::size_t dimV,
                     std::size_t dimW,
                     const std::function<Vec(std::size_t, std::size_t)>& fn) {
  Matrix m(f, out_dim, dimV * dimW);
  for (std::size_t i = 0; i < dimV; ++i)
    for (std::size_t j = 0; j < dimW; ++j) {
      Vec v = fn(i, j);
      if (v.size() != out_dim) throw DimensionError("bilinear generator wrong length");
      m.set_col(i * dimW + j, v);
    }
  return m;
}

}  // namespace hopfgal
