#include "hopfgal/linalg.hpp"

#include <algorithm>

#include "hopfgal/errors.hpp"

namespace hopfgal {

Echelon echelonize(const Matrix& m) {
  const Field& f = m.field();
  std::size_t rows = m.rows(), cols = m.cols();
  Matrix work = m;
  std::vector<std::size_t> pivots;
  std::size_t pr = 0;  // next pivot row
  for (std::size_t col = 0; col < cols && pr < rows; ++col) {
    // Deterministic pivot: first row at or below pr with a nonzero entry.
    std::size_t sel = rows;
    for (std::size_t i = pr; i < rows; ++i) {
      if (!f.is_zero(work.at(i, col))) {
        sel = i;
        break;
      }
    }
    if (sel == rows) continue;
    if (sel != pr) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(work.at(pr, j), work.at(sel, j));
    }
    Scalar inv_p = f.inv(work.at(pr, col));
    for (std::size_t j = col; j < cols; ++j)
      work.at(pr, j) = f.mul(work.at(pr, j), inv_p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == pr) continue;
      const Scalar c = work.at(i, col);
      if (f.is_zero(c)) continue;
      for (std::size_t j = col; j < cols; ++j)
        work.at(i, j) = f.sub(work.at(i, j), f.mul(c, work.at(pr, j)));
    }
    pivots.push_back(col);
    ++pr;
  }
  Matrix rref(f, pivots.size(), cols);
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) rref.at(i, j) = work.at(i, j);
  return Echelon{std::move(rref), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return echelonize(m).rank(); }

std::optional<Vec> solve_linear(const Matrix& A, const Vec& b) {
  if (b.size() != A.rows()) throw DimensionError("solve_linear rhs length mismatch");
  const Field& f = A.field();
  Matrix aug(f, A.rows(), A.cols() + 1);
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols()) = b[i];
  }
  Echelon e = echelonize(aug);
  Vec x(A.cols(), f.zero());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == A.cols()) return std::nullopt;  // pivot in rhs column
    x[e.pivots[i]] = e.rref.at(i, A.cols());
  }
  return x;
}

std::vector<Vec> kernel_basis(const Matrix& A) {
  const Field& f = A.field();
  Echelon e = echelonize(A);
  std::vector<bool> is_pivot(A.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t j = 0; j < A.cols(); ++j) {
    if (is_pivot[j]) continue;
    Vec v(A.cols(), f.zero());
    v[j] = f.one();
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      v[e.pivots[i]] = f.neg(e.rref.at(i, j));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Matrix> inverse(const Matrix& A) {
  if (A.rows() != A.cols()) throw DimensionError("inverse of non-square matrix");
  const Field& f = A.field();
  std::size_t n = A.rows();
  Matrix aug = Matrix::hstack(A, Matrix::identity(f, n));
  Echelon e = echelonize(aug);
  if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = e.rref.at(i, n + j);
  return inv;
}

Subspace Subspace::span(const Field& f, std::size_t ambient_dim,
                        const std::vector<Vec>& gens) {
  Matrix m = Matrix::from_row_vecs(f, ambient_dim, gens);
  Echelon e = echelonize(m);
  return Subspace(f, ambient_dim, std::move(e.rref));
}

Subspace Subspace::column_span(const Matrix& m) {
  std::vector<Vec> gens;
  gens.reserve(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) gens.push_back(m.col(j));
  return span(m.field(), m.rows(), gens);
}

Subspace Subspace::full(const Field& f, std::size_t ambient_dim) {
  return Subspace(f, ambient_dim, Matrix::identity(f, ambient_dim));
}

Subspace Subspace::zero(const Field& f, std::size_t ambient_dim) {
  return Subspace(f, ambient_dim, Matrix(f, 0, ambient_dim));
}

bool Subspace::contains(const Vec& v) const {
  return coordinates(v).has_value();
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (v.size() != ambient_) throw DimensionError("coordinates: wrong ambient dim");
  // Rows are in RREF, so the coordinate along row i is v[pivot_i].
  Vec coords(basis_.rows(), f_.zero());
  Vec residual = v;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    std::size_t p = 0;
    while (p < ambient_ && f_.is_zero(basis_.at(i, p))) ++p;
    coords[i] = residual[p];
    if (!f_.is_zero(coords[i])) {
      for (std::size_t j = 0; j < ambient_; ++j)
        residual[j] = f_.sub(residual[j], f_.mul(coords[i], basis_.at(i, j)));
    }
  }
  if (!vec_is_zero(residual)) return std::nullopt;
  return coords;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (ambient_ != other.ambient_ || !(f_ == other.f_))
    throw DimensionError("subspace sum ambient mismatch");
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < dim(); ++i) gens.push_back(basis_vector(i));
  for (std::size_t i = 0; i < other.dim(); ++i) gens.push_back(other.basis_vector(i));
  return span(f_, ambient_, gens);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (ambient_ != other.ambient_ || !(f_ == other.f_))
    throw DimensionError("subspace intersect ambient mismatch");
  // v ∈ U∩W  ⇔  v = Uᵀa = Wᵀb, i.e. (a,b) ∈ ker[Uᵀ | −Wᵀ].
  Matrix ut = basis_.transpose();
  Matrix wt = other.basis_.transpose().scaled(f_.neg(f_.one()));
  Matrix k = Matrix::hstack(ut, wt);
  std::vector<Vec> gens;
  for (const Vec& ab : kernel_basis(k)) {
    Vec a(ab.begin(), ab.begin() + static_cast<std::ptrdiff_t>(dim()));
    gens.push_back(ut.apply(a));
  }
  return span(f_, ambient_, gens);
}

bool Subspace::operator==(const Subspace& other) const {
  return f_ == other.f_ && ambient_ == other.ambient_ && basis_ == other.basis_;
}

QuotientSpace QuotientSpace::quotient_by(const Subspace& relations) {
  const Field& f = relations.field();
  std::size_t n = relations.ambient_dim();
  std::size_t r = relations.dim();
  const Matrix& R = relations.basis_rows();
  std::vector<std::size_t> piv;
  piv.reserve(r);
  for (std::size_t i = 0; i < r; ++i) {
    std::size_t p = 0;
    while (p < n && f.is_zero(R.at(i, p))) ++p;
    piv.push_back(p);
  }
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : piv) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  std::size_t q = free_cols.size();
  // proj(v)[j] = v[F_j] − Σ_i v[p_i]·R(i, F_j);  section(e_j) = e_{F_j}.
  Matrix proj(f, q, n);
  for (std::size_t j = 0; j < q; ++j) {
    proj.at(j, free_cols[j]) = f.one();
    for (std::size_t i = 0; i < r; ++i)
      proj.at(j, piv[i]) = f.sub(proj.at(j, piv[i]), R.at(i, free_cols[j]));
  }
  Matrix section(f, n, q);
  for (std::size_t j = 0; j < q; ++j) section.at(free_cols[j], j) = f.one();
  return QuotientSpace(f, n, relations, std::move(proj), std::move(section));
}

QuotientSpace QuotientSpace::by_span(const Field& f, std::size_t ambient_dim,
                                     const std::vector<Vec>& relation_gens) {
  return quotient_by(Subspace::span(f, ambient_dim, relation_gens));
}

bool QuotientSpace::is_canonical(const Vec& ambient_vec) const {
  if (ambient_vec.size() != ambient_)
    throw DimensionError("is_canonical: wrong ambient dim");
  Vec canon = section_.apply(proj_.apply(ambient_vec));
  return canon == ambient_vec;
}

std::optional<Matrix> QuotientSpace::induce(const Matrix& A) const {
  if (A.cols() != ambient_) throw DimensionError("induce: wrong domain dim");
  for (std::size_t i = 0; i < relations_.dim(); ++i) {
    Vec img = A.apply(relations_.basis_vector(i));
    if (!vec_is_zero(img)) return std::nullopt;
  }
  return A * section_;
}

Matrix tensor_permutation(const Field& f, const std::vector<std::size_t>& dims,
                          const std::vector<std::size_t>& perm) {
  if (dims.size() != perm.size())
    throw DimensionError("tensor_permutation dims/perm length mismatch");
  std::size_t n = dims.size();
  std::size_t total = 1;
  for (std::size_t d : dims) total *= d;
  Matrix m(f, total, total);
  std::vector<std::size_t> idx(n, 0);
  for (std::size_t flat_in = 0; flat_in < total; ++flat_in) {
    // Decode lexicographic multi-index of flat_in.
    std::size_t rem = flat_in;
    for (std::size_t k = n; k-- > 0;) {
      idx[k] = rem % dims[k];
      rem /= dims[k];
    }
    std::size_t flat_out = 0;
    for (std::size_t k = 0; k < n; ++k)
      flat_out = flat_out * dims[perm[k]] + idx[perm[k]];
    m.at(flat_out, flat_in) = f.one();
  }
  return m;
}

Matrix materialize(const Field& f, std::size_t out_dim, std::size_t in_dim,
                   const std::function<Vec(std::size_t)>& fn) {
  return Matrix::from_columns(f, out_dim, in_dim, fn);
}

}  // namespace hopfgal
