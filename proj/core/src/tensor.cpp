#include "hopfgal/tensor.hpp"

#include "hopfgal/errors.hpp"

namespace hopfgal {

std::vector<Vec> balancing_generators(const Field& f,
                                      const std::vector<Matrix>& right_acts_on_left,
                                      const std::vector<Matrix>& left_acts_on_right) {
  if (right_acts_on_left.size() != left_acts_on_right.size())
    throw DimensionError("balancing: mismatched action family sizes");
  if (right_acts_on_left.empty()) return {};
  std::size_t nx = right_acts_on_left[0].rows();
  std::size_t ny = left_acts_on_right[0].rows();
  std::vector<Vec> gens;
  gens.reserve(right_acts_on_left.size() * nx * ny);
  for (std::size_t k = 0; k < right_acts_on_left.size(); ++k) {
    const Matrix& ra = right_acts_on_left[k];
    const Matrix& la = left_acts_on_right[k];
    if (ra.rows() != nx || ra.cols() != nx || la.rows() != ny || la.cols() != ny)
      throw DimensionError("balancing: action matrix has wrong shape");
    for (std::size_t i = 0; i < nx; ++i) {
      Vec xi_b = ra.col(i);  // (e_i)·b
      for (std::size_t j = 0; j < ny; ++j) {
        Vec b_yj = la.col(j);  // b·(e_j)
        Vec g = vec_sub(f, vec_kron(f, xi_b, vec_basis(ny, j)),
                        vec_kron(f, vec_basis(nx, i), b_yj));
        gens.push_back(std::move(g));
      }
    }
  }
  return gens;
}

QuotientSpace balanced_tensor(const Field& f,
                              const std::vector<Matrix>& right_acts_on_left,
                              const std::vector<Matrix>& left_acts_on_right) {
  if (right_acts_on_left.empty() || left_acts_on_right.empty())
    throw DimensionError("balanced_tensor: empty action family");
  std::size_t nx = right_acts_on_left[0].rows();
  std::size_t ny = left_acts_on_right[0].rows();
  return QuotientSpace::by_span(
      f, nx * ny, balancing_generators(f, right_acts_on_left, left_acts_on_right));
}

QuotientSpace multi_balanced_tensor(const Field& f,
                                    const std::vector<std::size_t>& dims,
                                    const std::vector<FactorBalance>& balances) {
  std::size_t total = 1;
  for (std::size_t d : dims) total *= d;
  std::vector<Vec> gens;
  for (const FactorBalance& b : balances) {
    if (b.pos + 1 >= dims.size())
      throw DimensionError("multi_balanced_tensor: balance position out of range");
    std::size_t before = 1, after = 1;
    for (std::size_t k = 0; k < b.pos; ++k) before *= dims[k];
    for (std::size_t k = b.pos + 2; k < dims.size(); ++k) after *= dims[k];
    std::vector<Vec> local = balancing_generators(f, b.right_acts, b.left_acts);
    for (const Vec& g : local) {
      for (std::size_t ib = 0; ib < before; ++ib) {
        Vec withp = vec_kron(f, vec_basis(before, ib), g);
        for (std::size_t ia = 0; ia < after; ++ia)
          gens.push_back(vec_kron(f, withp, vec_basis(after, ia)));
      }
    }
  }
  return QuotientSpace::by_span(f, total, gens);
}

Subspace agreement_subspace(const QuotientSpace& q, std::size_t dim_x,
                            std::size_t dim_y, const std::vector<Matrix>& acts_on_left,
                            const std::vector<Matrix>& acts_on_right) {
  if (acts_on_left.size() != acts_on_right.size())
    throw DimensionError("agreement_subspace: mismatched family sizes");
  const Field& f = q.field();
  Matrix stacked(f, 0, q.dim());
  bool started = false;
  Matrix ix = Matrix::identity(f, dim_x);
  Matrix iy = Matrix::identity(f, dim_y);
  for (std::size_t k = 0; k < acts_on_left.size(); ++k) {
    Matrix amb = Matrix::kron(acts_on_left[k], iy) - Matrix::kron(ix, acts_on_right[k]);
    auto descended = q.induce(q.proj() * amb);
    if (!descended)
      throw DimensionError("agreement_subspace: operator does not descend");
    stacked = started ? Matrix::vstack(stacked, *descended) : *descended;
    started = true;
  }
  if (!started) return Subspace::full(f, q.dim());
  return Subspace::span(f, q.dim(), kernel_basis(stacked));
}

std::vector<Vec> ambient_basis(const QuotientSpace& q, const Subspace& s) {
  std::vector<Vec> out;
  out.reserve(s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i)
    out.push_back(q.section().apply(s.basis_vector(i)));
  return out;
}

}  // namespace hopfgal
