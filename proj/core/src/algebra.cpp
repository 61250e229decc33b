#include "hopfgal/algebra.hpp"

#include <sstream>

#include "hopfgal/errors.hpp"

namespace hopfgal {

Matrix Algebra::left_mult(const Vec& x) const {
  return Matrix::from_columns(field, dim, dim,
                              [&](std::size_t j) { return mul(x, basis(j)); });
}

Matrix Algebra::right_mult(const Vec& y) const {
  return Matrix::from_columns(field, dim, dim,
                              [&](std::size_t j) { return mul(basis(j), y); });
}

std::string Algebra::show(const Vec& v) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < dim; ++i) {
    if (field.is_zero(v[i])) continue;
    if (!first) os << " + ";
    os << field.to_string(v[i]) << "*" << labels[i];
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

bool Algebra::is_commutative() const {
  Matrix swap = tensor_permutation(field, {dim, dim}, {1, 0});
  return mult == mult * swap;
}

Subspace Algebra::center() const {
  return commutant(Subspace::full(field, dim));
}

Subspace Algebra::commutant(const Subspace& s) const {
  // x is in the commutant iff (L_s − R_s)x = 0 for s running over a basis.
  Matrix stacked(field, 0, dim);
  bool started = false;
  for (std::size_t k = 0; k < s.dim(); ++k) {
    Vec sk = s.basis_vector(k);
    Matrix diff = left_mult(sk) - right_mult(sk);
    stacked = started ? Matrix::vstack(stacked, diff) : diff;
    started = true;
  }
  if (!started) return Subspace::full(field, dim);
  return Subspace::span(field, dim, kernel_basis(stacked));
}

Subspace Algebra::commutator_subspace() const {
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j)
      gens.push_back(vec_sub(field, mul(basis(i), basis(j)), mul(basis(j), basis(i))));
  return Subspace::span(field, dim, gens);
}

Vec Algebra::power(const Vec& x, unsigned n) const {
  Vec acc = unit;
  for (unsigned k = 0; k < n; ++k) acc = mul(acc, x);
  return acc;
}

std::optional<Vec> Algebra::inverse_of(const Vec& x) const {
  auto y = solve_linear(left_mult(x), unit);
  if (!y) return std::nullopt;
  if (mul(*y, x) != unit) return std::nullopt;
  return y;
}

Report validate_algebra(const Algebra& a, const std::string& subject) {
  Report r;
  r.subject = subject;
  const Field& f = a.field;
  std::size_t d = a.dim;

  // Unit laws on basis vectors.
  {
    bool ok = true;
    std::string witness;
    for (std::size_t i = 0; i < d && ok; ++i) {
      if (a.mul(a.unit, a.basis(i)) != a.basis(i)) {
        ok = false;
        witness = "1*" + a.labels[i];
      }
    }
    r.add("unit.left", ok, witness);
  }
  {
    bool ok = true;
    std::string witness;
    for (std::size_t i = 0; i < d && ok; ++i) {
      if (a.mul(a.basis(i), a.unit) != a.basis(i)) {
        ok = false;
        witness = a.labels[i] + "*1";
      }
    }
    r.add("unit.right", ok, witness);
  }
  // Associativity on basis triples.
  {
    bool ok = true;
    std::string witness;
    for (std::size_t i = 0; i < d && ok; ++i)
      for (std::size_t j = 0; j < d && ok; ++j)
        for (std::size_t k = 0; k < d && ok; ++k) {
          Vec lhs = a.mul(a.mul(a.basis(i), a.basis(j)), a.basis(k));
          Vec rhs = a.mul(a.basis(i), a.mul(a.basis(j), a.basis(k)));
          if (lhs != rhs) {
            ok = false;
            witness = "(" + a.labels[i] + "*" + a.labels[j] + ")*" + a.labels[k] +
                      " = " + a.show(lhs) + "  vs  " + a.show(rhs);
          }
        }
    r.add("associativity", ok, witness);
  }
  return r;
}

Report validate_algebra_map(const Algebra& dom, const Algebra& cod, const Matrix& m,
                            const std::string& subject) {
  Report r;
  r.subject = subject;
  if (m.rows() != cod.dim || m.cols() != dom.dim)
    throw DimensionError("algebra map has wrong shape");
  r.add("unital", m.apply(dom.unit) == cod.unit);
  // m∘mult_dom = mult_cod∘(m⊗m) as matrices dom.dim² → cod.dim.
  Matrix lhs = m * dom.mult;
  Matrix rhs = cod.mult * Matrix::kron(m, m);
  bool ok = lhs == rhs;
  std::string witness;
  if (!ok) {
    for (std::size_t i = 0; i < dom.dim && witness.empty(); ++i)
      for (std::size_t j = 0; j < dom.dim && witness.empty(); ++j)
        if (lhs.col(i * dom.dim + j) != rhs.col(i * dom.dim + j))
          witness = "on " + dom.labels[i] + "*" + dom.labels[j];
  }
  r.add("multiplicative", ok, witness);
  return r;
}

Report validate_algebra_iso(const Algebra& dom, const Algebra& cod, const Matrix& m,
                            const std::string& subject) {
  Report r = validate_algebra_map(dom, cod, m, subject);
  r.add("bijective", dom.dim == cod.dim && rank(m) == dom.dim);
  return r;
}

Algebra opposite(const Algebra& a) {
  Algebra op(a.field, a.dim);
  op.labels = a.labels;
  op.unit = a.unit;
  Matrix swap = tensor_permutation(a.field, {a.dim, a.dim}, {1, 0});
  op.mult = a.mult * swap;
  return op;
}

Algebra tensor_algebra(const Algebra& a, const Algebra& b) {
  const Field& f = a.field;
  if (!(f == b.field)) throw FieldMismatch("tensor_algebra over different fields");
  Algebra t(f, a.dim * b.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < b.dim; ++j)
      t.labels[i * b.dim + j] = a.labels[i] + "(x)" + b.labels[j];
  t.unit = vec_kron(f, a.unit, b.unit);
  // (a⊗b)(a'⊗b') = aa'⊗bb': reorder (A,B,A,B) → (A,A,B,B), then multiply.
  Matrix perm =
      tensor_permutation(f, {a.dim, b.dim, a.dim, b.dim}, {0, 2, 1, 3});
  t.mult = Matrix::kron(a.mult, b.mult) * perm;
  return t;
}

bool is_unital_subalgebra(const Algebra& a, const Subspace& s) {
  if (!s.contains(a.unit)) return false;
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.dim(); ++j)
      if (!s.contains(a.mul(s.basis_vector(i), s.basis_vector(j)))) return false;
  return true;
}

Subspace generated_subalgebra(const Algebra& a, const std::vector<Vec>& gens) {
  std::vector<Vec> basis_vecs = gens;
  basis_vecs.push_back(a.unit);
  Subspace s = Subspace::span(a.field, a.dim, basis_vecs);
  for (;;) {
    std::vector<Vec> next;
    for (std::size_t i = 0; i < s.dim(); ++i)
      for (std::size_t j = 0; j < s.dim(); ++j)
        next.push_back(a.mul(s.basis_vector(i), s.basis_vector(j)));
    Subspace grown = s.sum(Subspace::span(a.field, a.dim, next));
    if (grown.dim() == s.dim()) return s;
    s = grown;
  }
}

}  // namespace hopfgal
