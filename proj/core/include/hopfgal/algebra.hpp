#pragma once

#include <string>
#include <vector>

#include "hopfgal/linalg.hpp"
#include "hopfgal/report.hpp"

namespace hopfgal {

// A finite-dimensional unital associative algebra given by structure
// constants.  `mult` is the dim × dim² matrix of the multiplication as a
// linear map A⊗A → A on lexicographic tensor coordinates, and `unit` is the
// coordinate vector of 1.  Nothing is assumed valid until validate() is run.
struct Algebra {
  Field field;
  std::size_t dim = 0;
  std::vector<std::string> labels;  // basis element names, size dim
  Vec unit;
  Matrix mult;  // dim × dim²

  Algebra(const Field& f, std::size_t d)
      : field(f), dim(d), unit(d, f.zero()), mult(f, d, d * d) {
    labels.resize(d);
    for (std::size_t i = 0; i < d; ++i) labels[i] = "e" + std::to_string(i);
  }

  Vec mul(const Vec& x, const Vec& y) const { return mult.apply(vec_kron(field, x, y)); }
  // Matrix of left multiplication by x: y ↦ x·y.
  Matrix left_mult(const Vec& x) const;
  // Matrix of right multiplication by y: x ↦ x·y.
  Matrix right_mult(const Vec& y) const;
  Vec basis(std::size_t i) const { return vec_basis(dim, i); }
  // Pretty-print a vector in the basis labels (for witnesses).
  std::string show(const Vec& v) const;

  bool is_commutative() const;
  // {x : xy = yx for all y} as a subspace of the underlying space.
  Subspace center() const;
  // {x : xs = sx for all s in the given subspace}.
  Subspace commutant(const Subspace& s) const;
  // Span of all commutators xy − yx.
  Subspace commutator_subspace() const;
  // Powers of an element; returns x^n with x^0 = 1.
  Vec power(const Vec& x, unsigned n) const;
  // Multiplicative inverse of x, if any (solves x·y = 1 and checks y·x = 1).
  std::optional<Vec> inverse_of(const Vec& x) const;
};

// Checks unit laws and associativity; names each failed identity and reports
// the first failing basis tuple as a witness.
Report validate_algebra(const Algebra& a, const std::string& subject = "algebra");

// A linear map between algebras, dom → cod, as a matrix on coordinates.
struct AlgebraMap {
  Matrix m;
  AlgebraMap(const Field& f, std::size_t dim_cod, std::size_t dim_dom)
      : m(f, dim_cod, dim_dom) {}
  explicit AlgebraMap(Matrix mat) : m(std::move(mat)) {}
};

// Does m send unit to unit and products to products?
Report validate_algebra_map(const Algebra& dom, const Algebra& cod, const Matrix& m,
                            const std::string& subject = "algebra map");

// Is m an isomorphism of algebras (multiplicative, unital, bijective)?
Report validate_algebra_iso(const Algebra& dom, const Algebra& cod, const Matrix& m,
                            const std::string& subject = "algebra isomorphism");

// The same space with reversed multiplication x·ᵒᵖy = yx.
Algebra opposite(const Algebra& a);

// Tensor product algebra with componentwise product; basis labels a⊗b.
Algebra tensor_algebra(const Algebra& a, const Algebra& b);

// Is the subspace closed under multiplication and does it contain the unit?
bool is_unital_subalgebra(const Algebra& a, const Subspace& s);

// The subalgebra generated by a set of elements (always contains the unit).
Subspace generated_subalgebra(const Algebra& a, const std::vector<Vec>& gens);

}  // namespace hopfgal
