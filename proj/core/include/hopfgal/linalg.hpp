#pragma once

#include <optional>
#include <vector>

#include "hopfgal/matrix.hpp"

namespace hopfgal {

// Reduced row echelon form with deterministic leftmost-pivot selection
// (first nonzero entry scanning rows top-down).  Pivot columns are strictly
// increasing; pivot entries are 1 and are the only nonzero entries in their
// columns.
struct Echelon {
  Matrix rref;                      // rank × cols, zero rows dropped
  std::vector<std::size_t> pivots;  // pivot column of each row, ascending
  std::size_t rank() const { return pivots.size(); }
};

Echelon echelonize(const Matrix& m);

std::size_t rank(const Matrix& m);

// One solution of A x = b with all free variables set to zero, or nullopt if
// the system is inconsistent.
std::optional<Vec> solve_linear(const Matrix& A, const Vec& b);

// Basis of the null space of A, one vector per free column, ordered by
// ascending free-column index.  Each basis vector has entry 1 at its free
// column.
std::vector<Vec> kernel_basis(const Matrix& A);

// Inverse of a square matrix, or nullopt if singular.
std::optional<Matrix> inverse(const Matrix& A);

// A subspace of an ambient coordinate space, stored as an echelonized row
// basis (each row one basis vector).  Deterministic: equal subspaces have
// equal bases.
class Subspace {
 public:
  // Span of the given vectors inside a dim-dimensional ambient space.
  static Subspace span(const Field& f, std::size_t ambient_dim,
                       const std::vector<Vec>& gens);
  // Column span of a matrix.
  static Subspace column_span(const Matrix& m);
  static Subspace full(const Field& f, std::size_t ambient_dim);
  static Subspace zero(const Field& f, std::size_t ambient_dim);

  const Field& field() const { return f_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis_rows() const { return basis_; }
  Vec basis_vector(std::size_t i) const { return basis_.row(i); }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  // Coordinates of v in the stored basis, or nullopt if v is outside.
  std::optional<Vec> coordinates(const Vec& v) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  bool operator==(const Subspace& other) const;

 private:
  Subspace(const Field& f, std::size_t ambient, Matrix basis)
      : f_(f), ambient_(ambient), basis_(std::move(basis)) {}
  Field f_;
  std::size_t ambient_;
  Matrix basis_;  // dim × ambient, RREF rows
};

// Quotient V/U of a coordinate space V = k^ambient by a subspace U, with a
// chosen linear section.  proj: ambient → q, section: q → ambient satisfy
// proj∘section = id and ker(proj) = U.  The section embeds the quotient as
// the span of the non-pivot coordinates of U's echelon basis, so
// section∘proj is an idempotent projector onto that complement; vectors in
// its image are called canonical representatives.
class QuotientSpace {
 public:
  static QuotientSpace quotient_by(const Subspace& relations);
  // Convenience: quotient of k^ambient by the span of the given vectors.
  static QuotientSpace by_span(const Field& f, std::size_t ambient_dim,
                               const std::vector<Vec>& relation_gens);

  const Field& field() const { return f_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return dim_; }
  const Subspace& relations() const { return relations_; }
  const Matrix& proj() const { return proj_; }
  const Matrix& section() const { return section_; }
  // section∘proj: idempotent on ambient space fixing canonical reps.
  Matrix canonicalizer() const { return section_ * proj_; }
  bool is_canonical(const Vec& ambient_vec) const;

  // Given a map A: ambient → W that kills the relations, the induced map on
  // the quotient is A∘section.  Returns nullopt if A does not kill the
  // relations (i.e. the map is not well defined on the quotient).
  std::optional<Matrix> induce(const Matrix& A) const;

 private:
  QuotientSpace(const Field& f, std::size_t ambient, Subspace rel, Matrix proj,
                Matrix section)
      : f_(f),
        ambient_(ambient),
        dim_(proj.rows()),
        relations_(std::move(rel)),
        proj_(std::move(proj)),
        section_(std::move(section)) {}
  Field f_;
  std::size_t ambient_;
  std::size_t dim_;
  Subspace relations_;
  Matrix proj_;     // dim × ambient
  Matrix section_;  // ambient × dim
};

// Permutation of tensor factors.  dims[k] is the dimension of input factor k;
// output factor position k carries input factor perm[k].  Indices are
// lexicographic: a pure tensor e_{i_0}⊗…⊗e_{i_{n-1}} has flat index
// ((i_0·dims[1] + i_1)·dims[2] + i_2)…  The result maps the input tensor
// space to the permuted one.
Matrix tensor_permutation(const Field& f, const std::vector<std::size_t>& dims,
                          const std::vector<std::size_t>& perm);

// Build a matrix column by column from a function on basis indices; useful
// when the map is cheap per column but a dense composite would be huge.
Matrix materialize(const Field& f, std::size_t out_dim, std::size_t in_dim,
                   const std::function<Vec(std::size_t)>& fn);

}  // namespace hopfgal
