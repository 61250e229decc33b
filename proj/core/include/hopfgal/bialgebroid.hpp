#pragma once

#include "hopfgal/algebra.hpp"
#include "hopfgal/tensor.hpp"

namespace hopfgal {

// A base-bimodule structure on a coordinate space: one matrix per base basis
// vector for each side.  left_act[k] is the action of base basis vector k on
// the left, right_act[k] on the right.
struct Bimodule {
  Algebra base;
  std::size_t dim = 0;
  std::vector<Matrix> left_act, right_act;

  Bimodule(Algebra b, std::size_t d) : base(std::move(b)), dim(d) {}
  Matrix left_of(const Vec& b) const;
  Matrix right_of(const Vec& b) const;
};

// Unital commuting actions: left is a representation of base, right a
// representation of its opposite, and the two commute.
Report validate_bimodule(const Bimodule& m, const std::string& subject = "bimodule");

// A coring over the base: a coassociative counital comultiplication on a
// base-bimodule, taking values in the bimodule tensor square over the base.
// The coproduct matrix is ambient-valued (dim² × dim) with canonical-
// representative columns; counit maps to base coordinates.
struct Coring {
  Bimodule mod;
  Matrix coproduct;      // dim² × dim, canonical ambient representatives
  Matrix counit;         // base.dim × dim
  QuotientSpace square;  // carrier ⊗_base carrier
  QuotientSpace cube;    // carrier ⊗_base carrier ⊗_base carrier

  Matrix coproduct_q() const { return square.proj() * coproduct; }
};

// Builds the tensor square/cube quotients and canonicalizes the coproduct
// columns (which does not change their classes).
Coring make_coring(Bimodule mod, const Matrix& coproduct_ambient, Matrix counit);

// Checks bilinearity of coproduct and counit over the base, coassociativity
// in the flat triple quotient, and both counit laws through the canonical
// identifications base⊗carrier ≅ carrier ≅ carrier⊗base.
Report validate_coring(const Coring& c, const std::string& subject = "coring");

// Left bialgebroid: total algebra H over base L with source/target algebra
// maps s: L→H, t: L^op→H, a coring over L for the bimodule l·h·l' = s(l)t(l')h,
// plus the compatibility axioms between the algebra and coring structures.
struct LeftBialgebroid {
  Algebra total, base;
  Matrix src, tgt;  // total.dim × base.dim
  Coring coring;

  const QuotientSpace& square() const { return coring.square; }
  const QuotientSpace& cube() const { return coring.cube; }
  const Matrix& coproduct() const { return coring.coproduct; }
  const Matrix& counit() const { return coring.counit; }
  Vec src_of(const Vec& l) const { return src.apply(l); }
  Vec tgt_of(const Vec& l) const { return tgt.apply(l); }
  // {Σ hᵢ⊗h'ᵢ : Σ hᵢt(l)⊗h'ᵢ = Σ hᵢ⊗h'ᵢs(l) ∀l}, in square coordinates.
  Subspace takeuchi() const;
};

LeftBialgebroid make_left_bialgebroid(Algebra total, Algebra base, Matrix src,
                                      Matrix tgt, const Matrix& coproduct_ambient,
                                      Matrix counit);

Report validate_left_bialgebroid(const LeftBialgebroid& b,
                                 const std::string& subject = "left bialgebroid");

// Right bialgebroid: mirror structure with the bimodule r·h·r' = h t(r) s(r'),
// i.e. both actions by right multiplication.
struct RightBialgebroid {
  Algebra total, base;
  Matrix src, tgt;
  Coring coring;

  const QuotientSpace& square() const { return coring.square; }
  const QuotientSpace& cube() const { return coring.cube; }
  const Matrix& coproduct() const { return coring.coproduct; }
  const Matrix& counit() const { return coring.counit; }
  Vec src_of(const Vec& r) const { return src.apply(r); }
  Vec tgt_of(const Vec& r) const { return tgt.apply(r); }
  // {Σ hᵢ⊗h'ᵢ : Σ s(r)hᵢ⊗h'ᵢ = Σ hᵢ⊗t(r)h'ᵢ ∀r}, in square coordinates.
  Subspace takeuchi() const;
};

RightBialgebroid make_right_bialgebroid(Algebra total, Algebra base, Matrix src,
                                        Matrix tgt, const Matrix& coproduct_ambient,
                                        Matrix counit);

Report validate_right_bialgebroid(const RightBialgebroid& b,
                                  const std::string& subject = "right bialgebroid");

// Same total algebra, opposite base, swapped source/target, flipped coproduct.
LeftBialgebroid co_opposite(const LeftBialgebroid& b);
RightBialgebroid co_opposite(const RightBialgebroid& b);

// Opposite total algebra with source/target exchanged turns a left
// bialgebroid into a right one and vice versa; coproduct and counit carry
// over unchanged (the balanced tensor square has the same relations).
RightBialgebroid opposite_bgd(const LeftBialgebroid& b);
LeftBialgebroid opposite_bgd(const RightBialgebroid& b);

}  // namespace hopfgal
