#pragma once

#include "hopfgal/bialgebroid.hpp"

namespace hopfgal {

// A full Hopf structure: a left and a right bialgebroid on the same total
// algebra, related by the base-map compatibilities and mutual colinearity of
// the two coproducts, together with an antipode.  The antipode inverse is
// computed eagerly when the antipode matrix is invertible, since several
// later constructions branch on its existence.
struct HopfAlgebroid {
  LeftBialgebroid left;
  RightBialgebroid right;
  Matrix antipode;
  std::optional<Matrix> antipode_inverse;
  // Mixed triple quotients used by the mutual-colinearity axioms and by
  // later modules: H⊗_L H⊗_R H and H⊗_R H⊗_L H.
  QuotientSpace mixed_lr, mixed_rl;

  const Algebra& total() const { return left.total; }
  Vec antipode_of(const Vec& h) const { return antipode.apply(h); }
};

HopfAlgebroid make_hopf_algebroid(LeftBialgebroid left, RightBialgebroid right,
                                  Matrix antipode);

// Itemized verification: shared total algebra, the four source/target
// compatibilities, mutual colinearity of the coproducts (with explicit
// well-definedness of each composite), antipode bilinearity and both
// antipode identities; then the derived facts: the second bilinearity
// identity, anti-multiplicativity, anti-comultiplicativity in both tensor
// squares, and the mutually inverse base isomorphisms between L^op and R.
// Set check_bialgebroids to also embed full validation of both halves.
Report validate_hopf_algebroid(const HopfAlgebroid& h,
                               const std::string& subject = "hopf structure",
                               bool check_bialgebroids = true);

// Solves for an antipode from the bilinearity and antipode identities as a
// linear system.  Returns the unique solution when one exists and it passes
// full validation; none when the system is inconsistent.  A consistent
// system with more than one solution contradicts uniqueness of convolution
// inverses and raises an Error.
std::optional<Matrix> solve_antipode(const LeftBialgebroid& left,
                                     const RightBialgebroid& right);

// The structure with opposite total algebra and flipped coproducts always
// exists; the co-opposite and opposite variants need an invertible antipode.
struct DerivedHopfStructures {
  HopfAlgebroid op_cop;
  std::optional<HopfAlgebroid> cop;
  std::optional<HopfAlgebroid> op;
};

DerivedHopfStructures derived_structures(const HopfAlgebroid& h);

}  // namespace hopfgal
