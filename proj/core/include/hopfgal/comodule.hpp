#pragma once

#include "hopfgal/hopf.hpp"

namespace hopfgal {

// ---------------------------------------------------------------------------
// Comodules of the corings underlying the two bialgebroid chiralities.
//
// A comodule is a right base-module together with a coaction into the
// balanced product carrier ⊗_base H.  The chiralities differ in how the base
// acts on the H factor:
//   · over a right bialgebroid: balancing (m·r)⊗h − m⊗(h t(r)), right action
//     on the product (m⊗h)·r = m⊗(h s(r));
//   · over a left bialgebroid:  balancing (m·l)⊗h − m⊗(s(l)h), right action
//     on the product (m⊗h)·l = m⊗(t(l)h).
// Coaction matrices are ambient-valued (dim·H × dim) with canonical-
// representative columns, mirroring the coring coproduct convention.
//
// Every comodule carries a derived left base-action: the unique one that
// makes the carrier a base-bimodule with coaction landing in the comodule
// Takeuchi subspace.  It is computed from the coaction through the counit
// and stored eagerly; validation re-derives it both ways and checks the
// bimodule axioms, so corrupted inputs surface as failing report items.
// ---------------------------------------------------------------------------

struct RightBgdComodule {
  RightBialgebroid bgd;
  std::size_t dim = 0;
  std::vector<Matrix> right_act;  // right base-action on the carrier
  Matrix coaction;                // dim·H × dim, canonical ambient columns
  QuotientSpace product;          // carrier ⊗_base H
  std::vector<Matrix> induced_left;

  Matrix coaction_q() const { return product.proj() * coaction; }
};

struct LeftBgdComodule {
  LeftBialgebroid bgd;
  std::size_t dim = 0;
  std::vector<Matrix> right_act;
  Matrix coaction;
  QuotientSpace product;
  std::vector<Matrix> induced_left;

  Matrix coaction_q() const { return product.proj() * coaction; }
};

RightBgdComodule make_right_bgd_comodule(RightBialgebroid bgd, std::size_t dim,
                                         std::vector<Matrix> right_act,
                                         const Matrix& coaction_ambient);
LeftBgdComodule make_left_bgd_comodule(LeftBialgebroid bgd, std::size_t dim,
                                       std::vector<Matrix> right_act,
                                       const Matrix& coaction_ambient);

// Module axioms, coaction canonicity, base linearity (with explicit
// well-definedness of every composite), coassociativity, counitality, the
// induced left action (both defining formulas agree; bimodule axioms; the
// coaction is bilinear for it) and membership of the coaction image in the
// Takeuchi subspace.
Report validate_right_bgd_comodule(const RightBgdComodule& m,
                                   const std::string& subject = "comodule");
Report validate_left_bgd_comodule(const LeftBgdComodule& m,
                                  const std::string& subject = "comodule");

// The unique left base-action described above; throws Error when the two
// defining formulas disagree or the result fails the bimodule axioms
// (signalling an invalid comodule).
std::vector<Matrix> induced_left_action(const RightBgdComodule& m);
std::vector<Matrix> induced_left_action(const LeftBgdComodule& m);

// {Σ mᵢ⊗hᵢ : Σ (r·mᵢ)⊗hᵢ = Σ mᵢ⊗t(r)hᵢ ∀r} over a right bialgebroid,
// {Σ mᵢ⊗hᵢ : Σ (l·mᵢ)⊗hᵢ = Σ mᵢ⊗hᵢ s(l) ∀l} over a left one, in product
// coordinates, where the left actions are the induced ones.
Subspace comodule_takeuchi(const RightBgdComodule& m);
Subspace comodule_takeuchi(const LeftBgdComodule& m);

// {m : ϱ(m) = m⊗1_H}, echelonized basis in carrier coordinates.
Subspace coinvariants(const RightBgdComodule& m);
Subspace coinvariants(const LeftBgdComodule& m);

// H as a comodule over itself via the coproduct.
RightBgdComodule regular_comodule(const RightBialgebroid& b);
LeftBgdComodule regular_comodule(const LeftBialgebroid& b);

// ---------------------------------------------------------------------------
// Comodules of a full Hopf structure: one carrier, both coactions.
// ---------------------------------------------------------------------------

struct HopfComodule {
  HopfAlgebroid base;
  RightBgdComodule com_r;  // coaction over base.right
  LeftBgdComodule com_l;   // coaction over base.left, same carrier

  std::size_t dim() const { return com_r.dim; }
};

HopfComodule make_hopf_comodule(HopfAlgebroid base, std::size_t dim,
                                std::vector<Matrix> act_r, std::vector<Matrix> act_l,
                                const Matrix& rho_r_ambient,
                                const Matrix& rho_l_ambient);

// Both constituent comodules, commuting base actions, mutual colinearity of
// the two coactions (each coaction is a comodule map for the other
// bialgebroid), and the mixed base linearities that follow from it.
Report validate_hopf_comodule(const HopfComodule& m,
                              const std::string& subject = "hopf comodule");

HopfComodule regular_comodule(const HopfAlgebroid& h);

// The base algebra R as a comodule with both coactions r ↦ 1_R⊗s_R(r); the
// right L-action goes through the base anti-isomorphism π_R∘t_L.
HopfComodule base_comodule(const HopfAlgebroid& h);

// Monoidal product: carrier M ⊗_R N (right action of M balanced against the
// induced left action of N), with right base actions (m⊗n)·r = m⊗(n·r) and
// (m⊗n)·l = (m·l)⊗n and the diagonal coactions
// (m⊗n) ↦ (m⁰⊗n⁰)⊗m¹n¹ on both sides.  Throws Error if a diagonal coaction
// or an action fails to descend to the quotient carrier (never for valid
// inputs).
HopfComodule tensor_comodules(const HopfComodule& m, const HopfComodule& n);

// Comparison map M⊗_R H → M⊗_L H, m⊗h ↦ ϱ_L(m)·S(h) with the right
// H-action on the second factor, in quotient coordinates; throws Error if it
// is not well defined.  The inverse m⊗h ↦ S⁻¹(h)·ϱ_R(m) needs an invertible
// antipode.
Matrix comparison_map(const HopfComodule& m);
Matrix comparison_map_inverse(const HopfComodule& m);

// Inclusion of right-sided coinvariants in left-sided ones (always), the two
// defining identities of the comparison map, and — when the antipode is
// invertible — equality of the coinvariant spaces and mutual inversion of
// the comparison maps.
Report check_coinvariant_inclusion(const HopfComodule& m,
                                   const std::string& subject = "coinvariants");

// ---------------------------------------------------------------------------
// Left comodules: left base actions, coactions into H ⊗_base carrier.  They
// are validated through the identification with right comodules over the
// co-opposite bialgebroids (tensor factors flipped), so all axioms reduce to
// the right-sided ones above.
// ---------------------------------------------------------------------------

struct LeftHopfComodule {
  HopfAlgebroid base;
  std::size_t dim = 0;
  std::vector<Matrix> left_act_r, left_act_l;  // r·m and l·m
  Matrix delta_r;  // H·dim × dim, canonical in H⊗_R M ((h s_R(r))⊗m − h⊗r·m)
  Matrix delta_l;  // canonical in H⊗_L M ((t_L(l)h)⊗m − h⊗l·m)
  QuotientSpace prod_r, prod_l;
};

LeftHopfComodule make_left_hopf_comodule(HopfAlgebroid base, std::size_t dim,
                                         std::vector<Matrix> left_act_r,
                                         std::vector<Matrix> left_act_l,
                                         const Matrix& delta_r_ambient,
                                         const Matrix& delta_l_ambient);

// Right-comodule views over the co-opposite bialgebroids.
RightBgdComodule cop_right_view(const LeftHopfComodule& m);
LeftBgdComodule cop_left_view(const LeftHopfComodule& m);

Report validate_left_hopf_comodule(const LeftHopfComodule& m,
                                   const std::string& subject = "left hopf comodule");

// H as a left comodule over itself via both coproducts.
LeftHopfComodule left_regular_comodule(const HopfAlgebroid& h);

// The right comodule induced by the antipode: right actions
// m·r = π_L(t_R(r))·m and m·l = π_R(t_L(l))·m, coactions m ↦ m₍₀₎⊗S(m₍₋₁₎)
// and m ↦ m⁽⁰⁾⊗S(m⁽⁻¹⁾).  The mirror construction sends right comodules
// back to left ones; the two compose to the identity whenever S² = id.
HopfComodule antipode_flip_comodule(const LeftHopfComodule& m);
LeftHopfComodule antipode_flip_comodule(const HopfComodule& m);

// ---------------------------------------------------------------------------
// Comodule algebras: a Hopf comodule whose carrier is an algebra with unit
// and multiplication colinear for both coactions.  The right R-action is
// right multiplication by the image of the base embedding η_R; the right
// L-action is explicit extra data.
// ---------------------------------------------------------------------------

struct ComoduleAlgebra {
  Algebra alg;    // carrier algebra A
  Matrix eta_r;   // algebra map base_R → A
  HopfComodule com;
  Subspace coinv;                    // B = right-sided coinvariants of A
  std::optional<Algebra> coinv_alg;  // B with the inherited product, when closed
  Matrix coinv_embed;                // A.dim × B.dim, echelon basis columns

  const Field& field() const { return alg.field; }
};

ComoduleAlgebra make_comodule_algebra(HopfAlgebroid base, Algebra alg, Matrix eta_r,
                                      std::vector<Matrix> act_l,
                                      const Matrix& rho_r_ambient,
                                      const Matrix& rho_l_ambient);

// Algebra axioms, η_R an algebra map, the full Hopf-comodule validation,
// unit and multiplication colinearity for both coactions, closure of the
// coinvariants under the product, commutation of coinvariants with the image
// of η_R, and containment of the coinvariants in the left-sided ones.
Report validate_comodule_algebra(const ComoduleAlgebra& a,
                                 const std::string& subject = "comodule algebra");

// A = H with both coproducts as coactions, η_R = s_R, a·l = t_L(l)a.
ComoduleAlgebra regular_comodule_algebra(const HopfAlgebroid& h);

}  // namespace hopfgal
