#pragma once

#include <optional>
#include <string>

#include "hopfgal/comodule.hpp"
#include "hopfgal/convolution.hpp"

namespace hopfgal {

// ---------------------------------------------------------------------------
// Cleft extensions.  A comodule algebra A with coinvariants B is cleft when
// A is a ring over the left base algebra with unit landing in B, and there
// is a convolution-invertible colinear "cleaving" map j from the total
// algebra to A.  Cleftness is equivalent to the extension being Galois with
// a normal basis: A ≅ B⊗_L H as left B-modules and right comodules.
// ---------------------------------------------------------------------------

struct CleftExtension {
  ComoduleAlgebra alg;
  Matrix eta_l;  // A.dim × L.dim: the L-ring unit of A, image inside B
  Matrix j;      // A.dim × H.dim: the cleaving map, a morphism R → L
  Matrix j_inv;  // A.dim × H.dim: its convolution inverse, a morphism L → R

  const Field& field() const { return alg.field(); }
  const HopfAlgebroid& hopf() const { return alg.com.base; }
};

// The convolution context with target A in which cleaving maps live.
ConvolutionContext cleft_context(const ComoduleAlgebra& a, const Matrix& eta_l);

// Shape-checks and bundles the pieces; verification is separate.
CleftExtension make_cleft_extension(ComoduleAlgebra alg, Matrix eta_l, Matrix j,
                                    Matrix j_inv);

// Solves for the convolution inverse of the candidate cleaving map; none
// when the map is not convolution invertible.
std::optional<CleftExtension> cleave(ComoduleAlgebra alg, Matrix eta_l, Matrix j);

// A = H over its own coinvariants, with the identity as cleaving map and
// the antipode as its inverse.
CleftExtension regular_cleft_extension(const HopfAlgebroid& h);

// Itemized verification: the unit of the L-ring structure is an algebra map
// into the coinvariants with image commuting with the other unit, the
// cleaving map is a hom-set member and colinear for both coactions, the
// convolution-inverse identities hold, and the derived consequences follow:
// the extra one-sided linearities of j and its inverse, the coinvariants
// commute with the right unit image, the twisted colinearity of the inverse
// under both coactions, the collapse a ↦ a⁰·j⁻¹(a¹) lands in B, and the
// induced splittings of A onto B fix B and are one-sided B-linear.  Set
// check_carrier to embed full comodule-algebra validation.
Report verify_cleft(const CleftExtension& c,
                    const std::string& subject = "cleft extension",
                    bool check_carrier = true);

// Replaces j by h ↦ j(h)·j⁻¹(1_H), which sends 1_H to 1_A; the inverse
// becomes h ↦ j(1_H)·j⁻¹(h).  Preserves cleftness.
CleftExtension normalize_cleaving_map(const CleftExtension& c);

// ---------------------------------------------------------------------------
// The Galois canonical map  A⊗_B A → A⊗_R H,  a⊗a' ↦ a·a'⁰ ⊗ a'¹.
// ---------------------------------------------------------------------------

struct CanonicalMap {
  QuotientSpace domain;  // A ⊗_B A
  Matrix map;            // coaction-product coordinates × domain coordinates
  bool bijective = false;
  std::optional<Matrix> inverse;
};

// Throws Error when the map fails to be balanced over the coinvariants
// (impossible for a valid comodule algebra).
CanonicalMap canonical_map(const ComoduleAlgebra& a);

// The translation map h ↦ can⁻¹(1_A ⊗ h) : H → A⊗_B A; requires a
// bijective canonical map.
Matrix translation_map(const ComoduleAlgebra& a, const CanonicalMap& can);

// ---------------------------------------------------------------------------
// Normal basis: the balanced product B⊗_L H and the mutually inverse maps
//   κ : A → B⊗_L H,  a ↦ a⁰·j⁻¹(a¹⟨1⟩) ⊗ a¹⟨2⟩,   ν : b⊗h ↦ b·j(h).
// ---------------------------------------------------------------------------

// B⊗_L H, where the base acts on B through right multiplication by the
// unit image and on H by left multiplication through the source map.
QuotientSpace coinvariant_base_product(const ComoduleAlgebra& a,
                                       const Matrix& eta_l);

struct NormalBasis {
  QuotientSpace product;  // B ⊗_L H
  HopfComodule comodule;  // comodule structure on it via the second factor
  Matrix kappa;           // A → product coordinates
  Matrix nu;              // product coordinates → A
  Report checks;
};

// Builds both maps and asserts: ν is well defined, κ and ν are mutually
// inverse, κ is left B-linear and colinear for both coactions.
NormalBasis normal_basis_maps(const CleftExtension& c);

// Rebuilds a cleft extension from a Galois extension with a normal basis:
// j := κ⁻¹(1_B ⊗ −) and its inverse composed from κ, the left counit and
// the translation map.  kappa is a matrix into the coordinates of
// coinvariant_base_product(a, eta_l).  Throws Error when the canonical map
// is not bijective or κ is not an isomorphism.
CleftExtension cleft_from_galois_nb(const ComoduleAlgebra& a, const Matrix& eta_l,
                                    const Matrix& kappa);

// The left-handed normal basis map into H⊗_L B,
//   a ↦ S⁻¹(a₁)⟨1⟩ ⊗ j(S⁻¹(a₁)⟨2⟩)·a₀,
// built from the other coaction; requires an invertible antipode.  Asserts
// that it is a right B-linear isomorphism, colinear for the two flipped
// coactions.
struct LeftNormalBasis {
  QuotientSpace product;  // H ⊗_L B
  Matrix kappa;           // A → product coordinates
  Report checks;
};

LeftNormalBasis left_handed_kappa(const CleftExtension& c);

// ---------------------------------------------------------------------------
// Co-opposite duality.  When the antipode is invertible, the opposite
// algebra A^op is a comodule algebra over the co-opposite structure, with
// coactions obtained by applying the inverse antipode to the second leg of
// the respective other coaction; the coinvariants are B again, and the
// inverse of a cleaving map cleaves the flipped extension.
// ---------------------------------------------------------------------------

ComoduleAlgebra cop_comodule_algebra(const ComoduleAlgebra& a);
CleftExtension cop_cleft_extension(const CleftExtension& c);

}  // namespace hopfgal
