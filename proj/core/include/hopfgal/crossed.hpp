#pragma once

// Crossed products B #_σ 𝓛 of a measured base ring with a left bialgebroid,
// twisted by a two-cocycle: measurings, cocycles and their inverses, the
// twisted product algebra on B⊗_L H, gauge transformations of the twisting
// data, and the round trips between crossed products and cleft extensions.

#include <optional>
#include <string>

#include "hopfgal/algebra.hpp"
#include "hopfgal/bialgebroid.hpp"
#include "hopfgal/cleft.hpp"
#include "hopfgal/comodule.hpp"
#include "hopfgal/hopf.hpp"
#include "hopfgal/linalg.hpp"
#include "hopfgal/matrix.hpp"
#include "hopfgal/report.hpp"

namespace hopfgal {

// ---------------------------------------------------------------------------
// Measurings:  H ⊗ B → B  compatible with the base ring of the bialgebroid.
// ---------------------------------------------------------------------------

// A candidate measuring of the L-ring (B, ι) by a left bialgebroid.  The
// action matrix encodes h⊗b ↦ h·b with columns flattened as i_h·B.dim + i_b.
struct MeasuredRing {
  LeftBialgebroid bgd;
  Algebra ring;   // B
  Matrix iota;    // ring.dim × base.dim, the ring unit ι : L → B
  Matrix action;  // ring.dim × (total.dim · ring.dim)

  const Field& field() const { return ring.field; }
};

// Shape-checks and bundles the pieces; verification is separate.
MeasuredRing make_measured_ring(LeftBialgebroid bgd, Algebra ring, Matrix iota,
                                Matrix action);

// ι is an algebra map, h·1_B = ι(π(h)), the actions of s(l) and t(l) land in
// left and right multiplication by ι(l), and h·(bb′) = (h₍₁₎·b)(h₍₂₎·b′).
Report validate_measuring(const MeasuredRing& m,
                          const std::string& subject = "measuring");

// A measuring that is also a genuine module: 1_H acts as the identity, the
// action is associative, and it extends the base action h·ι(l) = ι(π(h s(l)))
// — the hypotheses under which the trivial cocycle twists to a smash product.
Report validate_module_algebra(const MeasuredRing& m,
                               const std::string& subject = "module algebra");

// ---------------------------------------------------------------------------
// Two-cocycles  σ : H⊗H → B  over a measuring.
// ---------------------------------------------------------------------------

// Columns of sigma are flattened as i_h·total.dim + i_k.
struct CocycleData {
  MeasuredRing meas;
  Matrix sigma;  // ring.dim × total.dim²

  const Field& field() const { return meas.field(); }
};

CocycleData make_cocycle_data(MeasuredRing meas, Matrix sigma);

// σ(h,k) = ι(π(hk)), the trivial cocycle of a measuring.
Matrix trivial_cocycle(const MeasuredRing& m);

// Balance over the t-twisted tensor square, base linearity through s and t,
// the mixed law (h₍₁₎·ι(l))σ(h₍₂₎,k) = σ(h,s(l)k), normalization
// σ(1,h) = ι(π(h)) = σ(h,1), the cocycle identity, and counit absorption
// σ(h₍₁₎,k₍₁₎)ι(π(h₍₂₎k₍₂₎)) = σ(h,k).
Report validate_cocycle(const CocycleData& c,
                        const std::string& subject = "cocycle");

// The σ-twisted module laws: 1_H·b = b and
// [h₍₁₎·(k₍₁₎·b)]σ(h₍₂₎,k₍₂₎) = σ(h₍₁₎,k₍₁₎)(h₍₂₎k₍₂₎·b).
Report validate_twisted_module(const CocycleData& c,
                               const std::string& subject = "twisted module");

// ---------------------------------------------------------------------------
// Cocycle inverses  σ̃ : H⊗H → B, balanced over the s-twisted square.
// ---------------------------------------------------------------------------

// Solves the linear system for the convolution-style inverse of σ: balance,
// base linearity, the mixed law, and the two inversion identities
// σ(h₍₁₎,k₍₁₎)σ̃(h₍₂₎,k₍₂₎) = h·(k·1_B),  σ̃(h₍₁₎,k₍₁₎)σ(h₍₂₎,k₍₂₎) = hk·1_B.
// Unique when it exists.
std::optional<Matrix> solve_cocycle_inverse(const CocycleData& c);

// All defining laws of the inverse, its normalization σ̃(1,h) = ι(π(h)) =
// σ̃(h,1), counit absorption, the reconstruction
// σ̃(h,k) = σ̃(h₍₁₎,k₍₁₎)[h₍₂₎·(k₍₂₎·1_B)], and the two derived laws for how
// the action distributes over σ and over σ̃.
Report verify_cocycle_inverse(const CocycleData& c, const Matrix& sigma_inv,
                              const std::string& subject = "cocycle inverse");

// ---------------------------------------------------------------------------
// The crossed product algebra  B #_σ 𝓛  on  B⊗_L H.
// ---------------------------------------------------------------------------

// The balanced carrier B⊗_L H with relations (b·ι(l))⊗h − b⊗(s(l)h); the
// coordinates every crossed product over (bgd, ring, ι) is expressed in.
QuotientSpace crossed_carrier(const LeftBialgebroid& bgd, const Algebra& ring,
                              const Matrix& iota);

// Carrier B⊗_L H balanced by (b·ι(l))⊗h − b⊗s(l)h, with product
//   (b # h)(b′ # h′) = b (h₍₁₎·b′) σ(h₍₂₎, h′₍₁₎) # h₍₃₎ h′₍₂₎
// and unit 1_B # 1_H.
struct CrossedProduct {
  CocycleData data;
  QuotientSpace carrier;  // B⊗_L H
  Algebra algebra;        // the product in carrier coordinates
  Matrix embed_ring;      // algebra.dim × ring.dim:  b ↦ b # 1
  Matrix embed_total;     // algebra.dim × total.dim: h ↦ 1 # h
  Report structure;       // descent of the product and the algebra axioms

  const Field& field() const { return algebra.field; }
};

// Always builds the product map; `structure` records whether it descends to
// the balanced quotient and whether the result is associative and unital —
// which, for measured data, together characterize σ being a cocycle making
// B a σ-twisted module.
CrossedProduct build_crossed_product(const CocycleData& c);

// B ⋊ 𝓛: the crossed product along the trivial cocycle of a module algebra.
CrossedProduct smash_product(const MeasuredRing& m);

// ---------------------------------------------------------------------------
// Crossed products over Hopf algebroids and the cleft correspondence.
// ---------------------------------------------------------------------------

// The crossed product over the left bialgebroid of a Hopf algebroid carries
// the coactions B⊗γ for both coproducts and η_R(r) = 1 # s_R(r); the
// measuring of cp must live over h's left bialgebroid.
ComoduleAlgebra crossed_comodule_algebra(const HopfAlgebroid& h,
                                         const CrossedProduct& cp);

// The crossed product as a cleft extension: j(h) = 1 # h with convolution
// inverse j̄(h) = σ̃(S(h₍₁₎)₍₁₎, h₍₂₎) # S(h₍₁₎)₍₂₎.
CleftExtension cleft_from_crossed(const HopfAlgebroid& h,
                                  const CrossedProduct& cp,
                                  const Matrix& sigma_inv);

// Twisting data recovered from a cleft extension with normalized cleaving
// map, together with the rebuilt crossed product and the comparison map
// ν : B # H → A, b⊗h ↦ b·j(h).
struct ExtractedCrossed {
  CrossedProduct crossed;
  Matrix sigma_inv;  // ring.dim × total.dim²
  Matrix iso;        // A.dim × crossed.algebra.dim, the map ν
  Report checks;     // twisting-data laws and the isomorphism properties
};

// h·b = j(h⁽¹⁾) b j̄(h⁽²⁾),  σ(h,k) = j(h⁽¹⁾) j(k⁽¹⁾) j̄(h⁽²⁾k⁽²⁾),
// σ̃(h,k) = j(h⁽¹⁾k⁽¹⁾) j̄(k⁽²⁾) j̄(h⁽²⁾), all with the right-coring legs.
// Throws unless j(1_H) = 1_A; normalize the cleaving map first.
ExtractedCrossed crossed_from_cleft(const CleftExtension& c);

// Twisting data read off an algebra structure given directly in the
// coordinates of crossed_carrier(bgd, ring, ι):
//   h·b = (B⊗ι∘π)((1#h)(b#1)),   σ(h,k) = (B⊗ι∘π)((1#h)(1#k)).
struct CarrierExtraction {
  CocycleData data;
  CrossedProduct rebuilt;
  Report checks;  // hypotheses, twisting-data laws, and the round trip
};

// `checks` verifies the hypotheses — unit 1⊗1 and a left B-linear product —
// then the laws of the extracted data, and finally that rebuilding the
// crossed product from it reproduces the given multiplication exactly.
CarrierExtraction extract_measuring_cocycle(const LeftBialgebroid& bgd,
                                            const Algebra& ring,
                                            const Matrix& iota,
                                            const Algebra& carrier_algebra);

// ---------------------------------------------------------------------------
// Gauge transformations.
// ---------------------------------------------------------------------------

// Gauge maps are L-L bilinear χ : H → B, convolution invertible with
// χ(1_H) = 1_B.  Solves for χ̄ with χ(h₍₁₎)χ̄(h₍₂₎) = ι(π(h)) = χ̄(h₍₁₎)χ(h₍₂₎).
std::optional<Matrix> solve_gauge_inverse(const MeasuredRing& m,
                                          const Matrix& chi);

Report validate_gauge_map(const MeasuredRing& m, const Matrix& chi,
                          const Matrix& chi_inv,
                          const std::string& subject = "gauge map");

// The gauge-transformed twisting data
//   h ·^χ b   = χ(h₍₁₎) (h₍₂₎·b) χ̄(h₍₃₎),
//   σ^χ(h,k) = χ(h₍₁₎) (h₍₂₎·χ(k₍₁₎)) σ(h₍₃₎,k₍₂₎) χ̄(h₍₄₎k₍₃₎).
CocycleData gauge_transform(const CocycleData& c, const Matrix& chi,
                            const Matrix& chi_inv);

// Φ : B#_{σ^χ} → B#_σ, b⊗h ↦ b·χ(h₍₁₎) ⊗ h₍₂₎, in carrier coordinates of
// `transformed` and `target`.
Matrix gauge_equivalence_iso(const CrossedProduct& target,
                             const CrossedProduct& transformed,
                             const Matrix& chi);

// Equivalence of two crossed products of the same measured base: a bijective
// unital algebra map that is left B-linear, right base-linear, and colinear
// for the coactions B⊗γ.
Report verify_crossed_equivalence(const CrossedProduct& target,
                                  const CrossedProduct& other,
                                  const Matrix& iso,
                                  const std::string& subject = "crossed equivalence");

// The gauge map carried by an equivalence Φ: χ(h) = (B⊗ι∘π)(Φ(1 # h)).
Matrix gauge_from_equivalence(const CrossedProduct& target,
                              const CrossedProduct& other, const Matrix& iso);

// Searches for a gauge map χ exhibiting `other` as the gauge transform of
// `target`.  Every equivalence Φ has the shape b#h ↦ b·χ(h₍₁₎) # h₍₂₎ for an
// L-L bilinear normalized χ, and χ then satisfies the linear relations paired
// off the generator products (1#h)(b#1); candidates from that linear system
// are certified by rebuilding the twisting data and verifying Φ, so a
// returned χ is always correct.  Returns nothing when the system is
// unsolvable or no candidate certifies (over a prime field the solution
// space is enumerated exhaustively when small; over the rationals a bounded
// set of combinations is tried).  Throws when the two products do not share
// the same measured base ring and bialgebroid.
std::optional<Matrix> check_equivalence(const CrossedProduct& target,
                                        const CrossedProduct& other);

// ---------------------------------------------------------------------------
// Gauge action on cleaving maps.
// ---------------------------------------------------------------------------

// j′(h) = χ(h₍₁₎)·j(h₍₂₎) for χ : H → B given in coinvariant coordinates.
Matrix gauge_cleaving_map(const CleftExtension& c, const Matrix& chi);

// χ(h) = j′(h⁽¹⁾)·j̄(h⁽²⁾) in coinvariant coordinates, certified: returns χ
// only when every value is coinvariant, χ(h₍₁₎)·j(h₍₂₎) rebuilds j′, and χ
// is convolution invertible over the coinvariant algebra — which together
// hold exactly when j′ is again a cleaving map.  Returns nothing otherwise.
std::optional<Matrix> classify_cleaving_maps(const CleftExtension& c,
                                             const Matrix& j_prime);

}  // namespace hopfgal
