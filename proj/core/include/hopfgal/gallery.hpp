#pragma once

#include "hopfgal/crossed.hpp"
#include "hopfgal/hopf.hpp"

namespace hopfgal {

// Built-in example structures.  Every builder returns fully populated data;
// the unit tests re-validate each one, and the command-line driver exposes
// them for suite runs.

// G1: the group algebra k[C_n] of a cyclic group, as a Hopf structure over
// the trivial base: γ(gⁱ) = gⁱ⊗gⁱ, π(gⁱ) = 1, S(gⁱ) = g⁻ⁱ.
HopfAlgebroid gallery_cyclic_hopf(const Field& f, std::size_t n);

// G2: the enveloping algebra L⊗L^op of L = k[x]/(x²), with s(l) = l⊗1,
// t(l) = 1⊗l, γ(l⊗l') = (l⊗1)⊗(1⊗l'), counits by multiplication, and the
// flip antipode l⊗l' ↦ l'⊗l.
HopfAlgebroid gallery_enveloping_hopf(const Field& f);

// G4: the algebra of the pair groupoid on two objects: basis u_ij with
// u_ij·u_kl = δ_jk u_il, unit u_11+u_22, base = span{u_11,u_22} ≅ k×k on
// both sides, γ(u_jk) = u_jk⊗u_jk, π_L(u_jk) = p_j, π_R(u_jk) = p_k,
// S(u_jk) = u_kj.
HopfAlgebroid gallery_groupoid_hopf(const Field& f);

// G3: the sign measuring of k[x]/(x²) by k[C₂], with g·x = −x.  Its smash
// product k[x]/(x²) ⋊ k[C₂] is the four-dimensional crossed product along
// the trivial cocycle.
MeasuredRing gallery_sign_measuring(const Field& f);

// The group algebra k[C₂×C₂] of the Klein four-group over the trivial base,
// with γ(u) = u⊗u, π(u) = 1, S = id.  Basis order 1, g, h, gh.
HopfAlgebroid gallery_klein_hopf(const Field& f);

// G5: the bicharacter two-cocycle σ(gᵃhᵇ, gᶜhᵈ) = (−1)^{bc} on k[C₂×C₂]
// measuring the trivial ring k.  Its crossed product is the twisted group
// algebra with anticommuting generators e_g e_h = −e_h e_g.
CocycleData gallery_bicharacter_cocycle(const Field& f);

// A bialgebroid pair (over the trivial base) carrying no antipode: the
// linear span of {1, x} with x² = x, γ(x) = x⊗x, π(x) = 1.  The antipode
// equation would force x to be invertible.
std::pair<LeftBialgebroid, RightBialgebroid> gallery_idempotent_monoid_pair(
    const Field& f);

// The trivial one-dimensional base algebra (shared by the k-based examples).
Algebra gallery_trivial_base(const Field& f);

}  // namespace hopfgal
