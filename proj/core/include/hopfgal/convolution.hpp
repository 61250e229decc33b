#pragma once

#include <optional>
#include <string>

#include "hopfgal/hopf.hpp"

namespace hopfgal {

// ---------------------------------------------------------------------------
// The convolution category of a compatible left/right bialgebroid pair with
// values in a target algebra.
//
// The category has two objects, the base algebras L and R.  A morphism
// P → Q is a linear map H → A that intertwines the Q-actions on the left and
// the P-actions on the right, where H carries the four bimodule structures
// cut out by the source and target maps of the two bialgebroids, and A acts
// on itself through the two unit maps η_L : L → A and η_R : R → A.
// Composition sends f : P → Q and g : Q → S to  h ↦ g(h⟨1⟩)·f(h⟨2⟩), the
// coproduct ⟨1⟩⊗⟨2⟩ taken over Q.  The identity at P is η_P∘π_P.
// ---------------------------------------------------------------------------

enum class BaseSide { left, right };

const char* to_string(BaseSide s);

struct ConvolutionContext {
  LeftBialgebroid left;
  RightBialgebroid right;
  Algebra target;
  Matrix eta_l;  // target.dim × left.base.dim
  Matrix eta_r;  // target.dim × right.base.dim

  const Field& field() const { return target.field; }
  const Algebra& total() const { return left.total; }
  const Algebra& base(BaseSide s) const {
    return s == BaseSide::left ? left.base : right.base;
  }
  const Matrix& unit_map(BaseSide s) const {
    return s == BaseSide::left ? eta_l : eta_r;
  }
};

// Shape-checks the pieces and bundles them.  Throws DimensionError or
// FieldMismatch on malformed input.
ConvolutionContext make_convolution_context(LeftBialgebroid left,
                                            RightBialgebroid right, Algebra target,
                                            Matrix eta_l, Matrix eta_r);
ConvolutionContext make_convolution_context(const HopfAlgebroid& h, Algebra target,
                                            Matrix eta_l, Matrix eta_r);

// The total algebra as its own target, with η_L = s_L and η_R = s_R.  In
// this context the antipode is the convolution inverse of the identity map.
ConvolutionContext self_convolution_context(const HopfAlgebroid& h);

// Target algebra axioms, both unit maps multiplicative and unital, their
// images commuting elementwise, the two mixed product associativities on the
// balanced triple products of A (with explicit well-definedness), and the
// two mixed coproduct compatibilities on the balanced triple products of H.
Report validate_convolution_context(const ConvolutionContext& c,
                                    const std::string& subject = "convolution context");

struct ConvMorphism {
  BaseSide src = BaseSide::left;
  BaseSide dst = BaseSide::left;
  Matrix map;  // target.dim × H.dim
};

// Hom-set membership: the left base-linearity forced by dst and the right
// base-linearity forced by src.
Report validate_conv_morphism(const ConvolutionContext& c, const ConvMorphism& m,
                              const std::string& subject = "convolution morphism");

ConvMorphism identity_at(const ConvolutionContext& c, BaseSide object);

// Composition f : P → Q followed by g : Q → S.  Throws BindingError when
// f.dst ≠ g.src and DimensionError on shape mismatch.
ConvMorphism compose_conv(const ConvolutionContext& c, const ConvMorphism& f,
                          const ConvMorphism& g);

// The convolution inverse of f : P → Q, i.e. the morphism g : Q → P with
// compose(f, g) = identity at P and compose(g, f) = identity at Q.  All
// hom-set and inverse conditions are stacked into one linear system; returns
// none when it is inconsistent.  Convolution inverses are unique, so a
// returned morphism is the inverse.
std::optional<ConvMorphism> solve_convolution_inverse(const ConvolutionContext& c,
                                                      const ConvMorphism& f);

// One-sided variants: the retraction equation compose(f, g) = identity at
// f.src, respectively the section equation compose(g, f) = identity at
// f.dst, each together with the hom-set membership of g.  Free coordinates
// of an underdetermined system are set to zero.
std::optional<ConvMorphism> solve_left_convolution_inverse(const ConvolutionContext& c,
                                                           const ConvMorphism& f);
std::optional<ConvMorphism> solve_right_convolution_inverse(const ConvolutionContext& c,
                                                            const ConvMorphism& f);

}  // namespace hopfgal
