#include "hopfgal/convolution.hpp"

#include <utility>
#include <vector>

#include "hopfgal/errors.hpp"
#include "hopfgal/linalg.hpp"
#include "hopfgal/tensor.hpp"
#include "detail/unknown_system.hpp"

namespace hopfgal {

namespace {

bool kills_relations(const Matrix& composite, const Subspace& rel) {
  for (std::size_t i = 0; i < rel.dim(); ++i)
    if (!vec_is_zero(composite.apply(rel.basis_vector(i)))) return false;
  return true;
}

FactorBalance unit_pattern(const Algebra& a, const Matrix& unit, std::size_t pos) {
  std::vector<Matrix> r, l;
  for (std::size_t k = 0; k < unit.cols(); ++k) {
    r.push_back(a.right_mult(unit.col(k)));
    l.push_back(a.left_mult(unit.col(k)));
  }
  return FactorBalance{pos, std::move(r), std::move(l)};
}

FactorBalance left_square_pattern(const LeftBialgebroid& b, std::size_t pos) {
  std::vector<Matrix> r, l;
  for (std::size_t k = 0; k < b.base.dim; ++k) {
    r.push_back(b.total.left_mult(b.tgt_of(b.base.basis(k))));
    l.push_back(b.total.left_mult(b.src_of(b.base.basis(k))));
  }
  return FactorBalance{pos, std::move(r), std::move(l)};
}

FactorBalance right_square_pattern(const RightBialgebroid& b, std::size_t pos) {
  std::vector<Matrix> r, l;
  for (std::size_t k = 0; k < b.base.dim; ++k) {
    r.push_back(b.total.right_mult(b.src_of(b.base.basis(k))));
    l.push_back(b.total.right_mult(b.tgt_of(b.base.basis(k))));
  }
  return FactorBalance{pos, std::move(r), std::move(l)};
}

// The H-side operator of the base element with index k acting through the
// hom-set structure: how dst acts from the left, and src from the right.
Matrix dst_h_action(const ConvolutionContext& c, BaseSide dst, std::size_t k) {
  const Algebra& h = c.total();
  if (dst == BaseSide::left) return h.left_mult(c.left.src_of(c.left.base.basis(k)));
  return h.right_mult(c.right.tgt_of(c.right.base.basis(k)));
}

Matrix src_h_action(const ConvolutionContext& c, BaseSide src, std::size_t k) {
  const Algebra& h = c.total();
  if (src == BaseSide::right)
    return h.right_mult(c.right.src_of(c.right.base.basis(k)));
  return h.left_mult(c.left.tgt_of(c.left.base.basis(k)));
}

const Matrix& coproduct_at(const ConvolutionContext& c, BaseSide object) {
  return object == BaseSide::left ? c.left.coproduct() : c.right.coproduct();
}

// Membership constraints of the sought inverse g : f.dst → f.src.
void add_hom_constraints(detail::UnknownSystem& sys, const ConvolutionContext& c,
                         BaseSide src, BaseSide dst) {
  const Algebra& a = c.target;
  std::size_t nl = (dst == BaseSide::left) ? c.left.base.dim : c.right.base.dim;
  for (std::size_t k = 0; k < nl; ++k)
    sys.add_intertwine(dst_h_action(c, dst, k),
                       a.left_mult(c.unit_map(dst).col(k)));
  std::size_t nr = (src == BaseSide::left) ? c.left.base.dim : c.right.base.dim;
  for (std::size_t k = 0; k < nr; ++k) {
    // Right base-linearity is an intertwine with right multiplication.
    const Matrix h_side = src_h_action(c, src, k);
    const Matrix t_side = a.right_mult(c.unit_map(src).col(k));
    sys.add_intertwine(h_side, t_side);
  }
}

// Equations stating  h ↦ g(h⟨1⟩)·f(h⟨2⟩)  equals the identity at f.src,
// with the coproduct over f.dst; the unknown sits in the first tensor slot.
void add_retraction_constraints(detail::UnknownSystem& sys, const ConvolutionContext& c,
                                const ConvMorphism& f) {
  const Field& fl = c.field();
  const Matrix& gamma = coproduct_at(c, f.dst);
  const Matrix target = c.unit_map(f.src) * (f.src == BaseSide::left
                                                 ? c.left.counit()
                                                 : c.right.counit());
  std::size_t dh = c.total().dim;
  for (std::size_t k = 0; k < dh; ++k) {
    std::vector<std::pair<std::size_t, Matrix>> terms;
    for (std::size_t u = 0; u < dh; ++u) {
      Matrix coeff(fl, c.target.dim, c.target.dim);
      bool any = false;
      for (std::size_t v = 0; v < dh; ++v) {
        const Scalar& w = gamma.at(u * dh + v, k);
        if (fl.is_zero(w)) continue;
        coeff = coeff + c.target.right_mult(f.map.col(v)).scaled(w);
        any = true;
      }
      if (any) terms.emplace_back(u, std::move(coeff));
    }
    sys.add_block(terms, target.col(k));
  }
}

// Equations stating  h ↦ f(h⟨1⟩)·g(h⟨2⟩)  equals the identity at f.dst,
// with the coproduct over f.src; the unknown sits in the second tensor slot.
void add_section_constraints(detail::UnknownSystem& sys, const ConvolutionContext& c,
                             const ConvMorphism& f) {
  const Field& fl = c.field();
  const Matrix& gamma = coproduct_at(c, f.src);
  const Matrix target = c.unit_map(f.dst) * (f.dst == BaseSide::left
                                                 ? c.left.counit()
                                                 : c.right.counit());
  std::size_t dh = c.total().dim;
  for (std::size_t k = 0; k < dh; ++k) {
    std::vector<std::pair<std::size_t, Matrix>> terms;
    for (std::size_t v = 0; v < dh; ++v) {
      Matrix coeff(fl, c.target.dim, c.target.dim);
      bool any = false;
      for (std::size_t u = 0; u < dh; ++u) {
        const Scalar& w = gamma.at(u * dh + v, k);
        if (fl.is_zero(w)) continue;
        coeff = coeff + c.target.left_mult(f.map.col(u)).scaled(w);
        any = true;
      }
      if (any) terms.emplace_back(v, std::move(coeff));
    }
    sys.add_block(terms, target.col(k));
  }
}

void check_morphism_shape(const ConvolutionContext& c, const ConvMorphism& m) {
  if (m.map.rows() != c.target.dim || m.map.cols() != c.total().dim)
    throw DimensionError("convolution morphism: map must be target.dim × H.dim");
}

std::optional<ConvMorphism> run_inverse_solver(const ConvolutionContext& c,
                                               const ConvMorphism& f, bool retraction,
                                               bool section) {
  check_morphism_shape(c, f);
  detail::UnknownSystem sys(c.field(), c.target.dim, c.total().dim);
  add_hom_constraints(sys, c, /*src=*/f.dst, /*dst=*/f.src);
  if (retraction) add_retraction_constraints(sys, c, f);
  if (section) add_section_constraints(sys, c, f);
  std::optional<Matrix> sol = sys.solve();
  if (!sol) return std::nullopt;
  return ConvMorphism{f.dst, f.src, std::move(*sol)};
}

}  // namespace

const char* to_string(BaseSide s) { return s == BaseSide::left ? "L" : "R"; }

ConvolutionContext make_convolution_context(LeftBialgebroid left,
                                            RightBialgebroid right, Algebra target,
                                            Matrix eta_l, Matrix eta_r) {
  const Field& f = target.field;
  if (!(f == left.total.field) || !(f == right.total.field))
    throw FieldMismatch("convolution context: mismatched fields");
  if (left.total.dim != right.total.dim)
    throw DimensionError("convolution context: the two total algebras differ");
  if (eta_l.rows() != target.dim || eta_l.cols() != left.base.dim)
    throw DimensionError("convolution context: η_L must be target.dim × L.dim");
  if (eta_r.rows() != target.dim || eta_r.cols() != right.base.dim)
    throw DimensionError("convolution context: η_R must be target.dim × R.dim");
  return ConvolutionContext{std::move(left), std::move(right), std::move(target),
                            std::move(eta_l), std::move(eta_r)};
}

ConvolutionContext make_convolution_context(const HopfAlgebroid& h, Algebra target,
                                            Matrix eta_l, Matrix eta_r) {
  return make_convolution_context(h.left, h.right, std::move(target),
                                  std::move(eta_l), std::move(eta_r));
}

ConvolutionContext self_convolution_context(const HopfAlgebroid& h) {
  return make_convolution_context(h.left, h.right, h.total(), h.left.src,
                                  h.right.src);
}

Report validate_convolution_context(const ConvolutionContext& c,
                                    const std::string& subject) {
  Report r;
  r.subject = subject;
  const Field& f = c.field();
  const Algebra& a = c.target;
  const Algebra& h = c.total();

  r.merge(validate_algebra(a, "target"), "target");
  r.merge(validate_algebra_map(c.left.base, a, c.eta_l, "unit_l"), "unit_l");
  r.merge(validate_algebra_map(c.right.base, a, c.eta_r, "unit_r"), "unit_r");

  {
    bool ok = true;
    std::string witness;
    for (std::size_t i = 0; ok && i < c.left.base.dim; ++i)
      for (std::size_t k = 0; ok && k < c.right.base.dim; ++k) {
        Vec lr = a.mul(c.eta_l.col(i), c.eta_r.col(k));
        Vec rl = a.mul(c.eta_r.col(k), c.eta_l.col(i));
        if (!(lr == rl)) {
          ok = false;
          witness = "η_L(" + c.left.base.labels[i] + ") vs η_R(" +
                    c.right.base.labels[k] + ")";
        }
      }
    r.add("units.commute", ok, witness);
  }

  // Mixed associativity of the two products of A over the balanced triple
  // products: the plain multiplication must descend to both quotients, and
  // the two bracketings must agree there.
  auto product_item = [&](const char* name, const FactorBalance& first,
                          const FactorBalance& second) {
    QuotientSpace q = multi_balanced_tensor(f, {a.dim, a.dim, a.dim}, {first, second});
    Matrix inner = a.mult * Matrix::kron(Matrix::identity(f, a.dim), a.mult);
    Matrix outer = a.mult * Matrix::kron(a.mult, Matrix::identity(f, a.dim));
    bool desc = kills_relations(inner, q.relations()) &&
                kills_relations(outer, q.relations());
    r.add(std::string(name) + ".descends", desc);
    r.add(name, inner * q.section() == outer * q.section());
  };
  product_item("product.mixed_lr", unit_pattern(a, c.eta_l, 0),
               unit_pattern(a, c.eta_r, 1));
  product_item("product.mixed_rl", unit_pattern(a, c.eta_r, 0),
               unit_pattern(a, c.eta_l, 1));

  // Mixed compatibility of the two coproducts of H over the balanced triple
  // products of H, including well-definedness of each composite.
  Matrix idh = Matrix::identity(f, h.dim);
  {
    QuotientSpace q = multi_balanced_tensor(
        f, {h.dim, h.dim, h.dim},
        {left_square_pattern(c.left, 0), right_square_pattern(c.right, 1)});
    Matrix lhs = q.proj() * Matrix::kron(idh, c.right.coproduct());
    Matrix rhs = q.proj() * Matrix::kron(c.left.coproduct(), idh);
    r.add("coproduct.mixed_lr.descends",
          kills_relations(lhs, c.left.square().relations()) &&
              kills_relations(rhs, c.right.square().relations()));
    r.add("coproduct.mixed_lr",
          lhs * c.left.coproduct() == rhs * c.right.coproduct());
  }
  {
    QuotientSpace q = multi_balanced_tensor(
        f, {h.dim, h.dim, h.dim},
        {right_square_pattern(c.right, 0), left_square_pattern(c.left, 1)});
    Matrix lhs = q.proj() * Matrix::kron(idh, c.left.coproduct());
    Matrix rhs = q.proj() * Matrix::kron(c.right.coproduct(), idh);
    r.add("coproduct.mixed_rl.descends",
          kills_relations(lhs, c.right.square().relations()) &&
              kills_relations(rhs, c.left.square().relations()));
    r.add("coproduct.mixed_rl",
          lhs * c.right.coproduct() == rhs * c.left.coproduct());
  }
  return r;
}

Report validate_conv_morphism(const ConvolutionContext& c, const ConvMorphism& m,
                              const std::string& subject) {
  Report r;
  r.subject = subject;
  bool shape = m.map.rows() == c.target.dim && m.map.cols() == c.total().dim;
  r.add("shape", shape,
        shape ? "" : "map must be target.dim × H.dim");
  if (!shape) return r;

  const Algebra& a = c.target;
  const Algebra& base_d = c.base(m.dst);
  {
    bool ok = true;
    std::string witness;
    for (std::size_t k = 0; ok && k < base_d.dim; ++k) {
      Matrix lhs = m.map * dst_h_action(c, m.dst, k);
      Matrix rhs = a.left_mult(c.unit_map(m.dst).col(k)) * m.map;
      if (!(lhs == rhs)) {
        ok = false;
        witness = std::string("fails for base element ") + base_d.labels[k] +
                  " of " + to_string(m.dst);
      }
    }
    r.add("left_linear", ok, witness);
  }
  const Algebra& base_s = c.base(m.src);
  {
    bool ok = true;
    std::string witness;
    for (std::size_t k = 0; ok && k < base_s.dim; ++k) {
      Matrix lhs = m.map * src_h_action(c, m.src, k);
      Matrix rhs = a.right_mult(c.unit_map(m.src).col(k)) * m.map;
      if (!(lhs == rhs)) {
        ok = false;
        witness = std::string("fails for base element ") + base_s.labels[k] +
                  " of " + to_string(m.src);
      }
    }
    r.add("right_linear", ok, witness);
  }
  return r;
}

ConvMorphism identity_at(const ConvolutionContext& c, BaseSide object) {
  const Matrix& counit =
      object == BaseSide::left ? c.left.counit() : c.right.counit();
  return ConvMorphism{object, object, c.unit_map(object) * counit};
}

ConvMorphism compose_conv(const ConvolutionContext& c, const ConvMorphism& f,
                          const ConvMorphism& g) {
  check_morphism_shape(c, f);
  check_morphism_shape(c, g);
  if (f.dst != g.src)
    throw BindingError(std::string("convolution composition: destination ") +
                       to_string(f.dst) + " does not match source " +
                       to_string(g.src));
  Matrix composite = c.target.mult * Matrix::kron(g.map, f.map) *
                     coproduct_at(c, f.dst);
  return ConvMorphism{f.src, g.dst, std::move(composite)};
}

std::optional<ConvMorphism> solve_convolution_inverse(const ConvolutionContext& c,
                                                      const ConvMorphism& f) {
  return run_inverse_solver(c, f, true, true);
}

std::optional<ConvMorphism> solve_left_convolution_inverse(const ConvolutionContext& c,
                                                           const ConvMorphism& f) {
  return run_inverse_solver(c, f, true, false);
}

std::optional<ConvMorphism> solve_right_convolution_inverse(
    const ConvolutionContext& c, const ConvMorphism& f) {
  return run_inverse_solver(c, f, false, true);
}

}  // namespace hopfgal
