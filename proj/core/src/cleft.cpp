#include "hopfgal/cleft.hpp"

#include <utility>
#include <vector>

#include "hopfgal/errors.hpp"
#include "hopfgal/linalg.hpp"
#include "hopfgal/tensor.hpp"

namespace hopfgal {

namespace {

bool kills_relations(const Matrix& composite, const Subspace& rel) {
  for (std::size_t i = 0; i < rel.dim(); ++i)
    if (!vec_is_zero(composite.apply(rel.basis_vector(i)))) return false;
  return true;
}

Matrix combine(const Field& f, const std::vector<Matrix>& ops, const Vec& coeff) {
  Matrix out(f, ops.empty() ? 0 : ops.front().rows(),
             ops.empty() ? 0 : ops.front().cols());
  for (std::size_t k = 0; k < ops.size(); ++k)
    out = out + ops[k].scaled(coeff[k]);
  return out;
}

Vec coords_or_throw(const Subspace& b, const Vec& v, const char* what) {
  auto c = b.coordinates(v);
  if (!c) throw Error(what);
  return *c;
}

// Columns of `m` live in A⊗V with A the first factor; rewrites the A-slices
// through coordinates of the subspace `b`, so the result lands in B⊗V.
Matrix restrict_first_factor(const Subspace& b, std::size_t dv, const Matrix& m,
                             const char* what) {
  const Field& f = b.field();
  std::size_t da = b.ambient_dim(), nb = b.dim();
  if (m.rows() != da * dv) throw DimensionError(what);
  Matrix out(f, nb * dv, m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Vec col = vec_zero(nb * dv);
    for (std::size_t iv = 0; iv < dv; ++iv) {
      Vec slice = vec_zero(da);
      for (std::size_t ia = 0; ia < da; ++ia) slice[ia] = m.at(ia * dv + iv, c);
      Vec bc = coords_or_throw(b, slice, what);
      for (std::size_t ib = 0; ib < nb; ++ib) col[ib * dv + iv] = bc[ib];
    }
    out.set_col(c, col);
  }
  return out;
}

// Same for V⊗A with A the second factor; the result lands in V⊗B.
Matrix restrict_second_factor(const Subspace& b, std::size_t dv, const Matrix& m,
                              const char* what) {
  const Field& f = b.field();
  std::size_t da = b.ambient_dim(), nb = b.dim();
  if (m.rows() != dv * da) throw DimensionError(what);
  Matrix out(f, dv * nb, m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Vec col = vec_zero(dv * nb);
    for (std::size_t iv = 0; iv < dv; ++iv) {
      Vec slice = vec_zero(da);
      for (std::size_t ia = 0; ia < da; ++ia) slice[ia] = m.at(iv * da + ia, c);
      Vec bc = coords_or_throw(b, slice, what);
      for (std::size_t ib = 0; ib < nb; ++ib) col[iv * nb + ib] = bc[ib];
    }
    out.set_col(c, col);
  }
  return out;
}

// Multiplication by coinvariants, expressed on coinvariant coordinates:
// column i holds the coordinates of  embed(i)·embed(arg)  (right == false)
// or  embed(arg)·embed(i)  (right == true).
Matrix coinv_mult(const Algebra& a, const Subspace& b, const Matrix& embed,
                  std::size_t arg, bool right) {
  const Field& f = a.field;
  std::size_t nb = embed.cols();
  Matrix out(f, nb, nb);
  for (std::size_t i = 0; i < nb; ++i) {
    Vec prod = right ? a.mul(embed.col(i), embed.col(arg))
                     : a.mul(embed.col(arg), embed.col(i));
    out.set_col(i, coords_or_throw(b, prod, "coinvariants are not closed under multiplication"));
  }
  return out;
}

}  // namespace

ConvolutionContext cleft_context(const ComoduleAlgebra& a, const Matrix& eta_l) {
  return make_convolution_context(a.com.base, a.alg, eta_l, a.eta_r);
}

CleftExtension make_cleft_extension(ComoduleAlgebra alg, Matrix eta_l, Matrix j,
                                    Matrix j_inv) {
  std::size_t da = alg.alg.dim, dh = alg.com.base.total().dim;
  std::size_t dl = alg.com.base.left.base.dim;
  if (eta_l.rows() != da || eta_l.cols() != dl)
    throw DimensionError("cleft extension: unit map has the wrong shape");
  if (j.rows() != da || j.cols() != dh || j_inv.rows() != da || j_inv.cols() != dh)
    throw DimensionError("cleft extension: cleaving maps have the wrong shape");
  return CleftExtension{std::move(alg), std::move(eta_l), std::move(j),
                        std::move(j_inv)};
}

std::optional<CleftExtension> cleave(ComoduleAlgebra alg, Matrix eta_l, Matrix j) {
  ConvolutionContext ctx = cleft_context(alg, eta_l);
  ConvMorphism cand{BaseSide::right, BaseSide::left, j};
  auto inv = solve_convolution_inverse(ctx, cand);
  if (!inv) return std::nullopt;
  return make_cleft_extension(std::move(alg), std::move(eta_l), std::move(j),
                              std::move(inv->map));
}

CleftExtension regular_cleft_extension(const HopfAlgebroid& h) {
  const Field& f = h.total().field;
  return make_cleft_extension(regular_comodule_algebra(h), h.left.src,
                              Matrix::identity(f, h.total().dim), h.antipode);
}

Report verify_cleft(const CleftExtension& c, const std::string& subject,
                    bool check_carrier) {
  Report r;
  r.subject = subject;
  const ComoduleAlgebra& ca = c.alg;
  const Algebra& a = ca.alg;
  const HopfAlgebroid& h = ca.com.base;
  const Algebra& hh = h.total();
  const Field& f = a.field;
  std::size_t da = a.dim, dh = hh.dim;
  std::size_t dl = h.left.base.dim, dr = h.right.base.dim;
  std::size_t nb = ca.coinv_embed.cols();

  bool shape = c.eta_l.rows() == da && c.eta_l.cols() == dl && c.j.rows() == da &&
               c.j.cols() == dh && c.j_inv.rows() == da && c.j_inv.cols() == dh;
  r.add("shape", shape);
  if (!shape) return r;

  if (check_carrier) r.merge(validate_comodule_algebra(ca, "carrier"), "carrier");
  r.merge(validate_algebra_map(h.left.base, a, c.eta_l, "unit_l"), "unit_l");

  {
    bool ok = true;
    std::string w;
    for (std::size_t k = 0; k < dl && ok; ++k)
      if (!ca.coinv.contains(c.eta_l.col(k))) {
        ok = false;
        w = "image of " + h.left.base.labels[k] + " is not coinvariant";
      }
    r.add("unit_l.image_coinvariant", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (std::size_t kl = 0; kl < dl && ok; ++kl)
      for (std::size_t kr = 0; kr < dr && ok; ++kr)
        if (a.mul(c.eta_l.col(kl), ca.eta_r.col(kr)) !=
            a.mul(ca.eta_r.col(kr), c.eta_l.col(kl))) {
          ok = false;
          w = "images of " + h.left.base.labels[kl] + " and " +
              h.right.base.labels[kr] + " do not commute";
        }
    r.add("units.commute", ok, w);
  }

  ConvolutionContext ctx = cleft_context(ca, c.eta_l);
  ConvMorphism jm{BaseSide::right, BaseSide::left, c.j};
  ConvMorphism jim{BaseSide::left, BaseSide::right, c.j_inv};
  r.merge(validate_conv_morphism(ctx, jm, "cleaving map"), "cleaving");
  r.merge(validate_conv_morphism(ctx, jim, "inverse"), "inverse");

  Matrix idh = Matrix::identity(f, dh);
  Matrix ida = Matrix::identity(f, da);

  // Colinearity of j with both coactions.
  {
    Matrix lift = ca.com.com_r.product.proj() * Matrix::kron(c.j, idh);
    r.add("cleaving.colinear_r.descends",
          kills_relations(lift, h.right.square().relations()));
    r.add("cleaving.colinear_r",
          ca.com.com_r.product.proj() * ca.com.com_r.coaction * c.j ==
              lift * h.right.coproduct());
  }
  {
    Matrix lift = ca.com.com_l.product.proj() * Matrix::kron(c.j, idh);
    r.add("cleaving.colinear_l.descends",
          kills_relations(lift, h.left.square().relations()));
    r.add("cleaving.colinear_l",
          ca.com.com_l.product.proj() * ca.com.com_l.coaction * c.j ==
              lift * h.left.coproduct());
  }

  // The two convolution-inverse identities.
  r.add("inverse.composite_at_l",
        compose_conv(ctx, jim, jm).map == identity_at(ctx, BaseSide::left).map);
  r.add("inverse.composite_at_r",
        compose_conv(ctx, jm, jim).map == identity_at(ctx, BaseSide::right).map);

  // Derived one-sided linearities over the right base.
  {
    bool ok = true;
    std::string w;
    for (std::size_t k = 0; k < dr && ok; ++k)
      if (c.j * hh.left_mult(h.right.src.col(k)) !=
          a.left_mult(ca.eta_r.col(k)) * c.j) {
        ok = false;
        w = "fails at " + h.right.base.labels[k];
      }
    r.add("lemma.source_absorbs", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (std::size_t k = 0; k < dr && ok; ++k)
      if (c.j_inv * hh.left_mult(h.right.tgt.col(k)) !=
          a.right_mult(ca.eta_r.col(k)) * c.j_inv) {
        ok = false;
        w = "fails at " + h.right.base.labels[k];
      }
    r.add("lemma.target_absorbs", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (std::size_t i = 0; i < nb && ok; ++i)
      for (std::size_t k = 0; k < dr && ok; ++k)
        if (a.mul(ca.coinv_embed.col(i), ca.eta_r.col(k)) !=
            a.mul(ca.eta_r.col(k), ca.coinv_embed.col(i))) {
          ok = false;
          w = "coinvariant " + std::to_string(i) + " vs " + h.right.base.labels[k];
        }
    r.add("lemma.commutant", ok, w);
  }

  // Twisted colinearity of the inverse: the coactions send j⁻¹(h) to
  // j⁻¹ ⊗ antipode applied to the flipped other coproduct.
  Matrix flip_hh = tensor_permutation(f, {dh, dh}, {1, 0});
  Matrix twist = Matrix::kron(c.j_inv, h.antipode) * flip_hh;
  {
    Matrix rhs = ca.com.com_r.product.proj() * twist;
    r.add("lemma.inverse_colinear_r.descends",
          kills_relations(rhs, h.left.square().relations()));
    r.add("lemma.inverse_colinear_r",
          ca.com.com_r.product.proj() * ca.com.com_r.coaction * c.j_inv ==
              rhs * h.left.coproduct());
  }
  {
    Matrix rhs = ca.com.com_l.product.proj() * twist;
    r.add("lemma.inverse_colinear_l.descends",
          kills_relations(rhs, h.right.square().relations()));
    r.add("lemma.inverse_colinear_l",
          ca.com.com_l.product.proj() * ca.com.com_l.coaction * c.j_inv ==
              rhs * h.right.coproduct());
  }

  // a ↦ a⁰·j⁻¹(a¹) lands in the coinvariants, and right-multiplying the
  // result by j(1) splits A onto them as a left module map.
  Matrix collapse = a.mult * Matrix::kron(ida, c.j_inv) * ca.com.com_r.coaction;
  {
    bool ok = true;
    std::string w;
    for (std::size_t k = 0; k < da && ok; ++k)
      if (!ca.coinv.contains(collapse.col(k))) {
        ok = false;
        w = "fails at " + a.labels[k];
      }
    r.add("lemma.collapse_coinvariant", ok, w);
  }
  Vec j_one = c.j.apply(hh.unit);
  r.add("cleaving.unit_coinvariant", ca.coinv.contains(j_one));
  {
    Matrix split = a.right_mult(j_one) * collapse;
    r.add("splitting.fixes_coinvariants", split * ca.coinv_embed == ca.coinv_embed);
    bool lin = true;
    for (std::size_t i = 0; i < nb && lin; ++i) {
      Matrix lm = a.left_mult(ca.coinv_embed.col(i));
      lin = split * lm == lm * split;
    }
    r.add("splitting.left_linear", lin);
    bool img = true;
    for (std::size_t k = 0; k < da && img; ++k)
      img = ca.coinv.contains(split.col(k));
    r.add("splitting.image_coinvariant", img);
  }

  // With an invertible antipode the other coaction yields a right-linear
  // splitting  a ↦ j⁻¹(1)·j(S⁻¹(a₍₁₎))·a₍₀₎.
  if (h.antipode_inverse) {
    Matrix flip_aa = tensor_permutation(f, {da, da}, {1, 0});
    Matrix split = a.left_mult(c.j_inv.apply(hh.unit)) * a.mult * flip_aa *
                   Matrix::kron(ida, c.j * *h.antipode_inverse) *
                   ca.com.com_l.coaction;
    r.add("splitting_right.fixes_coinvariants",
          split * ca.coinv_embed == ca.coinv_embed);
    bool lin = true;
    for (std::size_t i = 0; i < nb && lin; ++i) {
      Matrix rm = a.right_mult(ca.coinv_embed.col(i));
      lin = split * rm == rm * split;
    }
    r.add("splitting_right.right_linear", lin);
    bool img = true;
    for (std::size_t k = 0; k < da && img; ++k)
      img = ca.coinv.contains(split.col(k));
    r.add("splitting_right.image_coinvariant", img);
  }

  return r;
}

CleftExtension normalize_cleaving_map(const CleftExtension& c) {
  const Algebra& a = c.alg.alg;
  const Vec& one_h = c.hopf().total().unit;
  Matrix j = a.right_mult(c.j_inv.apply(one_h)) * c.j;
  Matrix j_inv = a.left_mult(c.j.apply(one_h)) * c.j_inv;
  return CleftExtension{c.alg, c.eta_l, std::move(j), std::move(j_inv)};
}

CanonicalMap canonical_map(const ComoduleAlgebra& ca) {
  const Algebra& a = ca.alg;
  const Field& f = a.field;
  std::size_t da = a.dim, dh = ca.com.base.total().dim;
  std::size_t nb = ca.coinv_embed.cols();
  std::vector<Matrix> right_ops, left_ops;
  for (std::size_t i = 0; i < nb; ++i) {
    right_ops.push_back(a.right_mult(ca.coinv_embed.col(i)));
    left_ops.push_back(a.left_mult(ca.coinv_embed.col(i)));
  }
  QuotientSpace domain = multi_balanced_tensor(
      f, {da, da},
      {FactorBalance{0, std::move(right_ops), std::move(left_ops)}});
  Matrix amb = Matrix::kron(a.mult, Matrix::identity(f, dh)) *
               Matrix::kron(Matrix::identity(f, da), ca.com.com_r.coaction);
  Matrix full = ca.com.com_r.product.proj() * amb;
  if (!kills_relations(full, domain.relations()))
    throw Error("canonical map: not balanced over the coinvariants");
  Matrix map = full * domain.section();
  std::optional<Matrix> inv;
  bool bij = false;
  if (map.rows() == map.cols()) {
    inv = inverse(map);
    bij = inv.has_value();
  }
  return CanonicalMap{std::move(domain), std::move(map), bij, std::move(inv)};
}

Matrix translation_map(const ComoduleAlgebra& ca, const CanonicalMap& can) {
  if (!can.inverse)
    throw Error("translation map requires a bijective canonical map");
  const Algebra& a = ca.alg;
  const Field& f = a.field;
  std::size_t da = a.dim, dh = ca.com.base.total().dim;
  Matrix ins = materialize(f, da * dh, dh, [&](std::size_t k) {
    return vec_kron(f, a.unit, vec_basis(dh, k));
  });
  return *can.inverse * (ca.com.com_r.product.proj() * ins);
}

QuotientSpace coinvariant_base_product(const ComoduleAlgebra& ca,
                                       const Matrix& eta_l) {
  const Algebra& a = ca.alg;
  const Field& f = a.field;
  const Algebra& hh = ca.com.base.total();
  const LeftBialgebroid& lb = ca.com.base.left;
  std::size_t nb = ca.coinv_embed.cols();
  std::vector<Matrix> right_ops, left_ops;
  for (std::size_t k = 0; k < lb.base.dim; ++k) {
    Matrix rb(f, nb, nb);
    for (std::size_t i = 0; i < nb; ++i)
      rb.set_col(i, coords_or_throw(
                        ca.coinv, a.mul(ca.coinv_embed.col(i), eta_l.col(k)),
                        "coinvariants are not closed under the unit image"));
    right_ops.push_back(std::move(rb));
    left_ops.push_back(hh.left_mult(lb.src.col(k)));
  }
  return multi_balanced_tensor(
      f, {nb, hh.dim},
      {FactorBalance{0, std::move(right_ops), std::move(left_ops)}});
}

NormalBasis normal_basis_maps(const CleftExtension& c) {
  const ComoduleAlgebra& ca = c.alg;
  const Algebra& a = ca.alg;
  const Field& f = a.field;
  const HopfAlgebroid& h = ca.com.base;
  const Algebra& hh = h.total();
  std::size_t da = a.dim, dh = hh.dim, nb = ca.coinv_embed.cols();
  Matrix ida = Matrix::identity(f, da);
  Matrix idh = Matrix::identity(f, dh);
  Matrix idb = Matrix::identity(f, nb);

  QuotientSpace q = coinvariant_base_product(ca, c.eta_l);

  // κ(a) = a⁰·j⁻¹(a¹⟨1⟩) ⊗ a¹⟨2⟩, the first factor rewritten through B.
  Matrix absorb = a.mult * Matrix::kron(ida, c.j_inv);  // A⊗H → A
  Matrix k_amb = Matrix::kron(absorb, idh) *
                 Matrix::kron(ida, h.left.coproduct()) * ca.com.com_r.coaction;
  Matrix k_b = restrict_first_factor(
      ca.coinv, dh, k_amb, "normal basis: the map leaves the coinvariants");
  Matrix kappa = q.proj() * k_b;

  // ν(b⊗h) = b·j(h).
  Matrix n_amb = a.mult * Matrix::kron(ca.coinv_embed, c.j);
  Report checks;
  checks.subject = "normal basis";
  checks.add("nu.well_defined", kills_relations(n_amb, q.relations()));
  Matrix nu = n_amb * q.section();

  // Comodule structure on B⊗_L H carried by the second factor.
  std::vector<Matrix> act_r, act_l;
  for (std::size_t k = 0; k < h.right.base.dim; ++k)
    act_r.push_back(q.proj() * Matrix::kron(idb, hh.right_mult(h.right.src.col(k))) *
                    q.section());
  for (std::size_t k = 0; k < h.left.base.dim; ++k)
    act_l.push_back(q.proj() * Matrix::kron(idb, hh.left_mult(h.left.tgt.col(k))) *
                    q.section());
  Matrix rho_r = Matrix::kron(q.proj(), idh) *
                 Matrix::kron(idb, h.right.coproduct()) * q.section();
  Matrix rho_l = Matrix::kron(q.proj(), idh) *
                 Matrix::kron(idb, h.left.coproduct()) * q.section();
  HopfComodule m = make_hopf_comodule(h, q.dim(), std::move(act_r),
                                      std::move(act_l), rho_r, rho_l);

  checks.add("mutually_inverse", kappa * nu == Matrix::identity(f, q.dim()) &&
                                     nu * kappa == ida);
  {
    bool ok = true;
    std::string w;
    for (std::size_t i = 0; i < nb && ok; ++i) {
      Matrix lb = coinv_mult(a, ca.coinv, ca.coinv_embed, i, /*right=*/false);
      Matrix op = q.proj() * Matrix::kron(lb, idh) * q.section();
      if (kappa * a.left_mult(ca.coinv_embed.col(i)) != op * kappa) {
        ok = false;
        w = "fails at coinvariant " + std::to_string(i);
      }
    }
    checks.add("kappa.left_linear", ok, w);
  }
  {
    Matrix lift = m.com_r.product.proj() * Matrix::kron(kappa, idh);
    checks.add("kappa.colinear_r.descends",
               kills_relations(lift, ca.com.com_r.product.relations()));
    checks.add("kappa.colinear_r",
               m.com_r.product.proj() * m.com_r.coaction * kappa ==
                   lift * ca.com.com_r.coaction);
  }
  {
    Matrix lift = m.com_l.product.proj() * Matrix::kron(kappa, idh);
    checks.add("kappa.colinear_l.descends",
               kills_relations(lift, ca.com.com_l.product.relations()));
    checks.add("kappa.colinear_l",
               m.com_l.product.proj() * m.com_l.coaction * kappa ==
                   lift * ca.com.com_l.coaction);
  }
  return NormalBasis{std::move(q), std::move(m), std::move(kappa), std::move(nu),
                     std::move(checks)};
}

CleftExtension cleft_from_galois_nb(const ComoduleAlgebra& ca, const Matrix& eta_l,
                                    const Matrix& kappa) {
  const Algebra& a = ca.alg;
  const Field& f = a.field;
  const HopfAlgebroid& h = ca.com.base;
  std::size_t da = a.dim, dh = h.total().dim, nb = ca.coinv_embed.cols();

  QuotientSpace q = coinvariant_base_product(ca, eta_l);
  if (kappa.rows() != q.dim() || kappa.cols() != da)
    throw DimensionError("normal basis map has the wrong shape");
  CanonicalMap can = canonical_map(ca);
  if (!can.bijective) throw Error("the canonical map is not bijective");
  std::optional<Matrix> kinv = inverse(kappa);
  if (!kinv) throw Error("the normal basis map is not an isomorphism");

  Vec unit_b =
      coords_or_throw(ca.coinv, a.unit, "the unit is not a coinvariant");
  Matrix ins = materialize(f, nb * dh, dh, [&](std::size_t k) {
    return vec_kron(f, unit_b, vec_basis(dh, k));
  });
  Matrix j = *kinv * (q.proj() * ins);

  // The inverse comes from the translation map with the second tensor factor
  // collapsed through κ followed by the left counit back into A.
  Matrix tau = translation_map(ca, can);
  Matrix to_base = a.mult * Matrix::kron(ca.coinv_embed, eta_l * h.left.counit());
  Matrix g = to_base * q.section() * kappa;  // A → A, lands in B
  Matrix j_inv = a.mult * Matrix::kron(Matrix::identity(f, da), g) *
                 (can.domain.section() * tau);
  return make_cleft_extension(ca, eta_l, std::move(j), std::move(j_inv));
}

LeftNormalBasis left_handed_kappa(const CleftExtension& c) {
  const ComoduleAlgebra& ca = c.alg;
  const Algebra& a = ca.alg;
  const Field& f = a.field;
  const HopfAlgebroid& h = ca.com.base;
  const Algebra& hh = h.total();
  if (!h.antipode_inverse)
    throw Error("the left-handed normal basis requires an invertible antipode");
  const Matrix& sinv = *h.antipode_inverse;
  std::size_t da = a.dim, dh = hh.dim, nb = ca.coinv_embed.cols();
  Matrix ida = Matrix::identity(f, da);
  Matrix idh = Matrix::identity(f, dh);
  Matrix idb = Matrix::identity(f, nb);

  // H⊗_L B: the base acts on H through the target map and on B through
  // left multiplication by the unit image.
  std::vector<Matrix> right_ops, left_ops;
  for (std::size_t k = 0; k < h.left.base.dim; ++k) {
    right_ops.push_back(hh.left_mult(h.left.tgt.col(k)));
    Matrix lb(f, nb, nb);
    for (std::size_t i = 0; i < nb; ++i)
      lb.set_col(i, coords_or_throw(
                        ca.coinv, a.mul(c.eta_l.col(k), ca.coinv_embed.col(i)),
                        "coinvariants are not closed under the unit image"));
    left_ops.push_back(std::move(lb));
  }
  QuotientSpace q = multi_balanced_tensor(
      f, {dh, nb},
      {FactorBalance{0, std::move(right_ops), std::move(left_ops)}});

  // a ↦ S⁻¹(a₁)⟨1⟩ ⊗ j(S⁻¹(a₁)⟨2⟩)·a₀, second factor rewritten through B.
  Matrix step = Matrix::kron(ida, h.left.coproduct() * sinv) *
                ca.com.com_l.coaction;                          // A → A⊗H⊗H
  Matrix perm = tensor_permutation(f, {da, dh, dh}, {1, 2, 0});  // → H⊗H⊗A
  Matrix fuse = a.mult * Matrix::kron(c.j, ida);                 // H⊗A → A
  Matrix kl_amb = Matrix::kron(idh, fuse) * perm * step;         // A → H⊗A
  Matrix kl_b = restrict_second_factor(
      ca.coinv, dh, kl_amb,
      "left-handed normal basis: the map leaves the coinvariants");
  Matrix kappa = q.proj() * kl_b;

  Report checks;
  checks.subject = "left-handed normal basis";
  checks.add("iso", q.dim() == da && inverse(kappa).has_value());
  {
    bool ok = true;
    std::string w;
    for (std::size_t i = 0; i < nb && ok; ++i) {
      Matrix rb = coinv_mult(a, ca.coinv, ca.coinv_embed, i, /*right=*/true);
      Matrix op = q.proj() * Matrix::kron(idh, rb) * q.section();
      if (kappa * a.right_mult(ca.coinv_embed.col(i)) != op * kappa) {
        ok = false;
        w = "fails at coinvariant " + std::to_string(i);
      }
    }
    checks.add("right_linear", ok, w);
  }

  // Left comodule structures: on A by flipping each coaction through the
  // inverse antipode, on H⊗_L B through the first factor.
  Matrix pltr = h.left.counit() * h.right.tgt;   // R → L
  Matrix prtl = h.right.counit() * h.left.tgt;   // L → R
  std::vector<Matrix> lar_a, lal_a, lar_m, lal_m;
  for (std::size_t k = 0; k < h.right.base.dim; ++k) {
    lar_a.push_back(combine(f, ca.com.com_l.right_act, pltr.col(k)));
    lar_m.push_back(q.proj() *
                    Matrix::kron(hh.right_mult(h.right.tgt.col(k)), idb) *
                    q.section());
  }
  for (std::size_t k = 0; k < h.left.base.dim; ++k) {
    lal_a.push_back(combine(f, ca.com.com_r.right_act, prtl.col(k)));
    lal_m.push_back(q.proj() * Matrix::kron(hh.left_mult(h.left.src.col(k)), idb) *
                    q.section());
  }
  Matrix flip_ah = tensor_permutation(f, {da, dh}, {1, 0});
  Matrix dr_a = flip_ah * Matrix::kron(ida, sinv) * ca.com.com_l.coaction;
  Matrix dl_a = flip_ah * Matrix::kron(ida, sinv) * ca.com.com_r.coaction;
  Matrix dr_m = Matrix::kron(idh, q.proj()) *
                Matrix::kron(h.right.coproduct(), idb) * q.section();
  Matrix dl_m = Matrix::kron(idh, q.proj()) *
                Matrix::kron(h.left.coproduct(), idb) * q.section();
  LeftHopfComodule on_a = make_left_hopf_comodule(h, da, std::move(lar_a),
                                                  std::move(lal_a), dr_a, dl_a);
  LeftHopfComodule on_m = make_left_hopf_comodule(h, q.dim(), std::move(lar_m),
                                                  std::move(lal_m), dr_m, dl_m);
  checks.merge(validate_left_hopf_comodule(on_a, "flipped carrier"), "carrier");
  checks.merge(validate_left_hopf_comodule(on_m, "product"), "product");
  {
    Matrix lift = on_m.prod_r.proj() * Matrix::kron(idh, kappa);
    checks.add("colinear_r.descends", kills_relations(lift, on_a.prod_r.relations()));
    checks.add("colinear_r", lift * on_a.delta_r ==
                                 on_m.prod_r.proj() * on_m.delta_r * kappa);
  }
  {
    Matrix lift = on_m.prod_l.proj() * Matrix::kron(idh, kappa);
    checks.add("colinear_l.descends", kills_relations(lift, on_a.prod_l.relations()));
    checks.add("colinear_l", lift * on_a.delta_l ==
                                 on_m.prod_l.proj() * on_m.delta_l * kappa);
  }
  return LeftNormalBasis{std::move(q), std::move(kappa), std::move(checks)};
}

ComoduleAlgebra cop_comodule_algebra(const ComoduleAlgebra& ca) {
  const HopfAlgebroid& h = ca.com.base;
  if (!h.antipode_inverse)
    throw Error("the co-opposite structure requires an invertible antipode");
  const Field& f = ca.alg.field;
  std::size_t da = ca.alg.dim;
  HopfAlgebroid flipped =
      make_hopf_algebroid(co_opposite(h.left), co_opposite(h.right),
                          *h.antipode_inverse);
  Algebra aop = opposite(ca.alg);
  // The flipped left base acts through the original right structure:
  // a ·' l = a · π_R(t_L(l)).
  Matrix prtl = h.right.counit() * h.left.tgt;
  std::vector<Matrix> act_l;
  for (std::size_t k = 0; k < h.left.base.dim; ++k)
    act_l.push_back(ca.alg.right_mult(ca.eta_r.apply(prtl.col(k))));
  Matrix ida = Matrix::identity(f, da);
  Matrix rho_r = Matrix::kron(ida, *h.antipode_inverse) * ca.com.com_l.coaction;
  Matrix rho_l = Matrix::kron(ida, *h.antipode_inverse) * ca.com.com_r.coaction;
  return make_comodule_algebra(std::move(flipped), std::move(aop), ca.eta_r,
                               std::move(act_l), rho_r, rho_l);
}

CleftExtension cop_cleft_extension(const CleftExtension& c) {
  return make_cleft_extension(cop_comodule_algebra(c.alg), c.eta_l, c.j_inv, c.j);
}

}  // namespace hopfgal
