#include <doctest.h>

#include <optional>
#include <vector>

#include "hopfgal/cleft.hpp"
#include "hopfgal/gallery.hpp"
#include "hopfgal/linalg.hpp"

using namespace hopfgal;

namespace {

std::vector<HopfAlgebroid> standard_instances(const Field& f) {
  std::vector<HopfAlgebroid> out;
  out.push_back(gallery_cyclic_hopf(f, 2));
  out.push_back(gallery_cyclic_hopf(f, 3));
  out.push_back(gallery_enveloping_hopf(f));
  out.push_back(gallery_groupoid_hopf(f));
  return out;
}

}  // namespace

TEST_CASE("cleft: the regular extension verifies on all gallery instances") {
  Field q = Field::rationals();
  for (const auto& h : standard_instances(q)) {
    CleftExtension c = regular_cleft_extension(h);
    Report r = verify_cleft(c, "regular extension");
    if (!r.pass()) MESSAGE(to_text(r, true));
    CHECK(r.pass());
  }
  Field f5 = Field::prime(5);
  CleftExtension c = regular_cleft_extension(gallery_cyclic_hopf(f5, 2));
  CHECK(verify_cleft(c).pass());
}

TEST_CASE("cleft: cleave recovers the antipode as the inverse of the identity") {
  Field q = Field::rationals();
  for (const auto& h :
       {gallery_cyclic_hopf(q, 3), gallery_enveloping_hopf(q)}) {
    ComoduleAlgebra ca = regular_comodule_algebra(h);
    auto c = cleave(ca, h.left.src, Matrix::identity(q, h.total().dim));
    REQUIRE(c.has_value());
    CHECK(c->j_inv == h.antipode);
  }
}

TEST_CASE("cleft: candidates without convolution inverses are rejected") {
  Field q = Field::rationals();
  HopfAlgebroid h = gallery_cyclic_hopf(q, 3);
  ComoduleAlgebra ca = regular_comodule_algebra(h);
  // Every column the non-invertible element 1 − g.
  Matrix bad(q, 3, 3);
  for (std::size_t k = 0; k < 3; ++k) {
    Vec v = vec_sub(q, vec_basis(3, 0), vec_basis(3, 1));
    bad.set_col(k, v);
  }
  CHECK_FALSE(cleave(ca, h.left.src, bad).has_value());
  CHECK_FALSE(cleave(ca, h.left.src, Matrix(q, 3, 3)).has_value());
}

TEST_CASE("cleft: a rescaled cleaving map is cleft and can be normalized") {
  Field q = Field::rationals();
  HopfAlgebroid h = gallery_cyclic_hopf(q, 3);
  ComoduleAlgebra ca = regular_comodule_algebra(h);
  // j(g^k) = (k+2)·g^k is colinear and convolution invertible but does not
  // send the unit to the unit.
  Matrix j(q, 3, 3);
  for (std::size_t k = 0; k < 3; ++k)
    j.set_col(k, vec_scale(q, q.parse(std::to_string(k + 2)).value(),
                           vec_basis(3, k)));
  auto c = cleave(ca, h.left.src, j);
  REQUIRE(c.has_value());
  Report r = verify_cleft(*c, "rescaled", false);
  if (!r.pass()) MESSAGE(to_text(r, true));
  CHECK(r.pass());
  CHECK(c->j.apply(h.total().unit) != h.total().unit);

  CleftExtension n = normalize_cleaving_map(*c);
  CHECK(n.j.apply(h.total().unit) == h.total().unit);
  CHECK(verify_cleft(n, "normalized", false).pass());
  // Normalization is idempotent once the unit is fixed.
  CleftExtension again = normalize_cleaving_map(n);
  CHECK(again.j == n.j);
  CHECK(again.j_inv == n.j_inv);
}

TEST_CASE("canonical map: bijective on regular extensions, with translation map") {
  Field q = Field::rationals();
  for (const auto& h : standard_instances(q)) {
    ComoduleAlgebra ca = regular_comodule_algebra(h);
    const Algebra& a = ca.alg;
    CanonicalMap can = canonical_map(ca);
    CHECK(can.bijective);

    // On classes of 1⊗a the map returns the class of the coaction of a.
    for (std::size_t k = 0; k < a.dim; ++k) {
      Vec lhs = can.map.apply(
          can.domain.proj().apply(vec_kron(q, a.unit, vec_basis(a.dim, k))));
      Vec rhs = ca.com.com_r.product.proj().apply(ca.com.com_r.coaction.col(k));
      CHECK(lhs == rhs);
    }

    // Collapsing the second leg with the right counit recovers the product.
    Matrix counit_collapse = a.mult *
                             Matrix::kron(Matrix::identity(q, a.dim),
                                          ca.eta_r * h.right.counit()) *
                             ca.com.com_r.product.section();
    CHECK(counit_collapse * can.map == a.mult * can.domain.section());

    // The translation map is a two-sided preimage of 1⊗(−).
    Matrix tau = translation_map(ca, can);
    Matrix ins = materialize(q, a.dim * h.total().dim, h.total().dim,
                             [&](std::size_t k) {
                               return vec_kron(q, a.unit,
                                               vec_basis(h.total().dim, k));
                             });
    CHECK(can.map * tau == ca.com.com_r.product.proj() * ins);
  }
}

TEST_CASE("canonical map: group-algebra translation sends g to g⁻¹⊗g") {
  Field q = Field::rationals();
  HopfAlgebroid h = gallery_cyclic_hopf(q, 3);
  ComoduleAlgebra ca = regular_comodule_algebra(h);
  CanonicalMap can = canonical_map(ca);
  REQUIRE(can.bijective);
  Matrix tau = translation_map(ca, can);
  for (std::size_t k = 0; k < 3; ++k) {
    Vec expect = can.domain.proj().apply(
        vec_kron(q, vec_basis(3, (3 - k) % 3), vec_basis(3, k)));
    CHECK(tau.col(k) == expect);
  }
}

TEST_CASE("normal basis: maps verify and rebuild the cleaving data exactly") {
  Field q = Field::rationals();
  for (const auto& h : standard_instances(q)) {
    CleftExtension c = regular_cleft_extension(h);
    NormalBasis nb = normal_basis_maps(c);
    if (!nb.checks.pass()) MESSAGE(to_text(nb.checks, true));
    CHECK(nb.checks.pass());
    Report rm = validate_hopf_comodule(nb.comodule, "balanced product");
    if (!rm.pass()) MESSAGE(to_text(rm, true));
    CHECK(rm.pass());

    // Coinvariants map to b⊗1.
    std::size_t nbase = c.alg.coinv_embed.cols();
    for (std::size_t i = 0; i < nbase; ++i) {
      Vec expect = nb.product.proj().apply(
          vec_kron(q, vec_basis(nbase, i), h.total().unit));
      CHECK(nb.kappa.apply(c.alg.coinv_embed.col(i)) == expect);
    }

    CleftExtension rebuilt = cleft_from_galois_nb(c.alg, c.eta_l, nb.kappa);
    CHECK(rebuilt.j == c.j);
    CHECK(rebuilt.j_inv == c.j_inv);
    CHECK(verify_cleft(rebuilt, "rebuilt", false).pass());
  }
}

TEST_CASE("normal basis: explicit inverse formula for the canonical map") {
  Field q = Field::rationals();
  for (const auto& h :
       {gallery_cyclic_hopf(q, 3), gallery_enveloping_hopf(q)}) {
    CleftExtension c = regular_cleft_extension(h);
    const Algebra& a = c.alg.alg;
    CanonicalMap can = canonical_map(c.alg);
    REQUIRE(can.bijective);
    Matrix ida = Matrix::identity(q, a.dim);
    Matrix absorb = a.mult * Matrix::kron(ida, c.j_inv);
    Matrix explicit_inverse = can.domain.proj() *
                              Matrix::kron(absorb, c.j) *
                              Matrix::kron(ida, h.left.coproduct()) *
                              c.alg.com.com_r.product.section();
    CHECK(explicit_inverse == *can.inverse);
  }
}

TEST_CASE("left-handed normal basis: isomorphism with flipped colinearity") {
  Field q = Field::rationals();
  for (const auto& h : standard_instances(q)) {
    CleftExtension c = regular_cleft_extension(h);
    LeftNormalBasis lnb = left_handed_kappa(c);
    if (!lnb.checks.pass()) MESSAGE(to_text(lnb.checks, true));
    CHECK(lnb.checks.pass());
  }
}

TEST_CASE("co-opposite: the flipped extension is cleft with the same coinvariants") {
  Field q = Field::rationals();
  for (const auto& h : standard_instances(q)) {
    CleftExtension c = regular_cleft_extension(h);
    CleftExtension cop = cop_cleft_extension(c);
    Report r = verify_cleft(cop, "co-opposite extension");
    if (!r.pass()) MESSAGE(to_text(r, true));
    CHECK(r.pass());
    CHECK(cop.alg.coinv == c.alg.coinv);

    // Flipping twice restores every piece.
    CleftExtension back = cop_cleft_extension(cop);
    CHECK(back.j == c.j);
    CHECK(back.j_inv == c.j_inv);
    CHECK(back.alg.alg.mult == c.alg.alg.mult);
    CHECK(back.hopf().antipode == c.hopf().antipode);
    CHECK(back.alg.com.com_r.coaction == c.alg.com.com_r.coaction);
  }
}

TEST_CASE("cleft: verification pinpoints corrupted data") {
  Field q = Field::rationals();
  HopfAlgebroid h = gallery_enveloping_hopf(q);
  CleftExtension good = regular_cleft_extension(h);

  SUBCASE("unit map through the target section is not coinvariant") {
    CleftExtension bad = good;
    bad.eta_l = h.left.tgt;
    Report r = verify_cleft(bad, "bad unit");
    CHECK_FALSE(r.pass());
    REQUIRE(r.first_failure() != nullptr);
    CHECK(r.first_failure()->name == "unit_l.image_coinvariant");
    CHECK_FALSE(r.first_failure()->witness.empty());
  }
  SUBCASE("identity in place of the antipode fails the composites") {
    CleftExtension bad = good;
    bad.j_inv = Matrix::identity(q, h.total().dim);
    Report r = verify_cleft(bad, "bad inverse", false);
    CHECK_FALSE(r.pass());
    bool composite_failed = false;
    for (const auto& item : r.items)
      if (!item.pass && item.name.rfind("inverse.", 0) == 0)
        composite_failed = true;
    CHECK(composite_failed);
  }
  SUBCASE("perturbed cleaving map fails colinearity") {
    CleftExtension bad = good;
    Matrix j = bad.j;
    Vec col = j.col(1);
    col[0] = q.add(col[0], q.one());
    j.set_col(1, col);
    bad.j = j;
    Report r = verify_cleft(bad, "bad cleaving map", false);
    CHECK_FALSE(r.pass());
  }
}

TEST_CASE("cleft: the whole pipeline works over a prime field") {
  Field f5 = Field::prime(5);
  HopfAlgebroid h = gallery_cyclic_hopf(f5, 2);
  CleftExtension c = regular_cleft_extension(h);
  CHECK(verify_cleft(c).pass());
  NormalBasis nb = normal_basis_maps(c);
  CHECK(nb.checks.pass());
  CleftExtension rebuilt = cleft_from_galois_nb(c.alg, c.eta_l, nb.kappa);
  CHECK(rebuilt.j == c.j);
  CHECK(rebuilt.j_inv == c.j_inv);
  CHECK(verify_cleft(cop_cleft_extension(c)).pass());
}
