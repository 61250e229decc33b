#include <doctest.h>

#include <optional>
#include <string>

#include "hopfgal/cleft.hpp"
#include "hopfgal/crossed.hpp"
#include "hopfgal/gallery.hpp"
#include "hopfgal/linalg.hpp"

using namespace hopfgal;

namespace {

const CheckItem* find_item(const Report& r, const std::string& name) {
  for (const auto& it : r.items)
    if (it.name == name) return &it;
  return nullptr;
}

Scalar q_of(const Field& f, const std::string& s) { return f.parse(s).value(); }

}  // namespace

TEST_CASE("crossed: the sign measuring is a module algebra") {
  for (const Field& f : {Field::rationals(), Field::prime(5)}) {
    MeasuredRing m = gallery_sign_measuring(f);
    Report r = validate_module_algebra(m);
    if (!r.pass()) MESSAGE(to_text(r, true));
    CHECK(r.pass());
  }
}

TEST_CASE("crossed: smash product of the sign measuring") {
  Field f = Field::rationals();
  MeasuredRing m = gallery_sign_measuring(f);
  CrossedProduct sp = smash_product(m);
  if (!sp.structure.pass()) MESSAGE(to_text(sp.structure, true));
  CHECK(sp.structure.pass());
  CHECK(sp.algebra.dim == 4);
  CHECK_FALSE(sp.algebra.is_commutative());

  // (1⋊g)(x⋊1) = (g·x)⋊g = −x⋊g = −(x⋊1)(1⋊g), and x⋊1 squares to zero.
  Vec ex = sp.embed_ring.col(1);
  Vec eg = sp.embed_total.col(1);
  CHECK(sp.algebra.mul(eg, ex) ==
        vec_scale(f, f.neg(f.one()), sp.algebra.mul(ex, eg)));
  CHECK(vec_is_zero(sp.algebra.mul(ex, ex)));

  // The trivial cocycle is its own convolution inverse here.
  auto si = solve_cocycle_inverse(sp.data);
  REQUIRE(si.has_value());
  CHECK(*si == trivial_cocycle(m));
  Report inv = verify_cocycle_inverse(sp.data, *si);
  if (!inv.pass()) MESSAGE(to_text(inv, true));
  CHECK(inv.pass());
}

TEST_CASE("crossed: the smash product is a cleft extension") {
  Field f = Field::rationals();
  MeasuredRing m = gallery_sign_measuring(f);
  CrossedProduct sp = smash_product(m);
  HopfAlgebroid h2 = gallery_cyclic_hopf(f, 2);

  ComoduleAlgebra ca = crossed_comodule_algebra(h2, sp);
  Report rc = validate_comodule_algebra(ca);
  if (!rc.pass()) MESSAGE(to_text(rc, true));
  CHECK(rc.pass());
  CHECK(ca.coinv.dim() == 2);
  for (std::size_t i = 0; i < 2; ++i)
    CHECK(ca.coinv.contains(sp.embed_ring.col(i)));

  auto si = solve_cocycle_inverse(sp.data);
  REQUIRE(si.has_value());
  CleftExtension c = cleft_from_crossed(h2, sp, *si);
  Report r = verify_cleft(c, "smash as cleft");
  if (!r.pass()) MESSAGE(to_text(r, true));
  CHECK(r.pass());
  // With the trivial cocycle the inverse cleaving map is h ↦ 1⋊S(h).
  CHECK(c.j_inv == sp.embed_total * h2.antipode);
}

TEST_CASE("crossed: extraction from regular cleft extensions round-trips") {
  Field f = Field::rationals();
  for (const auto& h : {gallery_cyclic_hopf(f, 3), gallery_enveloping_hopf(f),
                        gallery_groupoid_hopf(f)}) {
    CleftExtension c = regular_cleft_extension(h);
    ExtractedCrossed ex = crossed_from_cleft(c);
    if (!ex.checks.pass()) MESSAGE(to_text(ex.checks, true));
    CHECK(ex.checks.pass());
    CHECK(ex.crossed.algebra.dim == h.total().dim);
  }
}

TEST_CASE("crossed: smash extraction recovers the trivial cocycle") {
  Field f = Field::rationals();
  MeasuredRing m = gallery_sign_measuring(f);
  CrossedProduct sp = smash_product(m);
  HopfAlgebroid h2 = gallery_cyclic_hopf(f, 2);
  auto si = solve_cocycle_inverse(sp.data);
  REQUIRE(si.has_value());
  CleftExtension c = cleft_from_crossed(h2, sp, *si);

  ExtractedCrossed ex = crossed_from_cleft(c);
  if (!ex.checks.pass()) MESSAGE(to_text(ex.checks, true));
  CHECK(ex.checks.pass());
  CHECK(ex.crossed.data.sigma == trivial_cocycle(ex.crossed.data.meas));
}

TEST_CASE("crossed: bicharacter twist of the Klein structure") {
  Field f = Field::rationals();
  CocycleData data = gallery_bicharacter_cocycle(f);
  Report rc = validate_cocycle(data);
  if (!rc.pass()) MESSAGE(to_text(rc, true));
  CHECK(rc.pass());
  CHECK(validate_twisted_module(data).pass());

  // The bicharacter is its own convolution inverse, and the distribution
  // laws for the action over the cocycle and its inverse hold throughout.
  auto si = solve_cocycle_inverse(data);
  REQUIRE(si.has_value());
  CHECK(*si == data.sigma);
  Report inv = verify_cocycle_inverse(data, *si);
  if (!inv.pass()) MESSAGE(to_text(inv, true));
  CHECK(inv.pass());

  CrossedProduct cp = build_crossed_product(data);
  if (!cp.structure.pass()) MESSAGE(to_text(cp.structure, true));
  CHECK(cp.structure.pass());
  CHECK(cp.algebra.dim == 4);
  CHECK_FALSE(cp.algebra.is_commutative());

  // e_g e_h = −e_gh = −e_h e_g while e_g² = e_h² = 1.
  Vec eg = cp.embed_total.col(1), eh = cp.embed_total.col(2);
  Vec egh = cp.embed_total.col(3);
  CHECK(cp.algebra.mul(eg, eh) == vec_scale(f, f.neg(f.one()), egh));
  CHECK(cp.algebra.mul(eh, eg) == egh);
  CHECK(cp.algebra.mul(eg, eg) == cp.algebra.unit);
  CHECK(cp.algebra.mul(eh, eh) == cp.algebra.unit);

  HopfAlgebroid k4 = gallery_klein_hopf(f);
  CHECK(validate_hopf_algebroid(k4).pass());
  CleftExtension c = cleft_from_crossed(k4, cp, *si);
  Report r = verify_cleft(c, "twisted group algebra");
  if (!r.pass()) MESSAGE(to_text(r, true));
  CHECK(r.pass());

  ExtractedCrossed ex = crossed_from_cleft(c);
  if (!ex.checks.pass()) MESSAGE(to_text(ex.checks, true));
  CHECK(ex.checks.pass());
  CHECK(ex.crossed.data.sigma == data.sigma);
}

TEST_CASE("crossed: a corrupted cocycle is rejected and breaks associativity") {
  Field f = Field::rationals();
  CocycleData data = gallery_bicharacter_cocycle(f);
  Matrix bad_sigma = data.sigma;
  bad_sigma.at(0, 1 * 4 + 2) = f.one();  // flip σ(g,h) from −1 to +1
  CocycleData bad = make_cocycle_data(data.meas, bad_sigma);

  Report rc = validate_cocycle(bad);
  CHECK_FALSE(rc.pass());
  const CheckItem* item = find_item(rc, "cocycle_identity");
  REQUIRE(item != nullptr);
  CHECK_FALSE(item->pass);
  CHECK_FALSE(item->witness.empty());

  CrossedProduct cp = build_crossed_product(bad);
  CHECK_FALSE(cp.structure.pass());
  const CheckItem* assoc = find_item(cp.structure, "algebra.associativity");
  REQUIRE(assoc != nullptr);
  CHECK_FALSE(assoc->pass);

  auto si = solve_cocycle_inverse(bad);
  CHECK((!si.has_value() || !verify_cocycle_inverse(bad, *si).pass()));
}

TEST_CASE("crossed: gauge transformation on the twisted Klein product") {
  Field f = Field::rationals();
  CocycleData data = gallery_bicharacter_cocycle(f);
  CrossedProduct cp = build_crossed_product(data);

  Matrix chi(f, 1, 4);
  chi.at(0, 0) = f.one();
  chi.at(0, 1) = q_of(f, "2");
  chi.at(0, 2) = q_of(f, "3");
  chi.at(0, 3) = q_of(f, "5");
  auto chi_inv = solve_gauge_inverse(data.meas, chi);
  REQUIRE(chi_inv.has_value());
  CHECK(chi_inv->at(0, 1) == q_of(f, "1/2"));
  CHECK(chi_inv->at(0, 3) == q_of(f, "1/5"));
  Report g = validate_gauge_map(data.meas, chi, *chi_inv);
  if (!g.pass()) MESSAGE(to_text(g, true));
  CHECK(g.pass());

  CocycleData twisted = gauge_transform(data, chi, *chi_inv);
  CHECK(twisted.meas.action == data.meas.action);
  CHECK(twisted.sigma.at(0, 1 * 4 + 2) == q_of(f, "-6/5"));
  CHECK(validate_cocycle(twisted).pass());
  CHECK(validate_twisted_module(twisted).pass());

  // Gauging back with the inverse pair restores the original data.
  CocycleData back = gauge_transform(twisted, *chi_inv, chi);
  CHECK(back.sigma == data.sigma);
  CHECK(back.meas.action == data.meas.action);

  CrossedProduct cp2 = build_crossed_product(twisted);
  CHECK(cp2.structure.pass());
  Matrix iso = gauge_equivalence_iso(cp, cp2, chi);
  Report eq = verify_crossed_equivalence(cp, cp2, iso);
  if (!eq.pass()) MESSAGE(to_text(eq, true));
  CHECK(eq.pass());
  CHECK(gauge_from_equivalence(cp, cp2, iso) == chi);
}

TEST_CASE("crossed: gauge transformation on the smash product") {
  Field f = Field::rationals();
  MeasuredRing m = gallery_sign_measuring(f);
  CrossedProduct cp = smash_product(m);

  // χ(1) = 1, χ(g) = 1+x, convolution invertible with χ̄(g) = 1−x.
  Matrix chi(f, 2, 2);
  chi.set_col(0, vec_basis(2, 0));
  chi.set_col(1, vec_add(f, vec_basis(2, 0), vec_basis(2, 1)));
  auto chi_inv = solve_gauge_inverse(m, chi);
  REQUIRE(chi_inv.has_value());
  CHECK(chi_inv->col(1) == vec_sub(f, vec_basis(2, 0), vec_basis(2, 1)));
  CHECK(validate_gauge_map(m, chi, *chi_inv).pass());

  // Group-like coproduct and commutative coefficients: the twisting data is
  // unchanged, but the induced self-equivalence is not the identity map.
  CocycleData twisted = gauge_transform(cp.data, chi, *chi_inv);
  CHECK(twisted.meas.action == cp.data.meas.action);
  CHECK(twisted.sigma == cp.data.sigma);

  CrossedProduct cp2 = build_crossed_product(twisted);
  Matrix iso = gauge_equivalence_iso(cp, cp2, chi);
  CHECK(iso != Matrix::identity(f, 4));
  Report eq = verify_crossed_equivalence(cp, cp2, iso);
  if (!eq.pass()) MESSAGE(to_text(eq, true));
  CHECK(eq.pass());
  CHECK(gauge_from_equivalence(cp, cp2, iso) == chi);
}

TEST_CASE("crossed: gauge action on cleaving maps") {
  Field f = Field::rationals();
  MeasuredRing m = gallery_sign_measuring(f);
  CrossedProduct sp = smash_product(m);
  HopfAlgebroid h2 = gallery_cyclic_hopf(f, 2);
  auto si = solve_cocycle_inverse(sp.data);
  REQUIRE(si.has_value());
  CleftExtension c = cleft_from_crossed(h2, sp, *si);

  // χ with values in the coinvariants: χ(1) = 1, χ(g) = 1+x there.
  Matrix chi_b(f, 2, 2);
  chi_b.set_col(0, vec_basis(2, 0));
  chi_b.set_col(1, vec_add(f, vec_basis(2, 0), vec_basis(2, 1)));
  Matrix chi = Matrix::from_columns(f, c.alg.coinv.dim(), 2, [&](std::size_t u) {
    return c.alg.coinv.coordinates(sp.embed_ring.apply(chi_b.col(u))).value();
  });

  Matrix j_prime = gauge_cleaving_map(c, chi);
  CHECK(j_prime != c.j);
  auto gauged = cleave(c.alg, c.eta_l, j_prime);
  REQUIRE(gauged.has_value());
  Report r = verify_cleft(*gauged, "gauged cleaving map");
  if (!r.pass()) MESSAGE(to_text(r, true));
  CHECK(r.pass());

  // Comparing the two cleaving maps recovers the gauge.
  CHECK(compare_cleaving_maps(c, j_prime) == chi);
  // Comparing a map with itself gives the trivial gauge ι∘π.
  Matrix triv = compare_cleaving_maps(c, c.j);
  Matrix expected = Matrix::from_columns(f, c.alg.coinv.dim(), 2, [&](std::size_t) {
    return c.alg.coinv.coordinates(sp.embed_ring.apply(vec_basis(2, 0))).value();
  });
  CHECK(triv == expected);

  // The gauged extension still extracts valid crossed-product data.
  ExtractedCrossed ex = crossed_from_cleft(*gauged);
  if (!ex.checks.pass()) MESSAGE(to_text(ex.checks, true));
  CHECK(ex.checks.pass());
}

TEST_CASE("crossed: everything holds over a prime field as well") {
  Field f = Field::prime(5);
  CocycleData data = gallery_bicharacter_cocycle(f);
  CHECK(validate_cocycle(data).pass());
  auto si = solve_cocycle_inverse(data);
  REQUIRE(si.has_value());
  CHECK(verify_cocycle_inverse(data, *si).pass());
  CrossedProduct cp = build_crossed_product(data);
  CHECK(cp.structure.pass());
  CleftExtension c = cleft_from_crossed(gallery_klein_hopf(f), cp, *si);
  CHECK(verify_cleft(c).pass());
}
