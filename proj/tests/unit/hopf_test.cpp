#include <doctest.h>

#include "hopfgal/gallery.hpp"
#include "hopfgal/hopf.hpp"
#include "test_builders.hpp"

using namespace hopfgal;

namespace {

Matrix identity_of(const Algebra& a) { return Matrix::identity(a.field, a.dim); }

bool has_failing_item_containing(const Report& r, const std::string& needle) {
  for (const auto& item : r.items)
    if (!item.pass && item.name.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("cyclic group structures pass full verification") {
  Field q = Field::rationals();
  for (std::size_t n : {2u, 3u}) {
    HopfAlgebroid h = gallery_cyclic_hopf(q, n);
    Report r = validate_hopf_algebroid(h);
    INFO("n = ", n, "; first failure: ", r.first_failure());
    CHECK(r.pass());
    CHECK(h.left.square().dim() == n * n);
    CHECK(h.mixed_lr.dim() == n * n * n);
    CHECK(h.mixed_rl.dim() == n * n * n);
  }
  Field f5 = Field::prime(5);
  Report r5 = validate_hopf_algebroid(gallery_cyclic_hopf(f5, 2));
  INFO("first failure: ", r5.first_failure());
  CHECK(r5.pass());
}

TEST_CASE("enveloping structure of the square-zero extension verifies") {
  Field q = Field::rationals();
  HopfAlgebroid h = gallery_enveloping_hopf(q);
  Report r = validate_hopf_algebroid(h);
  INFO("first failure: ", r.first_failure());
  CHECK(r.pass());
  CHECK(h.left.square().dim() == 8);
  CHECK(h.left.cube().dim() == 16);
  CHECK(h.mixed_lr.dim() == 16);
  CHECK(h.mixed_rl.dim() == 16);
  // The left half coincides with the independently built fixture.
  LeftBialgebroid fixture = testing::enveloping_bialgebroid(q);
  CHECK(h.left.total.mult == fixture.total.mult);
  CHECK(h.left.src == fixture.src);
  CHECK(h.left.tgt == fixture.tgt);
  CHECK(h.left.coproduct() == fixture.coproduct());
  CHECK(h.left.counit() == fixture.counit());
}

TEST_CASE("pair groupoid structure verifies over both fields") {
  for (const Field& f : {Field::rationals(), Field::prime(5)}) {
    HopfAlgebroid h = gallery_groupoid_hopf(f);
    Report r = validate_hopf_algebroid(h);
    INFO("field ", f.describe(), "; first failure: ", r.first_failure());
    CHECK(r.pass());
    CHECK(h.left.square().dim() == 8);
    CHECK(h.right.square().dim() == 8);
    CHECK(h.mixed_lr.dim() == 16);
    CHECK(h.mixed_rl.dim() == 16);
  }
}

TEST_CASE("identity antipode on a cyclic group of order three is rejected") {
  Field q = Field::rationals();
  HopfAlgebroid good = gallery_cyclic_hopf(q, 3);
  HopfAlgebroid bad =
      make_hopf_algebroid(good.left, good.right, identity_of(good.total()));
  Report r = validate_hopf_algebroid(bad);
  CHECK(!r.pass());
  CHECK(has_failing_item_containing(r, "antipode"));
}

TEST_CASE("antipode solver recovers the group inverse") {
  Field q = Field::rationals();
  HopfAlgebroid h = gallery_cyclic_hopf(q, 3);
  auto s = solve_antipode(h.left, h.right);
  REQUIRE(s.has_value());
  CHECK(*s == h.antipode);  // column i is basis vector (3−i) mod 3
  Matrix expected(q, 3, 3);
  expected.set_col(0, vec_basis(3, 0));
  expected.set_col(1, vec_basis(3, 2));
  expected.set_col(2, vec_basis(3, 1));
  CHECK(*s == expected);
}

TEST_CASE("antipode solver recovers the flip on the enveloping structure") {
  Field q = Field::rationals();
  HopfAlgebroid h = gallery_enveloping_hopf(q);
  auto s = solve_antipode(h.left, h.right);
  REQUIRE(s.has_value());
  CHECK(*s == h.antipode);
  // Explicit flip: 1⊗1 ↦ 1⊗1, 1⊗x ↦ x⊗1, x⊗1 ↦ 1⊗x, x⊗x ↦ x⊗x.
  Matrix expected(q, 4, 4);
  expected.set_col(0, vec_basis(4, 0));
  expected.set_col(1, vec_basis(4, 2));
  expected.set_col(2, vec_basis(4, 1));
  expected.set_col(3, vec_basis(4, 3));
  CHECK(*s == expected);
}

TEST_CASE("antipode solver recovers the arrow reversal on the pair groupoid") {
  Field q = Field::rationals();
  HopfAlgebroid h = gallery_groupoid_hopf(q);
  auto s = solve_antipode(h.left, h.right);
  REQUIRE(s.has_value());
  CHECK(*s == h.antipode);
}

TEST_CASE("no antipode exists when a grouplike is a proper idempotent") {
  Field q = Field::rationals();
  auto [left, right] = gallery_idempotent_monoid_pair(q);
  CHECK(validate_left_bialgebroid(left).pass());
  CHECK(validate_right_bialgebroid(right).pass());
  CHECK(!solve_antipode(left, right).has_value());
}

TEST_CASE("derived structures verify and double dualization restores data") {
  Field q = Field::rationals();
  for (int which : {0, 1, 2}) {
    HopfAlgebroid h = which == 0   ? gallery_cyclic_hopf(q, 3)
                      : which == 1 ? gallery_enveloping_hopf(q)
                                   : gallery_groupoid_hopf(q);
    DerivedHopfStructures d = derived_structures(h);
    Report r_opcop = validate_hopf_algebroid(d.op_cop);
    INFO("which = ", which, "; op_cop first failure: ", r_opcop.first_failure());
    CHECK(r_opcop.pass());
    REQUIRE(d.cop.has_value());  // all three antipodes are invertible
    REQUIRE(d.op.has_value());
    Report r_cop = validate_hopf_algebroid(*d.cop);
    INFO("which = ", which, "; cop first failure: ", r_cop.first_failure());
    CHECK(r_cop.pass());
    Report r_op = validate_hopf_algebroid(*d.op);
    INFO("which = ", which, "; op first failure: ", r_op.first_failure());
    CHECK(r_op.pass());

    HopfAlgebroid back = derived_structures(d.op_cop).op_cop;
    CHECK(back.antipode == h.antipode);
    CHECK(back.total().mult == h.total().mult);
    CHECK(back.left.src == h.left.src);
    CHECK(back.left.tgt == h.left.tgt);
    CHECK(back.left.coproduct() == h.left.coproduct());
    CHECK(back.right.coproduct() == h.right.coproduct());
    CHECK(back.left.counit() == h.left.counit());
  }
}
