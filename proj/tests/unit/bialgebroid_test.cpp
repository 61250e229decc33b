#include <doctest.h>

#include "hopfgal/bialgebroid.hpp"
#include "test_builders.hpp"

using namespace hopfgal;
using namespace hopfgal::testing;

TEST_CASE("balanced tensor dimension bookkeeping") {
  Field q = Field::rationals();
  LeftBialgebroid env = enveloping_bialgebroid(q);
  // H = L⊗L^op with dim 4 is free of rank 2 over L on either side, so
  // H⊗_L H has dimension 8 and the flat triple has dimension 16.
  CHECK(env.square().dim() == 8);
  CHECK(env.cube().dim() == 16);
  // dim(quotient) = dim(ambient) − rank(relations).
  CHECK(env.square().relations().dim() == 16 - 8);

  // Over the trivial base the quotient is the plain tensor square.
  LeftBialgebroid c4 = cyclic_left_bialgebroid(q, 4);
  CHECK(c4.square().dim() == 16);
  CHECK(c4.square().proj() == Matrix::identity(q, 16));
}

TEST_CASE("group bialgebra validates as a left bialgebroid over k") {
  for (auto kind : {0, 1}) {
    Field f = kind == 0 ? Field::rationals() : Field::prime(5);
    LeftBialgebroid b = cyclic_left_bialgebroid(f, 3);
    Report r = validate_left_bialgebroid(b);
    INFO(to_text(r));
    CHECK(r.pass());
  }
}

TEST_CASE("grouplike-to-unit coproduct corruption fails the counit law") {
  Field q = Field::rationals();
  LeftBialgebroid b = cyclic_left_bialgebroid(q, 2);
  // Corrupt γ(g) from g⊗g to g⊗1.
  Matrix bad = b.coproduct();
  bad.set_col(1, vec_kron(q, vec_basis(2, 1), vec_basis(2, 0)));
  LeftBialgebroid broken =
      make_left_bialgebroid(b.total, b.base, b.src, b.tgt, bad, b.counit());
  Report r = validate_left_bialgebroid(broken);
  CHECK(!r.pass());
  bool counit_law_failed = false;
  for (const auto& item : r.items)
    if ((item.name == "coring.counit.left_law" ||
         item.name == "coring.counit.right_law") &&
        !item.pass)
      counit_law_failed = true;
  CHECK(counit_law_failed);
}

TEST_CASE("enveloping bialgebroid of the dual numbers validates") {
  Field q = Field::rationals();
  LeftBialgebroid env = enveloping_bialgebroid(q);
  Report r = validate_left_bialgebroid(env);
  INFO(to_text(r));
  CHECK(r.pass());
  // Its base is genuinely noncommutative-free: t is an algebra map from L^op,
  // and the ranges of s and t commute but differ.
  CHECK(env.src != env.tgt);
}

TEST_CASE("co-opposite is a valid left bialgebroid and an involution") {
  Field q = Field::rationals();
  LeftBialgebroid env = enveloping_bialgebroid(q);
  LeftBialgebroid cop = co_opposite(env);
  Report r = validate_left_bialgebroid(cop);
  INFO(to_text(r));
  CHECK(r.pass());
  CHECK(cop.src == env.tgt);
  LeftBialgebroid copcop = co_opposite(cop);
  CHECK(copcop.src == env.src);
  CHECK(copcop.tgt == env.tgt);
  CHECK(copcop.coproduct() == env.coproduct());
  CHECK(copcop.counit() == env.counit());
  CHECK(copcop.total.mult == env.total.mult);
  CHECK(copcop.base.mult == env.base.mult);
}

TEST_CASE("co-opposite of a cocommutative bialgebra equals itself") {
  Field q = Field::rationals();
  LeftBialgebroid c3 = cyclic_left_bialgebroid(q, 3);
  LeftBialgebroid cop = co_opposite(c3);
  CHECK(cop.coproduct() == c3.coproduct());
  CHECK(cop.counit() == c3.counit());
  CHECK(cop.base.mult == c3.base.mult);  // base k is self-opposite
}

TEST_CASE("opposite of a left bialgebroid is a valid right bialgebroid") {
  Field q = Field::rationals();
  for (int which = 0; which < 2; ++which) {
    LeftBialgebroid b =
        which == 0 ? cyclic_left_bialgebroid(q, 2) : enveloping_bialgebroid(q);
    RightBialgebroid rb = opposite_bgd(b);
    Report r = validate_right_bialgebroid(rb);
    INFO("which=", which, "\n", to_text(r));
    CHECK(r.pass());
  }
}

TEST_CASE("takeuchi subspace contains the coproduct image strictly when proper") {
  Field q = Field::rationals();
  LeftBialgebroid env = enveloping_bialgebroid(q);
  Subspace tak = env.takeuchi();
  const QuotientSpace& sq = env.square();
  for (std::size_t j = 0; j < env.total.dim; ++j)
    CHECK(tak.contains(sq.proj().apply(env.coproduct().col(j))));
  CHECK(tak.dim() <= sq.dim());
}

TEST_CASE("bimodule validator flags non-commuting actions") {
  Field q = Field::rationals();
  Algebra base = dual_numbers(q);
  Bimodule m(base, 2);
  // Left action: x acts as the nilpotent shift; right action: x acts as a
  // projection — these do not commute.
  Matrix shift = Matrix::from_rows(q, {{0, 0}, {1, 0}});
  Matrix proj0 = Matrix::from_rows(q, {{1, 0}, {0, 0}});
  m.left_act = {Matrix::identity(q, 2), shift};
  m.right_act = {Matrix::identity(q, 2), proj0};
  Report r = validate_bimodule(m);
  CHECK(!r.pass());
  bool commute_failed = false;
  for (const auto& item : r.items)
    if (item.name == "sides.commute" && !item.pass) commute_failed = true;
  CHECK(commute_failed);
  // The projection is also not square-zero, so the right action is not
  // an action of k[x]/(x²) at all.
  bool right_failed = false;
  for (const auto& item : r.items)
    if (item.name == "right.associative" && !item.pass) right_failed = true;
  CHECK(right_failed);
}
