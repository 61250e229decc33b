#include "hopfgal/gallery.hpp"

namespace hopfgal {

namespace {

// Diagonal coproduct γ(e_i) = e_i⊗e_i as an ambient matrix.
Matrix diagonal_coproduct(const Field& f, std::size_t n) {
  Matrix c(f, n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    c.set_col(i, vec_kron(f, vec_basis(n, i), vec_basis(n, i)));
  return c;
}

}  // namespace

Algebra gallery_trivial_base(const Field& f) {
  Algebra a(f, 1);
  a.labels = {"1"};
  a.unit = vec_basis(1, 0);
  a.mult = from_bilinear(f, 1, 1, 1,
                         [&](std::size_t, std::size_t) { return vec_basis(1, 0); });
  return a;
}

HopfAlgebroid gallery_cyclic_hopf(const Field& f, std::size_t n) {
  if (n == 0) throw Error("cyclic structure needs order at least 1");
  Algebra h(f, n);
  for (std::size_t i = 0; i < n; ++i) h.labels[i] = "g" + std::to_string(i);
  h.unit = vec_basis(n, 0);
  h.mult = from_bilinear(f, n, n, n, [&](std::size_t i, std::size_t j) {
    return vec_basis(n, (i + j) % n);
  });
  Algebra base = gallery_trivial_base(f);

  Matrix unit_col(f, n, 1);
  unit_col.set_col(0, h.unit);
  Matrix coproduct = diagonal_coproduct(f, n);
  Matrix counit(f, 1, n);
  for (std::size_t i = 0; i < n; ++i) counit.at(0, i) = f.one();

  LeftBialgebroid left =
      make_left_bialgebroid(h, base, unit_col, unit_col, coproduct, counit);
  RightBialgebroid right =
      make_right_bialgebroid(h, base, unit_col, unit_col, coproduct, counit);

  Matrix antipode(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    antipode.set_col(i, vec_basis(n, (n - i) % n));
  return make_hopf_algebroid(std::move(left), std::move(right), std::move(antipode));
}

HopfAlgebroid gallery_enveloping_hopf(const Field& f) {
  // L = k[x]/(x²); total H = L⊗L^op with basis e_{ij} = xⁱ⊗xʲ at 2i+j.
  Algebra base(f, 2);
  base.labels = {"1", "x"};
  base.unit = vec_basis(2, 0);
  base.mult = from_bilinear(f, 2, 2, 2, [&](std::size_t i, std::size_t j) {
    return (i + j < 2) ? vec_basis(2, i + j) : vec_zero(2);
  });
  Algebra h = tensor_algebra(base, opposite(base));
  h.labels = {"1(x)1", "1(x)x", "x(x)1", "x(x)x"};

  Matrix src(f, 4, 2), tgt(f, 4, 2);
  src.set_col(0, vec_basis(4, 0));
  src.set_col(1, vec_basis(4, 2));  // x⊗1
  tgt.set_col(0, vec_basis(4, 0));
  tgt.set_col(1, vec_basis(4, 1));  // 1⊗x

  Matrix coproduct(f, 16, 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      coproduct.set_col(2 * i + j,
                        vec_kron(f, vec_basis(4, 2 * i), vec_basis(4, j)));
  // π(xⁱ⊗xʲ) = xⁱ⁺ʲ — the same row pattern on both sides because the
  // coefficient algebra is commutative.
  Matrix counit(f, 2, 4);
  counit.at(0, 0) = f.one();
  counit.at(1, 1) = f.one();
  counit.at(1, 2) = f.one();

  LeftBialgebroid left = make_left_bialgebroid(h, base, src, tgt, coproduct, counit);
  // Right structure: source and target trade places.
  RightBialgebroid right =
      make_right_bialgebroid(h, base, tgt, src, coproduct, counit);

  Matrix antipode(f, 4, 4);  // flip xⁱ⊗xʲ ↦ xʲ⊗xⁱ
  antipode.set_col(0, vec_basis(4, 0));
  antipode.set_col(1, vec_basis(4, 2));
  antipode.set_col(2, vec_basis(4, 1));
  antipode.set_col(3, vec_basis(4, 3));
  return make_hopf_algebroid(std::move(left), std::move(right), std::move(antipode));
}

HopfAlgebroid gallery_groupoid_hopf(const Field& f) {
  // Pair groupoid on {1,2}: basis u_jk at index 2(j−1)+(k−1),
  // u_jk·u_lm = δ_kl u_jm, unit u_11+u_22.
  Algebra h(f, 4);
  h.labels = {"u11", "u12", "u21", "u22"};
  h.unit = vec_add(f, vec_basis(4, 0), vec_basis(4, 3));
  h.mult = from_bilinear(f, 4, 4, 4, [&](std::size_t a, std::size_t b) {
    std::size_t j = a / 2, k = a % 2, l = b / 2, m = b % 2;
    return (k == l) ? vec_basis(4, 2 * j + m) : vec_zero(4);
  });

  Algebra base(f, 2);  // k×k with componentwise product
  base.labels = {"p1", "p2"};
  base.unit = vec_add(f, vec_basis(2, 0), vec_basis(2, 1));
  base.mult = from_bilinear(f, 2, 2, 2, [&](std::size_t i, std::size_t j) {
    return (i == j) ? vec_basis(2, i) : vec_zero(2);
  });

  Matrix emb(f, 4, 2);  // p_i ↦ u_ii, shared by all four structure maps
  emb.set_col(0, vec_basis(4, 0));
  emb.set_col(1, vec_basis(4, 3));

  Matrix coproduct = diagonal_coproduct(f, 4);
  Matrix counit_left(f, 2, 4), counit_right(f, 2, 4);
  for (std::size_t a = 0; a < 4; ++a) {
    counit_left.at(a / 2, a) = f.one();   // u_jk ↦ p_j
    counit_right.at(a % 2, a) = f.one();  // u_jk ↦ p_k
  }

  LeftBialgebroid left =
      make_left_bialgebroid(h, base, emb, emb, coproduct, counit_left);
  RightBialgebroid right =
      make_right_bialgebroid(h, base, emb, emb, coproduct, counit_right);

  Matrix antipode(f, 4, 4);  // u_jk ↦ u_kj
  antipode.set_col(0, vec_basis(4, 0));
  antipode.set_col(1, vec_basis(4, 2));
  antipode.set_col(2, vec_basis(4, 1));
  antipode.set_col(3, vec_basis(4, 3));
  return make_hopf_algebroid(std::move(left), std::move(right), std::move(antipode));
}

std::pair<LeftBialgebroid, RightBialgebroid> gallery_idempotent_monoid_pair(
    const Field& f) {
  // Span of {1, x} with x² = x, γ diagonal, π ≡ 1 on the basis.
  Algebra h(f, 2);
  h.labels = {"1", "x"};
  h.unit = vec_basis(2, 0);
  h.mult = from_bilinear(f, 2, 2, 2, [&](std::size_t i, std::size_t j) {
    return vec_basis(2, (i + j == 0) ? 0 : 1);
  });
  Algebra base = gallery_trivial_base(f);
  Matrix unit_col(f, 2, 1);
  unit_col.set_col(0, h.unit);
  Matrix coproduct = diagonal_coproduct(f, 2);
  Matrix counit(f, 1, 2);
  counit.at(0, 0) = f.one();
  counit.at(0, 1) = f.one();
  return {make_left_bialgebroid(h, base, unit_col, unit_col, coproduct, counit),
          make_right_bialgebroid(h, base, unit_col, unit_col, coproduct, counit)};
}

MeasuredRing gallery_sign_measuring(const Field& f) {
  HopfAlgebroid c2 = gallery_cyclic_hopf(f, 2);
  Algebra ring(f, 2);
  ring.labels = {"1", "x"};
  ring.unit = vec_basis(2, 0);
  ring.mult = from_bilinear(f, 2, 2, 2, [&](std::size_t i, std::size_t j) {
    return (i + j < 2) ? vec_basis(2, i + j) : vec_zero(2);
  });
  Matrix iota(f, 2, 1);
  iota.set_col(0, ring.unit);
  // Columns flattened as i_h·2 + i_b: the unit fixes both basis vectors,
  // g fixes 1 and negates x.
  Matrix action(f, 2, 4);
  action.set_col(0, vec_basis(2, 0));
  action.set_col(1, vec_basis(2, 1));
  action.set_col(2, vec_basis(2, 0));
  action.set_col(3, vec_scale(f, f.neg(f.one()), vec_basis(2, 1)));
  return make_measured_ring(c2.left, std::move(ring), std::move(iota),
                            std::move(action));
}

HopfAlgebroid gallery_klein_hopf(const Field& f) {
  // Index gᵃhᵇ as 2a+b; the product index is then the bitwise xor.
  Algebra h(f, 4);
  h.labels = {"1", "g", "h", "gh"};
  h.unit = vec_basis(4, 0);
  h.mult = from_bilinear(f, 4, 4, 4, [&](std::size_t i, std::size_t j) {
    return vec_basis(4, i ^ j);
  });
  Algebra base = gallery_trivial_base(f);
  Matrix unit_col(f, 4, 1);
  unit_col.set_col(0, h.unit);
  Matrix coproduct = diagonal_coproduct(f, 4);
  Matrix counit(f, 1, 4);
  for (std::size_t i = 0; i < 4; ++i) counit.at(0, i) = f.one();
  LeftBialgebroid left =
      make_left_bialgebroid(h, base, unit_col, unit_col, coproduct, counit);
  RightBialgebroid right =
      make_right_bialgebroid(h, base, unit_col, unit_col, coproduct, counit);
  return make_hopf_algebroid(std::move(left), std::move(right),
                             Matrix::identity(f, 4));
}

CocycleData gallery_bicharacter_cocycle(const Field& f) {
  HopfAlgebroid k4 = gallery_klein_hopf(f);
  Algebra ring = gallery_trivial_base(f);
  Matrix iota = Matrix::identity(f, 1);
  Matrix action(f, 1, 4);
  for (std::size_t i = 0; i < 4; ++i) action.at(0, i) = f.one();
  Matrix sigma(f, 1, 16);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      bool flip = (i & 1) && (j & 2);  // b·c with i = 2a+b, j = 2c+d
      sigma.at(0, i * 4 + j) = flip ? f.neg(f.one()) : f.one();
    }
  return make_cocycle_data(make_measured_ring(k4.left, std::move(ring),
                                              std::move(iota),
                                              std::move(action)),
                           std::move(sigma));
}

}  // namespace hopfgal
