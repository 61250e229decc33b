#include "hopfgal/bialgebroid.hpp"

#include "hopfgal/errors.hpp"

namespace hopfgal {

namespace {

// Evaluation base⊗carrier → carrier, b⊗x ↦ b·x.
Matrix eval_left(const Bimodule& m) {
  return from_bilinear(m.base.field, m.dim, m.base.dim, m.dim,
                       [&](std::size_t k, std::size_t j) {
                         return m.left_act[k].col(j);
                       });
}

// Evaluation carrier⊗base → carrier, x⊗b ↦ x·b.
Matrix eval_right(const Bimodule& m) {
  return from_bilinear(m.base.field, m.dim, m.dim, m.base.dim,
                       [&](std::size_t j, std::size_t k) {
                         return m.right_act[k].col(j);
                       });
}

}  // namespace

Matrix Bimodule::left_of(const Vec& b) const {
  Matrix acc(base.field, dim, dim);
  for (std::size_t k = 0; k < base.dim; ++k) {
    if (base.field.is_zero(b[k])) continue;
    acc = acc + left_act[k].scaled(b[k]);
  }
  return acc;
}

Matrix Bimodule::right_of(const Vec& b) const {
  Matrix acc(base.field, dim, dim);
  for (std::size_t k = 0; k < base.dim; ++k) {
    if (base.field.is_zero(b[k])) continue;
    acc = acc + right_act[k].scaled(b[k]);
  }
  return acc;
}

Report validate_bimodule(const Bimodule& m, const std::string& subject) {
  Report r;
  r.subject = subject;
  const Algebra& base = m.base;
  Matrix id = Matrix::identity(base.field, m.dim);
  r.add("left.unital", m.left_of(base.unit) == id);
  r.add("right.unital", m.right_of(base.unit) == id);
  {
    bool ok = true;
    std::string w;
    for (std::size_t i = 0; i < base.dim && ok; ++i)
      for (std::size_t j = 0; j < base.dim && ok; ++j) {
        Vec prod = base.mul(base.basis(i), base.basis(j));
        if (m.left_act[i] * m.left_act[j] != m.left_of(prod)) {
          ok = false;
          w = "left action on " + base.labels[i] + "*" + base.labels[j];
        }
      }
    r.add("left.associative", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (std::size_t i = 0; i < base.dim && ok; ++i)
      for (std::size_t j = 0; j < base.dim && ok; ++j) {
        Vec prod = base.mul(base.basis(j), base.basis(i));
        if (m.right_act[i] * m.right_act[j] != m.right_of(prod)) {
          ok = false;
          w = "right action on " + base.labels[i] + "," + base.labels[j];
        }
      }
    r.add("right.associative", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (std::size_t i = 0; i < base.dim && ok; ++i)
      for (std::size_t j = 0; j < base.dim && ok; ++j)
        if (m.left_act[i] * m.right_act[j] != m.right_act[j] * m.left_act[i]) {
          ok = false;
          w = "sides at " + base.labels[i] + "," + base.labels[j];
        }
    r.add("sides.commute", ok, w);
  }
  return r;
}

Coring make_coring(Bimodule mod, const Matrix& coproduct_ambient, Matrix counit) {
  const Field& f = mod.base.field;
  std::size_t d = mod.dim;
  if (coproduct_ambient.rows() != d * d || coproduct_ambient.cols() != d)
    throw DimensionError("coproduct matrix has wrong shape");
  if (counit.rows() != mod.base.dim || counit.cols() != d)
    throw DimensionError("counit matrix has wrong shape");
  QuotientSpace square = balanced_tensor(f, mod.right_act, mod.left_act);
  std::vector<FactorBalance> balances = {
      FactorBalance{0, mod.right_act, mod.left_act},
      FactorBalance{1, mod.right_act, mod.left_act}};
  QuotientSpace cube = multi_balanced_tensor(f, {d, d, d}, balances);
  Matrix canon = square.canonicalizer() * coproduct_ambient;
  return Coring{std::move(mod), std::move(canon), std::move(counit),
                std::move(square), std::move(cube)};
}

Report validate_coring(const Coring& c, const std::string& subject) {
  Report r;
  r.subject = subject;
  const Field& f = c.mod.base.field;
  std::size_t d = c.mod.dim;
  Matrix id = Matrix::identity(f, d);
  const Matrix& proj = c.square.proj();
  {
    bool ok = true;
    for (std::size_t j = 0; j < d && ok; ++j)
      ok = c.square.is_canonical(c.coproduct.col(j));
    r.add("coproduct.canonical", ok);
  }
  {
    bool ok = true;
    std::string w;
    for (std::size_t k = 0; k < c.mod.base.dim && ok; ++k) {
      if (proj * c.coproduct * c.mod.left_act[k] !=
          proj * Matrix::kron(c.mod.left_act[k], id) * c.coproduct) {
        ok = false;
        w = "left leg at base index " + std::to_string(k);
      }
      if (ok && proj * c.coproduct * c.mod.right_act[k] !=
                    proj * Matrix::kron(id, c.mod.right_act[k]) * c.coproduct) {
        ok = false;
        w = "right leg at base index " + std::to_string(k);
      }
    }
    r.add("coproduct.bilinear", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (std::size_t k = 0; k < c.mod.base.dim && ok; ++k) {
      if (c.counit * c.mod.left_act[k] !=
          c.mod.base.left_mult(c.mod.base.basis(k)) * c.counit) {
        ok = false;
        w = "left at base index " + std::to_string(k);
      }
      if (ok && c.counit * c.mod.right_act[k] !=
                    c.mod.base.right_mult(c.mod.base.basis(k)) * c.counit) {
        ok = false;
        w = "right at base index " + std::to_string(k);
      }
    }
    r.add("counit.bilinear", ok, w);
  }
  {
    // Coassociativity inside the flat triple quotient.
    Matrix lhs = c.cube.proj() * Matrix::kron(c.coproduct, id) * c.coproduct;
    Matrix rhs = c.cube.proj() * Matrix::kron(id, c.coproduct) * c.coproduct;
    bool ok = lhs == rhs;
    std::string w;
    if (!ok)
      for (std::size_t j = 0; j < d && w.empty(); ++j)
        if (lhs.col(j) != rhs.col(j)) w = "basis index " + std::to_string(j);
    r.add("coassociative", ok, w);
  }
  {
    Matrix m1 = eval_left(c.mod) * Matrix::kron(c.counit, id) * c.coproduct;
    r.add("counit.left_law", m1 == id);
    Matrix m2 = eval_right(c.mod) * Matrix::kron(id, c.counit) * c.coproduct;
    r.add("counit.right_law", m2 == id);
  }
  return r;
}

namespace {

// Shared compatibility checks between an algebra structure on the carrier
// and its coring: unit/multiplicativity of the coproduct, unit of the
// counit, and Takeuchi membership of the coproduct image.
void check_compatibilities(Report& r, const Algebra& total, const Coring& c,
                           const Subspace& takeuchi) {
  const Field& f = total.field;
  std::size_t d = total.dim;
  const Matrix& proj = c.square.proj();
  Matrix id = Matrix::identity(f, d);
  r.add("coproduct.unital",
        proj.apply(c.coproduct.apply(total.unit)) ==
            proj.apply(vec_kron(f, total.unit, total.unit)));
  {
    Matrix lhs = proj * c.coproduct * total.mult;
    Matrix factorwise =
        Matrix::kron(total.mult, total.mult) *
        tensor_permutation(f, {d, d, d, d}, {0, 2, 1, 3});
    Matrix rhs = proj * factorwise * Matrix::kron(c.coproduct, c.coproduct);
    bool ok = lhs == rhs;
    std::string w;
    if (!ok)
      for (std::size_t i = 0; i < d && w.empty(); ++i)
        for (std::size_t j = 0; j < d && w.empty(); ++j)
          if (lhs.col(i * d + j) != rhs.col(i * d + j))
            w = "on " + total.labels[i] + "*" + total.labels[j];
    r.add("coproduct.multiplicative", ok, w);
  }
  r.add("counit.unital",
        c.counit.apply(total.unit) == c.mod.base.unit);
  {
    bool ok = true;
    std::string w;
    for (std::size_t j = 0; j < d && ok; ++j)
      if (!takeuchi.contains(proj.apply(c.coproduct.col(j)))) {
        ok = false;
        w = "image of " + total.labels[j];
      }
    r.add("coproduct.range", ok, w);
  }
}

}  // namespace

Subspace LeftBialgebroid::takeuchi() const {
  std::vector<Matrix> on_left, on_right;
  for (std::size_t k = 0; k < base.dim; ++k) {
    on_left.push_back(total.right_mult(tgt_of(base.basis(k))));
    on_right.push_back(total.right_mult(src_of(base.basis(k))));
  }
  return agreement_subspace(square(), total.dim, total.dim, on_left, on_right);
}

LeftBialgebroid make_left_bialgebroid(Algebra total, Algebra base, Matrix src,
                                      Matrix tgt, const Matrix& coproduct_ambient,
                                      Matrix counit) {
  Bimodule mod(base, total.dim);
  for (std::size_t k = 0; k < base.dim; ++k) {
    mod.left_act.push_back(total.left_mult(src.apply(base.basis(k))));
    mod.right_act.push_back(total.left_mult(tgt.apply(base.basis(k))));
  }
  Coring coring = make_coring(std::move(mod), coproduct_ambient, std::move(counit));
  return LeftBialgebroid{std::move(total), std::move(base), std::move(src),
                         std::move(tgt), std::move(coring)};
}

Report validate_left_bialgebroid(const LeftBialgebroid& b, const std::string& subject) {
  Report r;
  r.subject = subject;
  r.merge(validate_algebra(b.total), "total");
  r.merge(validate_algebra(b.base), "base");
  r.merge(validate_algebra_map(b.base, b.total, b.src), "source");
  r.merge(validate_algebra_map(opposite(b.base), b.total, b.tgt), "target");
  {
    bool ok = true;
    std::string w;
    for (std::size_t i = 0; i < b.base.dim && ok; ++i)
      for (std::size_t j = 0; j < b.base.dim && ok; ++j) {
        Vec sl = b.src_of(b.base.basis(i));
        Vec tl = b.tgt_of(b.base.basis(j));
        if (b.total.mul(sl, tl) != b.total.mul(tl, sl)) {
          ok = false;
          w = "s(" + b.base.labels[i] + "), t(" + b.base.labels[j] + ")";
        }
      }
    r.add("ranges.commute", ok, w);
  }
  r.merge(validate_bimodule(b.coring.mod), "bimodule");
  r.merge(validate_coring(b.coring), "coring");
  check_compatibilities(r, b.total, b.coring, b.takeuchi());
  {
    // π(h s(π(h'))) = π(hh') = π(h t(π(h'))).
    Matrix id = Matrix::identity(b.total.field, b.total.dim);
    Matrix pm = b.counit() * b.total.mult;  // base.dim × total.dim²
    Matrix via_s = pm * Matrix::kron(id, b.src * b.counit());
    Matrix via_t = pm * Matrix::kron(id, b.tgt * b.counit());
    r.add("counit.product_via_source", via_s == pm);
    r.add("counit.product_via_target", via_t == pm);
  }
  r.add("counit.retracts_source",
        b.counit() * b.src == Matrix::identity(b.base.field, b.base.dim));
  r.add("counit.retracts_target",
        b.counit() * b.tgt == Matrix::identity(b.base.field, b.base.dim));
  return r;
}

Subspace RightBialgebroid::takeuchi() const {
  std::vector<Matrix> on_left, on_right;
  for (std::size_t k = 0; k < base.dim; ++k) {
    on_left.push_back(total.left_mult(src_of(base.basis(k))));
    on_right.push_back(total.left_mult(tgt_of(base.basis(k))));
  }
  return agreement_subspace(square(), total.dim, total.dim, on_left, on_right);
}

RightBialgebroid make_right_bialgebroid(Algebra total, Algebra base, Matrix src,
                                        Matrix tgt, const Matrix& coproduct_ambient,
                                        Matrix counit) {
  Bimodule mod(base, total.dim);
  for (std::size_t k = 0; k < base.dim; ++k) {
    mod.left_act.push_back(total.right_mult(tgt.apply(base.basis(k))));
    mod.right_act.push_back(total.right_mult(src.apply(base.basis(k))));
  }
  Coring coring = make_coring(std::move(mod), coproduct_ambient, std::move(counit));
  return RightBialgebroid{std::move(total), std::move(base), std::move(src),
                          std::move(tgt), std::move(coring)};
}

Report validate_right_bialgebroid(const RightBialgebroid& b,
                                  const std::string& subject) {
  Report r;
  r.subject = subject;
  r.merge(validate_algebra(b.total), "total");
  r.merge(validate_algebra(b.base), "base");
  r.merge(validate_algebra_map(b.base, b.total, b.src), "source");
  r.merge(validate_algebra_map(opposite(b.base), b.total, b.tgt), "target");
  {
    bool ok = true;
    std::string w;
    for (std::size_t i = 0; i < b.base.dim && ok; ++i)
      for (std::size_t j = 0; j < b.base.dim && ok; ++j) {
        Vec sr = b.src_of(b.base.basis(i));
        Vec tr = b.tgt_of(b.base.basis(j));
        if (b.total.mul(sr, tr) != b.total.mul(tr, sr)) {
          ok = false;
          w = "s(" + b.base.labels[i] + "), t(" + b.base.labels[j] + ")";
        }
      }
    r.add("ranges.commute", ok, w);
  }
  r.merge(validate_bimodule(b.coring.mod), "bimodule");
  r.merge(validate_coring(b.coring), "coring");
  check_compatibilities(r, b.total, b.coring, b.takeuchi());
  {
    // π(s(π(h))h') = π(hh') = π(t(π(h))h').
    Matrix id = Matrix::identity(b.total.field, b.total.dim);
    Matrix pm = b.counit() * b.total.mult;
    Matrix via_s = pm * Matrix::kron(b.src * b.counit(), id);
    Matrix via_t = pm * Matrix::kron(b.tgt * b.counit(), id);
    r.add("counit.product_via_source", via_s == pm);
    r.add("counit.product_via_target", via_t == pm);
  }
  r.add("counit.retracts_source",
        b.counit() * b.src == Matrix::identity(b.base.field, b.base.dim));
  r.add("counit.retracts_target",
        b.counit() * b.tgt == Matrix::identity(b.base.field, b.base.dim));
  return r;
}

LeftBialgebroid co_opposite(const LeftBialgebroid& b) {
  const Field& f = b.total.field;
  Matrix swap = tensor_permutation(f, {b.total.dim, b.total.dim}, {1, 0});
  return make_left_bialgebroid(b.total, opposite(b.base), b.tgt, b.src,
                               swap * b.coproduct(), b.counit());
}

RightBialgebroid opposite_bgd(const LeftBialgebroid& b) {
  return make_right_bialgebroid(opposite(b.total), b.base, b.tgt, b.src,
                                b.coproduct(), b.counit());
}

RightBialgebroid co_opposite(const RightBialgebroid& b) {
  const Field& f = b.total.field;
  Matrix swap = tensor_permutation(f, {b.total.dim, b.total.dim}, {1, 0});
  return make_right_bialgebroid(b.total, opposite(b.base), b.tgt, b.src,
                                swap * b.coproduct(), b.counit());
}

LeftBialgebroid opposite_bgd(const RightBialgebroid& b) {
  return make_left_bialgebroid(opposite(b.total), b.base, b.tgt, b.src,
                               b.coproduct(), b.counit());
}

}  // namespace hopfgal
