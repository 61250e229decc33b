#include "hopfgal/crossed.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "detail/unknown_system.hpp"
#include "hopfgal/errors.hpp"
#include "hopfgal/tensor.hpp"

namespace hopfgal {

namespace {

bool kills_relations(const Matrix& composite, const Subspace& rel) {
  for (std::size_t i = 0; i < rel.dim(); ++i)
    if (!vec_is_zero(composite.apply(rel.basis_vector(i)))) return false;
  return true;
}

Matrix relation_matrix(const Field& f, const Subspace& rel) {
  return Matrix::from_columns(f, rel.ambient_dim(), rel.dim(),
                              [&](std::size_t i) { return rel.basis_vector(i); });
}

// e_j ↦ v⊗e_j and e_j ↦ e_j⊗v.
Matrix insert_left(const Field& f, const Vec& v, std::size_t n) {
  return Matrix::from_columns(
      f, v.size() * n, n,
      [&](std::size_t j) { return vec_kron(f, v, vec_basis(n, j)); });
}

Matrix insert_right(const Field& f, std::size_t n, const Vec& v) {
  return Matrix::from_columns(
      f, n * v.size(), n,
      [&](std::size_t j) { return vec_kron(f, vec_basis(n, j), v); });
}

// Left-nested iterated coproduct H → H^⊗n, ambient representative.
Matrix iterated_coproduct(const LeftBialgebroid& b, std::size_t n) {
  const Field& f = b.total.field;
  Matrix res = Matrix::identity(f, b.total.dim);
  for (std::size_t k = 1; k < n; ++k)
    res = Matrix::kron(res, Matrix::identity(f, b.total.dim)) * b.coproduct();
  return res;
}

// h ↦ h·b as a map H → B.
Matrix acting_on(const MeasuredRing& m, const Vec& b) {
  return m.action * insert_right(m.field(), m.bgd.total.dim, b);
}

// Slices of a joint map on a tensor square along a basis of the first
// (respectively second) factor: first_slices[u] sends y ↦ F(e_u⊗y).
std::vector<Matrix> first_slices(const Matrix& joint, std::size_t d1,
                                 std::size_t d2) {
  std::vector<Matrix> out;
  out.reserve(d1);
  for (std::size_t u = 0; u < d1; ++u)
    out.push_back(Matrix::from_columns(
        joint.field(), joint.rows(), d2,
        [&](std::size_t j) { return joint.col(u * d2 + j); }));
  return out;
}

std::vector<Matrix> second_slices(const Matrix& joint, std::size_t d1,
                                  std::size_t d2) {
  std::vector<Matrix> out;
  out.reserve(d2);
  for (std::size_t v = 0; v < d2; ++v)
    out.push_back(Matrix::from_columns(
        joint.field(), joint.rows(), d1,
        [&](std::size_t j) { return joint.col(j * d2 + v); }));
  return out;
}

using Terms = std::vector<std::pair<std::size_t, Scalar>>;

Terms column_terms(const Matrix& m, std::size_t j) {
  Terms t;
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (!m.field().is_zero(m.at(r, j))) t.emplace_back(r, m.at(r, j));
  return t;
}

// Witness helper: name the basis tensor behind a flat column index.
std::function<std::string(std::size_t)> tensor_describer(
    std::vector<const std::vector<std::string>*> parts) {
  return [parts](std::size_t col) {
    std::vector<std::size_t> idx(parts.size());
    for (std::size_t i = parts.size(); i-- > 0;) {
      idx[i] = col % parts[i]->size();
      col /= parts[i]->size();
    }
    std::string s = "at (";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      s += (*parts[i])[idx[i]];
      if (i + 1 < parts.size()) s += ", ";
    }
    return s + ")";
  };
}

void add_eq(Report& r, const std::string& name, const Matrix& a, const Matrix& b,
            const std::function<std::string(std::size_t)>& describe) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    r.add(name, false, "shape mismatch");
    return;
  }
  bool ok = true;
  std::string w;
  for (std::size_t j = 0; j < a.cols() && ok; ++j)
    if (a.col(j) != b.col(j)) {
      ok = false;
      w = describe(j);
    }
  r.add(name, ok, w);
}

bool measured_shape_ok(const MeasuredRing& m) {
  return m.iota.rows() == m.ring.dim && m.iota.cols() == m.bgd.base.dim &&
         m.action.rows() == m.ring.dim &&
         m.action.cols() == m.bgd.total.dim * m.ring.dim;
}

bool cocycle_shape_ok(const CocycleData& c) {
  std::size_t dh = c.meas.bgd.total.dim;
  return measured_shape_ok(c.meas) && c.sigma.rows() == c.meas.ring.dim &&
         c.sigma.cols() == dh * dh;
}

// H⊗H balanced by (h·x)⊗k − h⊗(x·k) with x ranging over the target
// (respectively source) image of the base.
QuotientSpace twisted_square(const LeftBialgebroid& b, bool via_target) {
  const Algebra& h = b.total;
  std::vector<Matrix> r, l;
  for (std::size_t k = 0; k < b.base.dim; ++k) {
    Vec x = via_target ? b.tgt_of(b.base.basis(k)) : b.src_of(b.base.basis(k));
    r.push_back(h.right_mult(x));
    l.push_back(h.left_mult(x));
  }
  return multi_balanced_tensor(h.field, {h.dim, h.dim},
                               {FactorBalance{0, std::move(r), std::move(l)}});
}

// B⊗_L H balanced by (b·ι(l))⊗h − b⊗s(l)h (see the public crossed_carrier).
QuotientSpace carrier_of(const MeasuredRing& m) {
  return crossed_carrier(m.bgd, m.ring, m.iota);
}

Vec coords_or_throw(const Subspace& s, const Vec& v, const std::string& what) {
  std::optional<Vec> c = s.coordinates(v);
  if (!c) throw Error(what + " does not lie in the coinvariants");
  return *c;
}

Matrix to_coinv_coords(const Subspace& s, const Matrix& m, const std::string& what) {
  return Matrix::from_columns(m.field(), s.dim(), m.cols(), [&](std::size_t j) {
    return coords_or_throw(s, m.col(j), what);
  });
}

// ---------------------------------------------------------------------------
// Sparse evaluators for composites whose dense tensor form would be huge.
// Each walks the nonzero legs of the iterated coproducts column by column.
// ---------------------------------------------------------------------------

// [h₍₁₎·σ(k₍₁₎,m₍₁₎)]·σ(h₍₂₎,k₍₂₎m₍₂₎) = σ(h₍₁₎,k₍₁₎)·σ(h₍₂₎k₍₂₎,m).
bool cocycle_identity_ok(const CocycleData& c, std::size_t* bad_col) {
  const MeasuredRing& m = c.meas;
  const Algebra& h = m.bgd.total;
  const Algebra& b = m.ring;
  const Field& f = b.field;
  std::size_t dh = h.dim, db = b.dim;
  const Matrix& gam = m.bgd.coproduct();
  std::vector<Matrix> act = first_slices(m.action, dh, db);
  std::vector<Matrix> sig1 = first_slices(c.sigma, dh, dh);
  std::vector<Matrix> sig2 = second_slices(c.sigma, dh, dh);
  for (std::size_t ih = 0; ih < dh; ++ih) {
    Terms th = column_terms(gam, ih);
    for (std::size_t ik = 0; ik < dh; ++ik) {
      Terms tk = column_terms(gam, ik);
      for (std::size_t im = 0; im < dh; ++im) {
        Terms tm = column_terms(gam, im);
        Vec lhs = vec_zero(db), rhs = vec_zero(db);
        for (const auto& [ru, cu] : th) {
          std::size_t u1 = ru / dh, u2 = ru % dh;
          for (const auto& [rv, cv] : tk) {
            std::size_t v1 = rv / dh, v2 = rv % dh;
            Scalar cc = f.mul(cu, cv);
            rhs = vec_add(f, rhs,
                          vec_scale(f, cc,
                                    b.mul(c.sigma.col(u1 * dh + v1),
                                          sig2[im].apply(h.mult.col(u2 * dh + v2)))));
            for (const auto& [rw, cw] : tm) {
              std::size_t w1 = rw / dh, w2 = rw % dh;
              lhs = vec_add(
                  f, lhs,
                  vec_scale(f, f.mul(cc, cw),
                            b.mul(act[u1].apply(c.sigma.col(v1 * dh + w1)),
                                  sig1[u2].apply(h.mult.col(v2 * dh + w2)))));
            }
          }
        }
        if (lhs != rhs) {
          *bad_col = (ih * dh + ik) * dh + im;
          return false;
        }
      }
    }
  }
  return true;
}

// h·σ(k,m) = σ(h₍₁₎,k₍₁₎)·σ(h₍₂₎k₍₂₎,m₍₁₎)·σ̃(h₍₃₎,k₍₃₎m₍₂₎).
bool action_on_cocycle_ok(const CocycleData& c, const Matrix& si,
                          std::size_t* bad_col) {
  const MeasuredRing& m = c.meas;
  const Algebra& h = m.bgd.total;
  const Algebra& b = m.ring;
  const Field& f = b.field;
  std::size_t dh = h.dim, db = b.dim;
  Matrix gam3 = iterated_coproduct(m.bgd, 3);
  const Matrix& gam = m.bgd.coproduct();
  std::vector<Matrix> act = first_slices(m.action, dh, db);
  std::vector<Matrix> sig2 = second_slices(c.sigma, dh, dh);
  std::vector<Matrix> si1 = first_slices(si, dh, dh);
  for (std::size_t ih = 0; ih < dh; ++ih) {
    Terms th = column_terms(gam3, ih);
    for (std::size_t ik = 0; ik < dh; ++ik) {
      Terms tk = column_terms(gam3, ik);
      for (std::size_t im = 0; im < dh; ++im) {
        Terms tm = column_terms(gam, im);
        Vec lhs = act[ih].apply(c.sigma.col(ik * dh + im));
        Vec rhs = vec_zero(db);
        for (const auto& [ru, cu] : th) {
          std::size_t u3 = ru % dh, u2 = (ru / dh) % dh, u1 = ru / (dh * dh);
          for (const auto& [rv, cv] : tk) {
            std::size_t v3 = rv % dh, v2 = (rv / dh) % dh, v1 = rv / (dh * dh);
            Scalar cc = f.mul(cu, cv);
            for (const auto& [rw, cw] : tm) {
              std::size_t w1 = rw / dh, w2 = rw % dh;
              Vec val = b.mul(c.sigma.col(u1 * dh + v1),
                              sig2[w1].apply(h.mult.col(u2 * dh + v2)));
              val = b.mul(val, si1[u3].apply(h.mult.col(v3 * dh + w2)));
              rhs = vec_add(f, rhs, vec_scale(f, f.mul(cc, cw), val));
            }
          }
        }
        if (lhs != rhs) {
          *bad_col = (ih * dh + ik) * dh + im;
          return false;
        }
      }
    }
  }
  return true;
}

// h·σ̃(k,m) = σ(h₍₁₎,k₍₁₎m₍₁₎)·σ̃(h₍₂₎k₍₂₎,m₍₂₎)·σ̃(h₍₃₎,k₍₃₎).
bool action_on_inverse_ok(const CocycleData& c, const Matrix& si,
                          std::size_t* bad_col) {
  const MeasuredRing& m = c.meas;
  const Algebra& h = m.bgd.total;
  const Algebra& b = m.ring;
  const Field& f = b.field;
  std::size_t dh = h.dim, db = b.dim;
  Matrix gam3 = iterated_coproduct(m.bgd, 3);
  const Matrix& gam = m.bgd.coproduct();
  std::vector<Matrix> act = first_slices(m.action, dh, db);
  std::vector<Matrix> sig1 = first_slices(c.sigma, dh, dh);
  std::vector<Matrix> si2 = second_slices(si, dh, dh);
  for (std::size_t ih = 0; ih < dh; ++ih) {
    Terms th = column_terms(gam3, ih);
    for (std::size_t ik = 0; ik < dh; ++ik) {
      Terms tk = column_terms(gam3, ik);
      for (std::size_t im = 0; im < dh; ++im) {
        Terms tm = column_terms(gam, im);
        Vec lhs = act[ih].apply(si.col(ik * dh + im));
        Vec rhs = vec_zero(db);
        for (const auto& [ru, cu] : th) {
          std::size_t u3 = ru % dh, u2 = (ru / dh) % dh, u1 = ru / (dh * dh);
          for (const auto& [rv, cv] : tk) {
            std::size_t v3 = rv % dh, v2 = (rv / dh) % dh, v1 = rv / (dh * dh);
            Scalar cc = f.mul(cu, cv);
            for (const auto& [rw, cw] : tm) {
              std::size_t w1 = rw / dh, w2 = rw % dh;
              Vec val = b.mul(sig1[u1].apply(h.mult.col(v1 * dh + w1)),
                              si2[w2].apply(h.mult.col(u2 * dh + v2)));
              val = b.mul(val, si.col(u3 * dh + v3));
              rhs = vec_add(f, rhs, vec_scale(f, f.mul(cc, cw), val));
            }
          }
        }
        if (lhs != rhs) {
          *bad_col = (ih * dh + ik) * dh + im;
          return false;
        }
      }
    }
  }
  return true;
}

// Ambient product of B #_σ 𝓛 on (B⊗H)⊗(B⊗H):
//   (b⊗h)(b′⊗h′) = b (h₍₁₎·b′) σ(h₍₂₎,h′₍₁₎) ⊗ h₍₃₎h′₍₂₎.
Matrix crossed_ambient_product(const CocycleData& c) {
  const MeasuredRing& m = c.meas;
  const Algebra& h = m.bgd.total;
  const Algebra& b = m.ring;
  const Field& f = b.field;
  std::size_t dh = h.dim, db = b.dim, n = db * dh;
  Matrix gam3 = iterated_coproduct(m.bgd, 3);
  const Matrix& gam = m.bgd.coproduct();
  std::vector<Matrix> act = first_slices(m.action, dh, db);
  return Matrix::from_columns(f, n, n * n, [&](std::size_t col) {
    std::size_t right = col % n, left = col / n;
    std::size_t ib = left / dh, ihh = left % dh;
    std::size_t ib2 = right / dh, ih2 = right % dh;
    Vec out = vec_zero(n);
    Terms th = column_terms(gam3, ihh);
    Terms t2 = column_terms(gam, ih2);
    for (const auto& [ru, cu] : th) {
      std::size_t u3 = ru % dh, u2 = (ru / dh) % dh, u1 = ru / (dh * dh);
      Vec bx = b.mul(vec_basis(db, ib), act[u1].col(ib2));
      for (const auto& [rw, cw] : t2) {
        std::size_t w1 = rw / dh, w2 = rw % dh;
        Vec bval = b.mul(bx, c.sigma.col(u2 * dh + w1));
        out = vec_add(f, out,
                      vec_scale(f, f.mul(cu, cw),
                                vec_kron(f, bval, h.mult.col(u3 * dh + w2))));
      }
    }
    return out;
  });
}

// σ^χ(h,k) = χ(h₍₁₎)·(h₍₂₎·χ(k₍₁₎))·σ(h₍₃₎,k₍₂₎)·χ̄(h₍₄₎k₍₃₎).
Matrix gauge_cocycle(const CocycleData& c, const Matrix& chi,
                     const Matrix& chi_inv) {
  const MeasuredRing& m = c.meas;
  const Algebra& h = m.bgd.total;
  const Algebra& b = m.ring;
  const Field& f = b.field;
  std::size_t dh = h.dim, db = b.dim;
  Matrix gam4 = iterated_coproduct(m.bgd, 4);
  Matrix gam3 = iterated_coproduct(m.bgd, 3);
  std::vector<Matrix> act = first_slices(m.action, dh, db);
  return Matrix::from_columns(f, db, dh * dh, [&](std::size_t col) {
    std::size_t ih = col / dh, ik = col % dh;
    Vec out = vec_zero(db);
    for (const auto& [ru, cu] : column_terms(gam4, ih)) {
      std::size_t u4 = ru % dh, u3 = (ru / dh) % dh;
      std::size_t u2 = (ru / (dh * dh)) % dh, u1 = ru / (dh * dh * dh);
      for (const auto& [rv, cv] : column_terms(gam3, ik)) {
        std::size_t v3 = rv % dh, v2 = (rv / dh) % dh, v1 = rv / (dh * dh);
        Vec val = b.mul(chi.col(u1), act[u2].apply(chi.col(v1)));
        val = b.mul(val, c.sigma.col(u3 * dh + v2));
        val = b.mul(val, chi_inv.apply(h.mult.col(u4 * dh + v3)));
        out = vec_add(f, out, vec_scale(f, f.mul(cu, cv), val));
      }
    }
    return out;
  });
}

}  // namespace

// ---------------------------------------------------------------------------
// Measurings.
// ---------------------------------------------------------------------------

MeasuredRing make_measured_ring(LeftBialgebroid bgd, Algebra ring, Matrix iota,
                                Matrix action) {
  MeasuredRing m{std::move(bgd), std::move(ring), std::move(iota),
                 std::move(action)};
  if (!measured_shape_ok(m))
    throw DimensionError("measured ring: unit or action shape mismatch");
  return m;
}

Report validate_measuring(const MeasuredRing& m, const std::string& subject) {
  Report r;
  r.subject = subject;
  bool shape = measured_shape_ok(m);
  r.add("shape", shape, shape ? "" : "unit or action shape mismatch");
  if (!shape) return r;

  const Algebra& h = m.bgd.total;
  const Algebra& b = m.ring;
  const Field& f = b.field;
  std::size_t dh = h.dim, db = b.dim, dl = m.bgd.base.dim;
  Matrix idb = Matrix::identity(f, db);

  r.merge(validate_algebra_map(m.bgd.base, b, m.iota), "unit");

  add_eq(r, "acts_on_unit", m.action * insert_right(f, dh, b.unit),
         m.iota * m.bgd.counit(), tensor_describer({&h.labels}));

  {
    bool ok = true;
    std::string w;
    for (std::size_t k = 0; k < dl && ok; ++k) {
      Matrix lhs = m.action *
                   Matrix::kron(h.left_mult(m.bgd.src_of(m.bgd.base.basis(k))), idb);
      Matrix rhs = b.left_mult(m.iota.col(k)) * m.action;
      if (lhs != rhs) {
        ok = false;
        w = "base element " + m.bgd.base.labels[k];
      }
    }
    r.add("source_action", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (std::size_t k = 0; k < dl && ok; ++k) {
      Matrix lhs = m.action *
                   Matrix::kron(h.left_mult(m.bgd.tgt_of(m.bgd.base.basis(k))), idb);
      Matrix rhs = b.right_mult(m.iota.col(k)) * m.action;
      if (lhs != rhs) {
        ok = false;
        w = "base element " + m.bgd.base.labels[k];
      }
    }
    r.add("target_action", ok, w);
  }

  {
    Matrix lhs = m.action * Matrix::kron(Matrix::identity(f, dh), b.mult);
    Matrix rhs = b.mult * Matrix::kron(m.action, m.action) *
                 tensor_permutation(f, {dh, dh, db, db}, {0, 2, 1, 3}) *
                 Matrix::kron(m.bgd.coproduct(), Matrix::identity(f, db * db));
    add_eq(r, "multiplicative", lhs, rhs,
           tensor_describer({&h.labels, &b.labels, &b.labels}));
  }
  return r;
}

Report validate_module_algebra(const MeasuredRing& m, const std::string& subject) {
  Report r = validate_measuring(m, subject);
  if (!r.items.empty() && !r.items.front().pass) return r;

  const Algebra& h = m.bgd.total;
  const Algebra& b = m.ring;
  const Field& f = b.field;
  std::size_t dh = h.dim, db = b.dim;

  add_eq(r, "unit_acts", m.action * insert_left(f, h.unit, db),
         Matrix::identity(f, db), tensor_describer({&b.labels}));
  add_eq(r, "associative",
         m.action * Matrix::kron(Matrix::identity(f, dh), m.action),
         m.action * Matrix::kron(h.mult, Matrix::identity(f, db)),
         tensor_describer({&h.labels, &h.labels, &b.labels}));
  add_eq(r, "extends_base",
         m.action * Matrix::kron(Matrix::identity(f, dh), m.iota),
         m.iota * m.bgd.counit() * h.mult *
             Matrix::kron(Matrix::identity(f, dh), m.bgd.src),
         tensor_describer({&h.labels, &m.bgd.base.labels}));
  return r;
}

// ---------------------------------------------------------------------------
// Cocycles.
// ---------------------------------------------------------------------------

CocycleData make_cocycle_data(MeasuredRing meas, Matrix sigma) {
  CocycleData c{std::move(meas), std::move(sigma)};
  if (!cocycle_shape_ok(c)) throw DimensionError("cocycle: shape mismatch");
  return c;
}

Matrix trivial_cocycle(const MeasuredRing& m) {
  return m.iota * m.bgd.counit() * m.bgd.total.mult;
}

Report validate_cocycle(const CocycleData& c, const std::string& subject) {
  Report r;
  r.subject = subject;
  bool shape = cocycle_shape_ok(c);
  r.add("shape", shape, shape ? "" : "cocycle shape mismatch");
  if (!shape) return r;

  const MeasuredRing& m = c.meas;
  const Algebra& h = m.bgd.total;
  const Algebra& b = m.ring;
  const Field& f = b.field;
  std::size_t dh = h.dim, dl = m.bgd.base.dim;
  const Matrix& gam = m.bgd.coproduct();
  Matrix idh = Matrix::identity(f, dh);
  Matrix unit_pi = m.iota * m.bgd.counit();
  auto pair_desc = tensor_describer({&h.labels, &h.labels});

  {
    QuotientSpace qt = twisted_square(m.bgd, true);
    bool ok = kills_relations(c.sigma, qt.relations());
    r.add("balanced", ok, ok ? "" : "a target-twisted balance relation survives");
  }

  {
    bool oks = true, okt = true;
    std::string ws, wt;
    for (std::size_t k = 0; k < dl; ++k) {
      Matrix sl = h.left_mult(m.bgd.src_of(m.bgd.base.basis(k)));
      Matrix tl = h.left_mult(m.bgd.tgt_of(m.bgd.base.basis(k)));
      if (oks && c.sigma * Matrix::kron(sl, idh) !=
                     b.left_mult(m.iota.col(k)) * c.sigma) {
        oks = false;
        ws = "base element " + m.bgd.base.labels[k];
      }
      if (okt && c.sigma * Matrix::kron(tl, idh) !=
                     b.right_mult(m.iota.col(k)) * c.sigma) {
        okt = false;
        wt = "base element " + m.bgd.base.labels[k];
      }
    }
    r.add("source_action", oks, ws);
    r.add("target_action", okt, wt);
  }

  {
    bool ok = true;
    std::string w;
    for (std::size_t k = 0; k < dl && ok; ++k) {
      Matrix lhs = b.mult * Matrix::kron(acting_on(m, m.iota.col(k)), c.sigma) *
                   Matrix::kron(gam, idh);
      Matrix rhs =
          c.sigma *
          Matrix::kron(idh, h.left_mult(m.bgd.src_of(m.bgd.base.basis(k))));
      if (lhs != rhs) {
        ok = false;
        w = "base element " + m.bgd.base.labels[k];
      }
    }
    r.add("mixed_action", ok, w);
  }

  add_eq(r, "normalized_left", c.sigma * insert_left(f, h.unit, dh), unit_pi,
         tensor_describer({&h.labels}));
  add_eq(r, "normalized_right", c.sigma * insert_right(f, dh, h.unit), unit_pi,
         tensor_describer({&h.labels}));

  {
    std::size_t bad = 0;
    bool ok = cocycle_identity_ok(c, &bad);
    r.add("cocycle_identity", ok,
          ok ? "" : tensor_describer({&h.labels, &h.labels, &h.labels})(bad));
  }

  {
    Matrix absorb = b.mult * Matrix::kron(c.sigma, unit_pi * h.mult) *
                    tensor_permutation(f, {dh, dh, dh, dh}, {0, 2, 1, 3}) *
                    Matrix::kron(gam, gam);
    add_eq(r, "counit_absorb", absorb, c.sigma, pair_desc);
  }
  return r;
}

Report validate_twisted_module(const CocycleData& c, const std::string& subject) {
  Report r;
  r.subject = subject;
  bool shape = cocycle_shape_ok(c);
  r.add("shape", shape, shape ? "" : "cocycle shape mismatch");
  if (!shape) return r;

  const MeasuredRing& m = c.meas;
  const Algebra& h = m.bgd.total;
  const Algebra& b = m.ring;
  const Field& f = b.field;
  std::size_t dh = h.dim, db = b.dim;
  const Matrix& gam = m.bgd.coproduct();
  Matrix idb = Matrix::identity(f, db);

  add_eq(r, "unit_acts", m.action * insert_left(f, h.unit, db), idb,
         tensor_describer({&b.labels}));

  {
    Matrix expand = Matrix::kron(gam, Matrix::kron(gam, idb));
    Matrix lhs = b.mult *
                 Matrix::kron(m.action * Matrix::kron(Matrix::identity(f, dh),
                                                      m.action),
                              c.sigma) *
                 tensor_permutation(f, {dh, dh, dh, dh, db}, {0, 2, 4, 1, 3}) *
                 expand;
    Matrix rhs = b.mult *
                 Matrix::kron(c.sigma, m.action * Matrix::kron(h.mult, idb)) *
                 tensor_permutation(f, {dh, dh, dh, dh, db}, {0, 2, 1, 3, 4}) *
                 expand;
    add_eq(r, "twisted_associative", lhs, rhs,
           tensor_describer({&h.labels, &h.labels, &b.labels}));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Cocycle inverses.
// ---------------------------------------------------------------------------

std::optional<Matrix> solve_cocycle_inverse(const CocycleData& c) {
  if (!cocycle_shape_ok(c)) throw DimensionError("cocycle: shape mismatch");
  const MeasuredRing& m = c.meas;
  const Algebra& h = m.bgd.total;
  const Algebra& b = m.ring;
  const Field& f = b.field;
  std::size_t dh = h.dim, db = b.dim, dl = m.bgd.base.dim;
  const Matrix& gam = m.bgd.coproduct();
  Matrix idh = Matrix::identity(f, dh);

  detail::UnknownSystem sys(f, db, dh * dh);

  QuotientSpace qs = twisted_square(m.bgd, false);
  for (std::size_t i = 0; i < qs.relations().dim(); ++i)
    sys.add_kill(qs.relations().basis_vector(i));

  for (std::size_t k = 0; k < dl; ++k) {
    Matrix sl = h.left_mult(m.bgd.src_of(m.bgd.base.basis(k)));
    Matrix tl = h.left_mult(m.bgd.tgt_of(m.bgd.base.basis(k)));
    sys.add_intertwine(Matrix::kron(sl, idh), b.left_mult(m.iota.col(k)));
    sys.add_intertwine(Matrix::kron(tl, idh), b.right_mult(m.iota.col(k)));
  }

  auto collect = [&](std::vector<std::optional<Matrix>>& acc) {
    std::vector<std::pair<std::size_t, Matrix>> terms;
    for (std::size_t q = 0; q < acc.size(); ++q)
      if (acc[q]) terms.emplace_back(q, std::move(*acc[q]));
    return terms;
  };
  auto accumulate = [&](std::vector<std::optional<Matrix>>& acc, std::size_t q,
                        const Matrix& add) {
    if (acc[q])
      *acc[q] = *acc[q] + add;
    else
      acc[q] = add;
  };

  // Mixed law: σ̃(h₍₁₎,k)·(h₍₂₎·ι(l)) − σ̃(h, t(l)k) = 0.
  for (std::size_t k = 0; k < dl; ++k) {
    Matrix ml = acting_on(m, m.iota.col(k));
    Matrix tl = h.left_mult(m.bgd.tgt_of(m.bgd.base.basis(k)));
    for (std::size_t col = 0; col < dh * dh; ++col) {
      std::size_t ih = col / dh, ik = col % dh;
      std::vector<std::optional<Matrix>> acc(dh * dh);
      for (const auto& [ru, cu] : column_terms(gam, ih)) {
        std::size_t u = ru / dh, v = ru % dh;
        accumulate(acc, u * dh + ik, b.right_mult(ml.col(v)).scaled(cu));
      }
      for (std::size_t w = 0; w < dh; ++w) {
        if (f.is_zero(tl.at(w, ik))) continue;
        accumulate(acc, ih * dh + w,
                   Matrix::identity(f, db).scaled(f.neg(tl.at(w, ik))));
      }
      sys.add_block(collect(acc), vec_zero(db));
    }
  }

  // σ(h₍₁₎,k₍₁₎)·σ̃(h₍₂₎,k₍₂₎) = h·(k·1_B).
  Matrix on_unit = acting_on(m, b.unit);
  Matrix rhs1 = m.action * Matrix::kron(idh, on_unit);
  for (std::size_t col = 0; col < dh * dh; ++col) {
    std::size_t ih = col / dh, ik = col % dh;
    std::vector<std::optional<Matrix>> acc(dh * dh);
    for (const auto& [ru, cu] : column_terms(gam, ih)) {
      std::size_t u1 = ru / dh, u2 = ru % dh;
      for (const auto& [rv, cv] : column_terms(gam, ik)) {
        std::size_t v1 = rv / dh, v2 = rv % dh;
        accumulate(acc, u2 * dh + v2,
                   b.left_mult(c.sigma.col(u1 * dh + v1)).scaled(f.mul(cu, cv)));
      }
    }
    sys.add_block(collect(acc), rhs1.col(col));
  }

  // σ̃(h₍₁₎,k₍₁₎)·σ(h₍₂₎,k₍₂₎) = (hk)·1_B.
  Matrix rhs2 = on_unit * h.mult;
  for (std::size_t col = 0; col < dh * dh; ++col) {
    std::size_t ih = col / dh, ik = col % dh;
    std::vector<std::optional<Matrix>> acc(dh * dh);
    for (const auto& [ru, cu] : column_terms(gam, ih)) {
      std::size_t u1 = ru / dh, u2 = ru % dh;
      for (const auto& [rv, cv] : column_terms(gam, ik)) {
        std::size_t v1 = rv / dh, v2 = rv % dh;
        accumulate(acc, u1 * dh + v1,
                   b.right_mult(c.sigma.col(u2 * dh + v2)).scaled(f.mul(cu, cv)));
      }
    }
    sys.add_block(collect(acc), rhs2.col(col));
  }

  return sys.solve();
}

Report verify_cocycle_inverse(const CocycleData& c, const Matrix& sigma_inv,
                              const std::string& subject) {
  Report r;
  r.subject = subject;
  const MeasuredRing& m = c.meas;
  const Algebra& h = m.bgd.total;
  const Algebra& b = m.ring;
  const Field& f = b.field;
  std::size_t dh = h.dim, dl = m.bgd.base.dim;
  bool shape = cocycle_shape_ok(c) && sigma_inv.rows() == b.dim &&
               sigma_inv.cols() == dh * dh;
  r.add("shape", shape, shape ? "" : "inverse shape mismatch");
  if (!shape) return r;

  const Matrix& gam = m.bgd.coproduct();
  Matrix idh = Matrix::identity(f, dh);
  Matrix unit_pi = m.iota * m.bgd.counit();
  Matrix p4 = tensor_permutation(f, {dh, dh, dh, dh}, {0, 2, 1, 3});
  Matrix gam2 = Matrix::kron(gam, gam);
  auto pair_desc = tensor_describer({&h.labels, &h.labels});
  auto triple_desc = tensor_describer({&h.labels, &h.labels, &h.labels});

  {
    QuotientSpace qs = twisted_square(m.bgd, false);
    bool ok = kills_relations(sigma_inv, qs.relations());
    r.add("balanced", ok, ok ? "" : "a source-twisted balance relation survives");
  }

  {
    bool oks = true, okt = true;
    std::string ws, wt;
    for (std::size_t k = 0; k < dl; ++k) {
      Matrix sl = h.left_mult(m.bgd.src_of(m.bgd.base.basis(k)));
      Matrix tl = h.left_mult(m.bgd.tgt_of(m.bgd.base.basis(k)));
      if (oks && sigma_inv * Matrix::kron(sl, idh) !=
                     b.left_mult(m.iota.col(k)) * sigma_inv) {
        oks = false;
        ws = "base element " + m.bgd.base.labels[k];
      }
      if (okt && sigma_inv * Matrix::kron(tl, idh) !=
                     b.right_mult(m.iota.col(k)) * sigma_inv) {
        okt = false;
        wt = "base element " + m.bgd.base.labels[k];
      }
    }
    r.add("source_action", oks, ws);
    r.add("target_action", okt, wt);
  }

  {
    bool ok = true;
    std::string w;
    Matrix p3 = tensor_permutation(f, {dh, dh, dh}, {0, 2, 1});
    for (std::size_t k = 0; k < dl && ok; ++k) {
      Matrix lhs = b.mult *
                   Matrix::kron(sigma_inv, acting_on(m, m.iota.col(k))) * p3 *
                   Matrix::kron(gam, idh);
      Matrix rhs =
          sigma_inv *
          Matrix::kron(idh, h.left_mult(m.bgd.tgt_of(m.bgd.base.basis(k))));
      if (lhs != rhs) {
        ok = false;
        w = "base element " + m.bgd.base.labels[k];
      }
    }
    r.add("mixed_action", ok, w);
  }

  Matrix on_unit = acting_on(m, b.unit);
  add_eq(r, "inverse_left",
         b.mult * Matrix::kron(c.sigma, sigma_inv) * p4 * gam2,
         m.action * Matrix::kron(idh, on_unit), pair_desc);
  add_eq(r, "inverse_right",
         b.mult * Matrix::kron(sigma_inv, c.sigma) * p4 * gam2,
         on_unit * h.mult, pair_desc);

  add_eq(r, "normalized_left", sigma_inv * insert_left(f, h.unit, dh), unit_pi,
         tensor_describer({&h.labels}));
  add_eq(r, "normalized_right", sigma_inv * insert_right(f, dh, h.unit),
         unit_pi, tensor_describer({&h.labels}));

  add_eq(r, "counit_absorb",
         b.mult * Matrix::kron(unit_pi * h.mult, sigma_inv) * p4 * gam2,
         sigma_inv, pair_desc);
  add_eq(r, "action_absorb",
         b.mult *
             Matrix::kron(sigma_inv, m.action * Matrix::kron(idh, on_unit)) *
             p4 * gam2,
         sigma_inv, pair_desc);

  {
    std::size_t bad = 0;
    bool ok = action_on_cocycle_ok(c, sigma_inv, &bad);
    r.add("action_on_cocycle", ok, ok ? "" : triple_desc(bad));
  }
  {
    std::size_t bad = 0;
    bool ok = action_on_inverse_ok(c, sigma_inv, &bad);
    r.add("action_on_inverse", ok, ok ? "" : triple_desc(bad));
  }
  return r;
}

// ---------------------------------------------------------------------------
// The crossed product algebra.
// ---------------------------------------------------------------------------

QuotientSpace crossed_carrier(const LeftBialgebroid& bgd, const Algebra& ring,
                              const Matrix& iota) {
  if (iota.rows() != ring.dim || iota.cols() != bgd.base.dim)
    throw DimensionError("base embedding: shape mismatch");
  std::vector<Matrix> r, l;
  for (std::size_t k = 0; k < bgd.base.dim; ++k) {
    r.push_back(ring.right_mult(iota.col(k)));
    l.push_back(bgd.total.left_mult(bgd.src_of(bgd.base.basis(k))));
  }
  return multi_balanced_tensor(ring.field, {ring.dim, bgd.total.dim},
                               {FactorBalance{0, std::move(r), std::move(l)}});
}

CrossedProduct build_crossed_product(const CocycleData& c) {
  if (!cocycle_shape_ok(c)) throw DimensionError("cocycle: shape mismatch");
  const MeasuredRing& m = c.meas;
  const Algebra& h = m.bgd.total;
  const Algebra& b = m.ring;
  const Field& f = b.field;
  std::size_t dh = h.dim, db = b.dim, n = db * dh;

  QuotientSpace q = carrier_of(m);
  Matrix amb = crossed_ambient_product(c);

  Report structure;
  structure.subject = "crossed product";
  Matrix pa = q.proj() * amb;
  Matrix relm = relation_matrix(f, q.relations());
  bool dleft = (pa * Matrix::kron(relm, Matrix::identity(f, n))).is_zero();
  bool dright = (pa * Matrix::kron(Matrix::identity(f, n), relm)).is_zero();
  structure.add("product.descends_left", dleft,
                dleft ? "" : "product does not kill a left-slot balance relation");
  structure.add("product.descends_right", dright,
                dright ? "" : "product does not kill a right-slot balance relation");

  Algebra alg(f, q.dim());
  alg.unit = q.proj().apply(vec_kron(f, b.unit, h.unit));
  alg.mult = pa * Matrix::kron(q.section(), q.section());
  structure.merge(validate_algebra(alg, "crossed product"), "algebra");

  Matrix embed_ring =
      q.proj() * Matrix::from_columns(f, n, db, [&](std::size_t i) {
        return vec_kron(f, vec_basis(db, i), h.unit);
      });
  Matrix embed_total =
      q.proj() * Matrix::from_columns(f, n, dh, [&](std::size_t i) {
        return vec_kron(f, b.unit, vec_basis(dh, i));
      });
  structure.merge(validate_algebra_map(b, alg, embed_ring), "ring_embed");

  return CrossedProduct{c,
                        std::move(q),
                        std::move(alg),
                        std::move(embed_ring),
                        std::move(embed_total),
                        std::move(structure)};
}

CrossedProduct smash_product(const MeasuredRing& m) {
  return build_crossed_product(make_cocycle_data(m, trivial_cocycle(m)));
}

// ---------------------------------------------------------------------------
// Crossed products over Hopf algebroids.
// ---------------------------------------------------------------------------

ComoduleAlgebra crossed_comodule_algebra(const HopfAlgebroid& h,
                                         const CrossedProduct& cp) {
  const Field& f = cp.field();
  std::size_t dh = h.total().dim, db = cp.data.meas.ring.dim;
  if (cp.data.meas.bgd.total.dim != dh ||
      cp.data.meas.bgd.base.dim != h.left.base.dim)
    throw BindingError("crossed product does not live over this Hopf algebroid");

  const QuotientSpace& q = cp.carrier;
  Matrix idb = Matrix::identity(f, db);
  Matrix idh = Matrix::identity(f, dh);

  Matrix eta_r = cp.embed_total * h.right.src;
  std::vector<Matrix> act_l;
  for (std::size_t k = 0; k < h.left.base.dim; ++k)
    act_l.push_back(
        q.proj() *
        Matrix::kron(idb,
                     h.total().left_mult(h.left.tgt_of(h.left.base.basis(k)))) *
        q.section());
  Matrix rho_r = Matrix::kron(q.proj(), idh) *
                 Matrix::kron(idb, h.right.coproduct()) * q.section();
  Matrix rho_l = Matrix::kron(q.proj(), idh) *
                 Matrix::kron(idb, h.left.coproduct()) * q.section();
  return make_comodule_algebra(h, cp.algebra, std::move(eta_r),
                               std::move(act_l), rho_r, rho_l);
}

CleftExtension cleft_from_crossed(const HopfAlgebroid& h,
                                  const CrossedProduct& cp,
                                  const Matrix& sigma_inv) {
  const Field& f = cp.field();
  std::size_t dh = h.total().dim;
  if (sigma_inv.rows() != cp.data.meas.ring.dim ||
      sigma_inv.cols() != dh * dh)
    throw DimensionError("cocycle inverse: shape mismatch");
  ComoduleAlgebra ca = crossed_comodule_algebra(h, cp);
  Matrix eta_l = cp.embed_ring * cp.data.meas.iota;
  const Matrix& gam_l = h.left.coproduct();
  Matrix j_inv = cp.carrier.proj() *
                 Matrix::kron(sigma_inv, Matrix::identity(f, dh)) *
                 tensor_permutation(f, {dh, dh, dh}, {0, 2, 1}) *
                 Matrix::kron(gam_l * h.antipode, Matrix::identity(f, dh)) *
                 gam_l;
  return make_cleft_extension(std::move(ca), std::move(eta_l), cp.embed_total,
                              std::move(j_inv));
}

ExtractedCrossed crossed_from_cleft(const CleftExtension& c) {
  const HopfAlgebroid& h = c.hopf();
  const Algebra& a = c.alg.alg;
  const Field& f = c.field();
  std::size_t dh = h.total().dim, dl = h.left.base.dim;

  if (c.j.apply(h.total().unit) != a.unit)
    throw Error("crossed-product extraction requires a normalized cleaving map");
  if (!c.alg.coinv_alg)
    throw Error("coinvariants of the extension do not form an algebra");
  const Algebra& b = *c.alg.coinv_alg;
  std::size_t nb = b.dim;
  const Matrix& emb = c.alg.coinv_embed;
  const Matrix& gam_r = h.right.coproduct();
  const Algebra& ht = h.total();

  Matrix iota = Matrix::from_columns(f, nb, dl, [&](std::size_t k) {
    return coords_or_throw(c.alg.coinv, c.eta_l.col(k), "ring unit value");
  });

  Matrix act_amb = a.mult *
                   Matrix::kron(a.mult * Matrix::kron(c.j, emb), c.j_inv) *
                   tensor_permutation(f, {dh, dh, nb}, {0, 2, 1}) *
                   Matrix::kron(gam_r, Matrix::identity(f, nb));
  Matrix action = to_coinv_coords(c.alg.coinv, act_amb, "measuring value");

  Matrix p4 = tensor_permutation(f, {dh, dh, dh, dh}, {0, 2, 1, 3});
  Matrix gam2 = Matrix::kron(gam_r, gam_r);
  Matrix sig_amb = a.mult *
                   Matrix::kron(a.mult * Matrix::kron(c.j, c.j),
                                c.j_inv * ht.mult) *
                   p4 * gam2;
  Matrix sigma = to_coinv_coords(c.alg.coinv, sig_amb, "cocycle value");

  Matrix sinv_amb = a.mult *
                    Matrix::kron(c.j * ht.mult,
                                 a.mult * Matrix::kron(c.j_inv, c.j_inv)) *
                    tensor_permutation(f, {dh, dh, dh, dh}, {0, 2, 3, 1}) *
                    gam2;
  Matrix sigma_inv = to_coinv_coords(c.alg.coinv, sinv_amb, "cocycle inverse value");

  MeasuredRing meas = make_measured_ring(h.left, b, std::move(iota),
                                         std::move(action));
  CocycleData data = make_cocycle_data(std::move(meas), std::move(sigma));
  CrossedProduct cp = build_crossed_product(data);

  Matrix nu_amb = a.mult * Matrix::kron(emb, c.j);
  Matrix nu = nu_amb * cp.carrier.section();

  Report checks;
  checks.subject = "crossed extraction";
  checks.merge(validate_measuring(data.meas), "measuring");
  checks.merge(validate_cocycle(data), "cocycle");
  checks.merge(validate_twisted_module(data), "twisted");
  checks.merge(verify_cocycle_inverse(data, sigma_inv), "inverse");
  checks.merge(cp.structure, "product");

  bool wd = (nu_amb * relation_matrix(f, cp.carrier.relations())).is_zero();
  checks.add("iso.well_defined", wd,
             wd ? "" : "comparison map does not kill a balance relation");
  checks.add("iso.matches_ring", nu * cp.embed_ring == emb,
             "comparison map moves a coinvariant");
  checks.add("iso.matches_cleaving", nu * cp.embed_total == c.j,
             "comparison map moves the cleaving map");
  std::optional<Matrix> nu_inv;
  if (nu.rows() == nu.cols()) nu_inv = inverse(nu);
  checks.add("iso.bijective", nu_inv.has_value(),
             nu_inv ? "" : "comparison map is not invertible");
  checks.merge(validate_algebra_map(cp.algebra, a, nu), "iso");
  {
    bool ok = true;
    std::string w;
    for (std::size_t i = 0; i < nb && ok; ++i)
      if (nu * cp.algebra.left_mult(cp.embed_ring.col(i)) !=
          a.left_mult(emb.col(i)) * nu) {
        ok = false;
        w = "coinvariant " + b.labels[i];
      }
    checks.add("iso.left_linear", ok, w);
  }
  {
    const QuotientSpace& prod = c.alg.com.com_r.product;
    Matrix rho_sharp = Matrix::kron(cp.carrier.proj(), Matrix::identity(f, dh)) *
                       Matrix::kron(Matrix::identity(f, nb), gam_r) *
                       cp.carrier.section();
    Matrix lhs = prod.proj() * (c.alg.com.com_r.coaction * nu);
    Matrix rhs = prod.proj() *
                 (Matrix::kron(nu, Matrix::identity(f, dh)) * rho_sharp);
    checks.add("iso.colinear", lhs == rhs,
               lhs == rhs ? "" : "comparison map is not colinear");
  }

  return ExtractedCrossed{std::move(cp), std::move(sigma_inv), std::move(nu),
                          std::move(checks)};
}

CarrierExtraction extract_measuring_cocycle(const LeftBialgebroid& bgd,
                                            const Algebra& ring,
                                            const Matrix& iota,
                                            const Algebra& carrier_algebra) {
  const Algebra& h = bgd.total;
  const Algebra& b = ring;
  const Field& f = b.field;
  std::size_t dh = h.dim, db = b.dim, n = db * dh;
  QuotientSpace q = crossed_carrier(bgd, ring, iota);
  if (carrier_algebra.dim != q.dim() || carrier_algebra.field != f)
    throw DimensionError(
        "carrier algebra does not live on the balanced carrier");

  Report checks;
  checks.subject = "carrier extraction";

  Matrix jr = q.proj() * Matrix::from_columns(f, n, db, [&](std::size_t i) {
                return vec_kron(f, vec_basis(db, i), h.unit);
              });
  Matrix jt = q.proj() * Matrix::from_columns(f, n, dh, [&](std::size_t i) {
                return vec_kron(f, b.unit, vec_basis(dh, i));
              });

  checks.add("unit",
             carrier_algebra.unit == q.proj().apply(vec_kron(f, b.unit, h.unit)),
             "unit is not 1⊗1");
  {
    bool ok = true;
    std::string w;
    Matrix idh = Matrix::identity(f, dh);
    for (std::size_t i = 0; i < db && ok; ++i)
      if (carrier_algebra.left_mult(jr.col(i)) !=
          q.proj() * Matrix::kron(b.left_mult(b.basis(i)), idh) * q.section()) {
        ok = false;
        w = "ring element " + b.labels[i];
      }
    checks.add("left_linear", ok, w);
  }

  Matrix collapse =
      b.mult * Matrix::kron(Matrix::identity(f, db), iota * bgd.counit()) *
      q.section();
  Matrix action = Matrix::from_columns(f, db, dh * db, [&](std::size_t col) {
    return collapse.apply(
        carrier_algebra.mul(jt.col(col / db), jr.col(col % db)));
  });
  Matrix sigma = Matrix::from_columns(f, db, dh * dh, [&](std::size_t col) {
    return collapse.apply(
        carrier_algebra.mul(jt.col(col / dh), jt.col(col % dh)));
  });

  CocycleData data = make_cocycle_data(
      make_measured_ring(bgd, ring, iota, std::move(action)),
      std::move(sigma));
  checks.merge(validate_measuring(data.meas), "measuring");
  checks.merge(validate_cocycle(data), "cocycle");
  checks.merge(validate_twisted_module(data), "twisted");

  CrossedProduct rebuilt = build_crossed_product(data);
  checks.merge(rebuilt.structure, "product");
  bool rt = rebuilt.algebra.mult == carrier_algebra.mult &&
            rebuilt.algebra.unit == carrier_algebra.unit;
  checks.add("round_trip", rt,
             rt ? "" : "rebuilt crossed product differs from the given algebra");
  return CarrierExtraction{std::move(data), std::move(rebuilt),
                           std::move(checks)};
}

// ---------------------------------------------------------------------------
// Gauge transformations.
// ---------------------------------------------------------------------------

namespace {

// Convolution inverse of χ : H → B over the ring unit ι : L → B — the system
// behind solve_gauge_inverse, independent of any action on B.
std::optional<Matrix> solve_conv_inverse(const LeftBialgebroid& bgd,
                                         const Algebra& b, const Matrix& iota,
                                         const Matrix& chi) {
  const Algebra& h = bgd.total;
  const Field& f = b.field;
  std::size_t dh = h.dim, db = b.dim, dl = bgd.base.dim;
  const Matrix& gam = bgd.coproduct();

  detail::UnknownSystem sys(f, db, dh);
  for (std::size_t k = 0; k < dl; ++k) {
    sys.add_intertwine(h.left_mult(bgd.src_of(bgd.base.basis(k))),
                       b.left_mult(iota.col(k)));
    sys.add_intertwine(h.left_mult(bgd.tgt_of(bgd.base.basis(k))),
                       b.right_mult(iota.col(k)));
  }
  Matrix unit_pi = iota * bgd.counit();
  for (std::size_t col = 0; col < dh; ++col) {
    std::vector<std::optional<Matrix>> accl(dh), accr(dh);
    for (const auto& [ru, cu] : column_terms(gam, col)) {
      std::size_t u = ru / dh, v = ru % dh;
      Matrix addl = b.left_mult(chi.col(u)).scaled(cu);
      if (accl[v])
        *accl[v] = *accl[v] + addl;
      else
        accl[v] = std::move(addl);
      Matrix addr = b.right_mult(chi.col(v)).scaled(cu);
      if (accr[u])
        *accr[u] = *accr[u] + addr;
      else
        accr[u] = std::move(addr);
    }
    std::vector<std::pair<std::size_t, Matrix>> tl, tr;
    for (std::size_t q = 0; q < dh; ++q) {
      if (accl[q]) tl.emplace_back(q, std::move(*accl[q]));
      if (accr[q]) tr.emplace_back(q, std::move(*accr[q]));
    }
    sys.add_block(tl, unit_pi.col(col));
    sys.add_block(tr, unit_pi.col(col));
  }
  return sys.solve();
}

}  // namespace

std::optional<Matrix> solve_gauge_inverse(const MeasuredRing& m,
                                          const Matrix& chi) {
  if (!measured_shape_ok(m) || chi.rows() != m.ring.dim ||
      chi.cols() != m.bgd.total.dim)
    throw DimensionError("gauge map: shape mismatch");
  return solve_conv_inverse(m.bgd, m.ring, m.iota, chi);
}

Report validate_gauge_map(const MeasuredRing& m, const Matrix& chi,
                          const Matrix& chi_inv, const std::string& subject) {
  Report r;
  r.subject = subject;
  const Algebra& h = m.bgd.total;
  const Algebra& b = m.ring;
  const Field& f = b.field;
  std::size_t dh = h.dim, dl = m.bgd.base.dim;
  bool shape = measured_shape_ok(m) && chi.rows() == b.dim &&
               chi.cols() == dh && chi_inv.rows() == b.dim &&
               chi_inv.cols() == dh;
  r.add("shape", shape, shape ? "" : "gauge map shape mismatch");
  if (!shape) return r;

  const Matrix& gam = m.bgd.coproduct();
  Matrix unit_pi = m.iota * m.bgd.counit();
  auto bilinear = [&](const Matrix& x, const std::string& prefix) {
    bool oks = true, okt = true;
    std::string ws, wt;
    for (std::size_t k = 0; k < dl; ++k) {
      Matrix sl = h.left_mult(m.bgd.src_of(m.bgd.base.basis(k)));
      Matrix tl = h.left_mult(m.bgd.tgt_of(m.bgd.base.basis(k)));
      if (oks && x * sl != b.left_mult(m.iota.col(k)) * x) {
        oks = false;
        ws = "base element " + m.bgd.base.labels[k];
      }
      if (okt && x * tl != b.right_mult(m.iota.col(k)) * x) {
        okt = false;
        wt = "base element " + m.bgd.base.labels[k];
      }
    }
    r.add(prefix + "source_linear", oks, ws);
    r.add(prefix + "target_linear", okt, wt);
  };
  bilinear(chi, "");
  bilinear(chi_inv, "inverse.");

  auto h_desc = tensor_describer({&h.labels});
  add_eq(r, "inverse_left", b.mult * Matrix::kron(chi, chi_inv) * gam, unit_pi,
         h_desc);
  add_eq(r, "inverse_right", b.mult * Matrix::kron(chi_inv, chi) * gam,
         unit_pi, h_desc);
  r.add("normalized", chi.apply(h.unit) == b.unit,
        "gauge map does not fix the unit");
  r.add("inverse.normalized", chi_inv.apply(h.unit) == b.unit,
        "gauge inverse does not fix the unit");
  return r;
}

CocycleData gauge_transform(const CocycleData& c, const Matrix& chi,
                            const Matrix& chi_inv) {
  if (!cocycle_shape_ok(c)) throw DimensionError("cocycle: shape mismatch");
  const MeasuredRing& m = c.meas;
  const Algebra& h = m.bgd.total;
  const Algebra& b = m.ring;
  const Field& f = b.field;
  std::size_t dh = h.dim, db = b.dim;
  if (chi.rows() != db || chi.cols() != dh || chi_inv.rows() != db ||
      chi_inv.cols() != dh)
    throw DimensionError("gauge map: shape mismatch");

  Matrix gam3 = iterated_coproduct(m.bgd, 3);
  Matrix new_action =
      b.mult * Matrix::kron(b.mult * Matrix::kron(chi, m.action), chi_inv) *
      tensor_permutation(f, {dh, dh, dh, db}, {0, 1, 3, 2}) *
      Matrix::kron(gam3, Matrix::identity(f, db));
  Matrix new_sigma = gauge_cocycle(c, chi, chi_inv);
  return make_cocycle_data(
      make_measured_ring(m.bgd, m.ring, m.iota, std::move(new_action)),
      std::move(new_sigma));
}

Matrix gauge_equivalence_iso(const CrossedProduct& target,
                             const CrossedProduct& transformed,
                             const Matrix& chi) {
  const MeasuredRing& m = target.data.meas;
  const Algebra& b = m.ring;
  const Field& f = b.field;
  std::size_t dh = m.bgd.total.dim, db = b.dim;
  if (chi.rows() != db || chi.cols() != dh)
    throw DimensionError("gauge map: shape mismatch");
  return target.carrier.proj() *
         Matrix::kron(b.mult * Matrix::kron(Matrix::identity(f, db), chi),
                      Matrix::identity(f, dh)) *
         Matrix::kron(Matrix::identity(f, db), m.bgd.coproduct()) *
         transformed.carrier.section();
}

Report verify_crossed_equivalence(const CrossedProduct& target,
                                  const CrossedProduct& other,
                                  const Matrix& iso,
                                  const std::string& subject) {
  Report r;
  r.subject = subject;
  const MeasuredRing& m = target.data.meas;
  const Algebra& b = m.ring;
  const Algebra& h = m.bgd.total;
  const Field& f = b.field;
  std::size_t dh = h.dim, db = b.dim, dl = m.bgd.base.dim;
  bool shape = other.data.meas.ring.dim == db &&
               other.data.meas.bgd.total.dim == dh &&
               iso.rows() == target.algebra.dim &&
               iso.cols() == other.algebra.dim;
  r.add("shape", shape, shape ? "" : "carriers or map have mismatched shape");
  if (!shape) return r;

  std::optional<Matrix> inv;
  if (iso.rows() == iso.cols()) inv = inverse(iso);
  r.add("bijective", inv.has_value(), inv ? "" : "map is not invertible");

  r.merge(validate_algebra_map(other.algebra, target.algebra, iso), "map");

  {
    bool ok = true;
    std::string w;
    for (std::size_t i = 0; i < db && ok; ++i)
      if (iso * other.algebra.left_mult(other.embed_ring.col(i)) !=
          target.algebra.left_mult(target.embed_ring.col(i)) * iso) {
        ok = false;
        w = "ring element " + b.labels[i];
      }
    r.add("left_linear", ok, w);
  }

  Matrix idb = Matrix::identity(f, db);
  Matrix idh = Matrix::identity(f, dh);
  auto carrier_acts = [&](const CrossedProduct& cp) {
    std::vector<Matrix> acts;
    for (std::size_t k = 0; k < dl; ++k)
      acts.push_back(cp.carrier.proj() *
                     Matrix::kron(idb, h.left_mult(m.bgd.tgt_of(
                                           m.bgd.base.basis(k)))) *
                     cp.carrier.section());
    return acts;
  };
  std::vector<Matrix> act_t = carrier_acts(target);
  std::vector<Matrix> act_o = carrier_acts(other);
  {
    bool ok = true;
    std::string w;
    for (std::size_t k = 0; k < dl && ok; ++k)
      if (iso * act_o[k] != act_t[k] * iso) {
        ok = false;
        w = "base element " + m.bgd.base.labels[k];
      }
    r.add("base_linear", ok, w);
  }

  {
    std::vector<Matrix> lacts;
    for (std::size_t k = 0; k < dl; ++k)
      lacts.push_back(h.left_mult(m.bgd.src_of(m.bgd.base.basis(k))));
    QuotientSpace prod_t = multi_balanced_tensor(
        f, {target.algebra.dim, dh}, {FactorBalance{0, act_t, lacts}});
    QuotientSpace prod_o = multi_balanced_tensor(
        f, {other.algebra.dim, dh}, {FactorBalance{0, act_o, lacts}});
    Matrix lift = Matrix::kron(iso, idh);
    bool desc =
        (prod_t.proj() * (lift * relation_matrix(f, prod_o.relations())))
            .is_zero();
    r.add("colinear.descends", desc,
          desc ? "" : "map does not respect the coaction balance");
    Matrix rho_t = Matrix::kron(target.carrier.proj(), idh) *
                   Matrix::kron(idb, m.bgd.coproduct()) *
                   target.carrier.section();
    Matrix rho_o = Matrix::kron(other.carrier.proj(), idh) *
                   Matrix::kron(idb, m.bgd.coproduct()) *
                   other.carrier.section();
    bool col = prod_t.proj() * (rho_t * iso) == prod_t.proj() * (lift * rho_o);
    r.add("colinear", col, col ? "" : "map does not intertwine the coactions");
  }
  return r;
}

Matrix gauge_from_equivalence(const CrossedProduct& target,
                              const CrossedProduct& other, const Matrix& iso) {
  const MeasuredRing& m = target.data.meas;
  const Algebra& b = m.ring;
  const Field& f = b.field;
  Matrix collapse = b.mult *
                    Matrix::kron(Matrix::identity(f, b.dim),
                                 m.iota * m.bgd.counit()) *
                    target.carrier.section();
  return collapse * iso * other.embed_total;
}

// ---------------------------------------------------------------------------
// Gauge action on cleaving maps.
// ---------------------------------------------------------------------------

Matrix gauge_cleaving_map(const CleftExtension& c, const Matrix& chi) {
  const HopfAlgebroid& h = c.hopf();
  std::size_t dh = h.total().dim;
  if (chi.rows() != c.alg.coinv.dim() || chi.cols() != dh)
    throw DimensionError("gauge map: shape mismatch");
  return c.alg.alg.mult * Matrix::kron(c.alg.coinv_embed * chi, c.j) *
         h.left.coproduct();
}

std::optional<Matrix> classify_cleaving_maps(const CleftExtension& c,
                                             const Matrix& j_prime) {
  const HopfAlgebroid& h = c.hopf();
  const Algebra& a = c.alg.alg;
  const Field& f = c.field();
  std::size_t dh = h.total().dim;
  if (j_prime.rows() != a.dim || j_prime.cols() != dh)
    throw DimensionError("cleaving map: shape mismatch");
  if (!c.alg.coinv_alg)
    throw Error("coinvariants of the extension do not form an algebra");

  Matrix amb = a.mult * Matrix::kron(j_prime, c.j_inv) * h.right.coproduct();
  Matrix chi(f, c.alg.coinv.dim(), dh);
  for (std::size_t j = 0; j < dh; ++j) {
    std::optional<Vec> coords = c.alg.coinv.coordinates(amb.col(j));
    if (!coords) return std::nullopt;
    chi.set_col(j, *coords);
  }
  if (gauge_cleaving_map(c, chi) != j_prime) return std::nullopt;

  Matrix iota = Matrix::from_columns(
      f, c.alg.coinv.dim(), h.left.base.dim, [&](std::size_t k) {
        return coords_or_throw(c.alg.coinv, c.eta_l.col(k), "ring unit value");
      });
  if (!solve_conv_inverse(h.left, *c.alg.coinv_alg, iota, chi))
    return std::nullopt;
  return chi;
}

std::optional<Matrix> check_equivalence(const CrossedProduct& target,
                                        const CrossedProduct& other) {
  const MeasuredRing& m = target.data.meas;
  const MeasuredRing& mo = other.data.meas;
  const Algebra& h = m.bgd.total;
  const Algebra& b = m.ring;
  const Field& f = b.field;
  std::size_t dh = h.dim, db = b.dim, dl = m.bgd.base.dim;
  if (mo.ring.dim != db || mo.bgd.total.dim != dh || mo.bgd.base.dim != dl ||
      !(mo.ring.mult == b.mult) || !(mo.iota == m.iota) ||
      !(mo.bgd.total.mult == h.mult) ||
      !(mo.bgd.coproduct() == m.bgd.coproduct()))
    throw BindingError("crossed products do not share their measured base");

  auto certify = [&](const Matrix& chi) -> bool {
    std::optional<Matrix> chi_inv = solve_gauge_inverse(m, chi);
    if (!chi_inv) return false;
    CocycleData g = gauge_transform(target.data, chi, *chi_inv);
    if (!(g.sigma == other.data.sigma) ||
        !(g.meas.action == other.data.meas.action))
      return false;
    Matrix iso = gauge_equivalence_iso(target, other, chi);
    return verify_crossed_equivalence(target, other, iso).pass();
  };

  Matrix unit_pi = m.iota * m.bgd.counit();
  if (certify(unit_pi)) return unit_pi;

  // Linear constraints on χ: L-L bilinearity, χ(1) = 1, and the relation
  // (h₍₁₎·′b)χ(h₍₂₎)⊗h₍₃₎ = χ(h₍₁₎)(h₍₂₎·b)⊗h₍₃₎ pairing the two actions,
  // read off Φ((1#h)(b#1)) = Φ(1#h)·Φ(b#1) in the target carrier.
  detail::UnknownSystem sys(f, db, dh);
  for (std::size_t k = 0; k < dl; ++k) {
    sys.add_intertwine(h.left_mult(m.bgd.src_of(m.bgd.base.basis(k))),
                       b.left_mult(m.iota.col(k)));
    sys.add_intertwine(h.left_mult(m.bgd.tgt_of(m.bgd.base.basis(k))),
                       b.right_mult(m.iota.col(k)));
  }
  {
    std::vector<std::pair<std::size_t, Matrix>> terms;
    for (std::size_t q = 0; q < dh; ++q)
      if (!f.is_zero(h.unit[q]))
        terms.emplace_back(q, Matrix::identity(f, db).scaled(h.unit[q]));
    sys.add_block(terms, b.unit);
  }
  Matrix gam3 = iterated_coproduct(m.bgd, 3);
  std::size_t nq = target.carrier.dim();
  for (std::size_t ih = 0; ih < dh; ++ih) {
    for (std::size_t ib = 0; ib < db; ++ib) {
      std::vector<std::optional<Matrix>> acc(dh);
      auto accumulate = [&](std::size_t q, Matrix add) {
        if (acc[q])
          *acc[q] = *acc[q] + add;
        else
          acc[q] = std::move(add);
      };
      for (const auto& [row, cw] : column_terms(gam3, ih)) {
        std::size_t u1 = row / (dh * dh), rest = row % (dh * dh);
        std::size_t u2 = rest / dh, u3 = rest % dh;
        Matrix ins =
            target.carrier.proj() * insert_right(f, db, vec_basis(dh, u3));
        accumulate(
            u2, (ins * b.left_mult(mo.action.col(u1 * db + ib))).scaled(cw));
        accumulate(u1, (ins * b.right_mult(m.action.col(u2 * db + ib)))
                           .scaled(f.neg(cw)));
      }
      std::vector<std::pair<std::size_t, Matrix>> terms;
      for (std::size_t q = 0; q < dh; ++q)
        if (acc[q]) terms.emplace_back(q, std::move(*acc[q]));
      sys.add_block(terms, vec_zero(nq));
    }
  }

  Matrix sysm = Matrix::from_row_vecs(f, db * dh, sys.rows);
  std::optional<Vec> part = solve_linear(sysm, sys.rhs);
  if (!part) return std::nullopt;
  auto unflatten = [&](const Vec& flat) {
    return Matrix::from_columns(f, db, dh, [&](std::size_t q) {
      Vec col = vec_zero(db);
      for (std::size_t p = 0; p < db; ++p) col[p] = flat[q * db + p];
      return col;
    });
  };
  Matrix cand = unflatten(*part);
  if (certify(cand)) return cand;

  std::vector<Vec> ker = kernel_basis(sysm);
  if (ker.empty()) return std::nullopt;
  auto shifted = [&](const std::vector<Scalar>& coeff) {
    Vec flat = *part;
    for (std::size_t i = 0; i < ker.size(); ++i)
      for (std::size_t j = 0; j < flat.size(); ++j)
        flat[j] = f.add(flat[j], f.mul(coeff[i], ker[i][j]));
    return unflatten(flat);
  };
  unsigned long p = f.characteristic();
  if (p != 0) {
    // Exhaustive search of the affine solution space when it is small.
    double combos = 1;
    for (std::size_t i = 0; i < ker.size() && combos <= 4096; ++i)
      combos *= static_cast<double>(p);
    if (combos <= 4096) {
      std::vector<Scalar> coeff(ker.size(), Scalar(0));
      while (true) {
        std::size_t i = 0;
        for (; i < ker.size(); ++i) {
          coeff[i] = f.canon(coeff[i] + 1);
          if (!f.is_zero(coeff[i])) break;
          // carry: coefficient wrapped to zero, advance the next digit
        }
        if (i == ker.size()) break;
        Matrix x = shifted(coeff);
        if (certify(x)) return x;
      }
      return std::nullopt;
    }
  }
  // Bounded search over the rationals: single kernel directions and pairs.
  std::vector<Scalar> scalars = {Scalar(1), Scalar(-1), Scalar(2), Scalar(-2)};
  for (std::size_t i = 0; i < ker.size(); ++i)
    for (const Scalar& s : scalars) {
      std::vector<Scalar> coeff(ker.size(), Scalar(0));
      coeff[i] = f.canon(s);
      Matrix x = shifted(coeff);
      if (certify(x)) return x;
    }
  for (std::size_t i = 0; i < ker.size(); ++i)
    for (std::size_t j = i + 1; j < ker.size(); ++j)
      for (const Scalar& si : {Scalar(1), Scalar(-1)})
        for (const Scalar& sj : {Scalar(1), Scalar(-1)}) {
          std::vector<Scalar> coeff(ker.size(), Scalar(0));
          coeff[i] = f.canon(si);
          coeff[j] = f.canon(sj);
          Matrix x = shifted(coeff);
          if (certify(x)) return x;
        }
  return std::nullopt;
}

}  // namespace hopfgal
