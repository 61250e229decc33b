#include "hopfgal/comodule.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfgal/errors.hpp"

namespace hopfgal {

namespace {

bool kills_relations(const Matrix& composite, const Subspace& rel) {
  for (std::size_t i = 0; i < rel.dim(); ++i)
    if (!vec_is_zero(composite.apply(rel.basis_vector(i)))) return false;
  return true;
}

// Linear combination of an operator family with the given coefficient vector.
Matrix combine(const Field& f, const std::vector<Matrix>& family, const Vec& coeff) {
  Matrix acc(f, family.at(0).rows(), family.at(0).cols());
  for (std::size_t k = 0; k < family.size(); ++k)
    acc = acc + family[k].scaled(coeff[k]);
  return acc;
}

// Evaluation M⊗base → M of a right-action family: m⊗b ↦ m·b.
Matrix action_eval(const Field& f, std::size_t dim, const std::vector<Matrix>& acts) {
  return from_bilinear(f, dim, dim, acts.size(),
                       [&](std::size_t i, std::size_t k) { return acts[k].col(i); });
}

// Insertion M → M⊗H, m ↦ m⊗1_H, in ambient coordinates.
Matrix unit_insertion(const Field& f, std::size_t dim, const Algebra& total) {
  return materialize(f, dim * total.dim, dim, [&](std::size_t j) {
    return vec_kron(f, vec_basis(dim, j), total.unit);
  });
}

// Everything the generic comodule machinery needs to know about one
// bialgebroid chirality, packaged as operator families on the total algebra:
//   hbal   base action on H balanced against the carrier in ⊗_base H,
//   hract  right base action on the H factor of the balanced product,
//   ind    two equivalent routes base → (H → base) computing the derived
//          left action through the counit,
//   bilin  base action on H matching the derived left action under the
//          coaction,
//   tak    base action on H appearing in the agreement condition.
struct ChirData {
  const Algebra* total;
  const Algebra* base;
  const Matrix* gamma;   // ambient coproduct columns
  const Matrix* counit;  // base.dim × total.dim
  std::vector<Matrix> hbal, hract, ind_a, ind_b, bilin, tak;
};

ChirData chir(const RightBialgebroid& b) {
  ChirData c{&b.total, &b.base, &b.coring.coproduct, &b.coring.counit,
             {},       {},      {},                  {},
             {},       {}};
  for (std::size_t k = 0; k < b.base.dim; ++k) {
    Vec s = b.src.col(k), t = b.tgt.col(k);
    c.hbal.push_back(b.total.right_mult(t));
    c.hract.push_back(b.total.right_mult(s));
    c.ind_a.push_back(b.coring.counit * b.total.left_mult(t));
    c.ind_b.push_back(b.coring.counit * b.total.left_mult(s));
    c.bilin.push_back(b.total.left_mult(s));
    c.tak.push_back(b.total.left_mult(t));
  }
  return c;
}

ChirData chir(const LeftBialgebroid& b) {
  ChirData c{&b.total, &b.base, &b.coring.coproduct, &b.coring.counit,
             {},       {},      {},                  {},
             {},       {}};
  for (std::size_t k = 0; k < b.base.dim; ++k) {
    Vec s = b.src.col(k), t = b.tgt.col(k);
    c.hbal.push_back(b.total.left_mult(s));
    c.hract.push_back(b.total.left_mult(t));
    c.ind_a.push_back(b.coring.counit * b.total.right_mult(s));
    c.ind_b.push_back(b.coring.counit * b.total.right_mult(t));
    c.bilin.push_back(b.total.right_mult(t));
    c.tak.push_back(b.total.right_mult(s));
  }
  return c;
}

QuotientSpace carrier_product(const ChirData& c, std::size_t dim,
                              const std::vector<Matrix>& right_act) {
  return multi_balanced_tensor(c.total->field, {dim, c.total->dim},
                               {FactorBalance{0, right_act, c.hbal}});
}

std::vector<Matrix> induced_family(const ChirData& c, std::size_t dim,
                                   const std::vector<Matrix>& right_act,
                                   const Matrix& coaction, bool second_route) {
  const Field& f = c.total->field;
  Matrix ev = action_eval(f, dim, right_act);
  Matrix idm = Matrix::identity(f, dim);
  const std::vector<Matrix>& routes = second_route ? c.ind_b : c.ind_a;
  std::vector<Matrix> out;
  out.reserve(routes.size());
  for (const Matrix& g : routes) out.push_back(ev * Matrix::kron(idm, g) * coaction);
  return out;
}

std::vector<Matrix> induced_checked(const ChirData& c, std::size_t dim,
                                    const std::vector<Matrix>& right_act,
                                    const Matrix& coaction) {
  const Field& f = c.total->field;
  std::vector<Matrix> a = induced_family(c, dim, right_act, coaction, false);
  std::vector<Matrix> b = induced_family(c, dim, right_act, coaction, true);
  if (a != b)
    throw Error("induced left action: the two defining formulas disagree");
  if (combine(f, a, c.base->unit) != Matrix::identity(f, dim))
    throw Error("induced left action: not unital");
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a[i] * a[j] != combine(f, a, c.base->mul(c.base->basis(i), c.base->basis(j))))
        throw Error("induced left action: not associative");
      if (a[i] * right_act[j] != right_act[j] * a[i])
        throw Error("induced left action: does not commute with the right action");
    }
  return a;
}

bool good_shapes(const ChirData& c, std::size_t dim,
                 const std::vector<Matrix>& right_act, const Matrix& coaction,
                 const QuotientSpace& product,
                 const std::vector<Matrix>& induced) {
  std::size_t dh = c.total->dim;
  if (right_act.size() != c.base->dim || induced.size() != c.base->dim) return false;
  for (const Matrix& m : right_act)
    if (m.rows() != dim || m.cols() != dim) return false;
  for (const Matrix& m : induced)
    if (m.rows() != dim || m.cols() != dim) return false;
  return coaction.rows() == dim * dh && coaction.cols() == dim &&
         product.ambient_dim() == dim * dh;
}

// Name of the j-th carrier basis vector for witnesses.
std::string carrier_name(std::size_t j) { return "carrier basis vector " + std::to_string(j); }

std::string first_col_mismatch(const Matrix& a, const Matrix& b) {
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (a.col(j) != b.col(j)) return carrier_name(j);
  return "matrix shape mismatch";
}

Report validate_generic(const ChirData& c, std::size_t dim,
                        const std::vector<Matrix>& right_act, const Matrix& coaction,
                        const QuotientSpace& product,
                        const std::vector<Matrix>& induced,
                        const std::string& subject) {
  Report r;
  r.subject = subject;
  const Field& f = c.total->field;
  const Algebra& base = *c.base;
  std::size_t dh = c.total->dim;
  bool shapes = good_shapes(c, dim, right_act, coaction, product, induced);
  r.add("shape", shapes,
        shapes ? "" : "matrix dimensions inconsistent with carrier and base");
  if (!shapes) return r;

  Matrix idm = Matrix::identity(f, dim);
  Matrix idh = Matrix::identity(f, dh);

  {  // right module axioms for the base action
    r.add("module.unital", combine(f, right_act, base.unit) == idm,
          "acting with the base unit is not the identity");
    bool ok = true;
    std::string w;
    for (std::size_t i = 0; i < base.dim && ok; ++i)
      for (std::size_t j = 0; j < base.dim && ok; ++j)
        if (right_act[i] * right_act[j] !=
            combine(f, right_act, base.mul(base.basis(j), base.basis(i)))) {
          ok = false;
          w = "base pair (" + base.labels[j] + ", " + base.labels[i] + ")";
        }
    r.add("module.associative", ok, w);
  }

  {  // stored product quotient matches the balancing data
    QuotientSpace q2 = carrier_product(c, dim, right_act);
    r.add("product.quotient",
          q2.proj() == product.proj() && q2.section() == product.section(),
          "stored balanced-product quotient differs from the recomputed one");
  }

  {  // canonical ambient representatives
    bool ok = true;
    std::string w;
    for (std::size_t j = 0; j < dim && ok; ++j)
      if (!product.is_canonical(coaction.col(j))) {
        ok = false;
        w = carrier_name(j) + " has a non-canonical image";
      }
    r.add("coaction.canonical", ok, w);
  }

  {  // base linearity: ϱ(m·b) = ϱ(m)·b on the product
    bool desc = true, lin = true;
    std::string wd, wl;
    for (std::size_t k = 0; k < base.dim; ++k) {
      Matrix op = product.proj() * Matrix::kron(idm, c.hract[k]);
      if (desc && !kills_relations(op, product.relations())) {
        desc = false;
        wd = "product action of " + base.labels[k] + " does not descend";
      }
      if (lin && op * coaction != product.proj() * coaction * right_act[k]) {
        lin = false;
        wl = "base element " + base.labels[k];
      }
    }
    r.add("coaction.base_linear.descends", desc, wd);
    r.add("coaction.base_linear", lin, wl);
  }

  {  // coassociativity in the triple balanced product
    QuotientSpace triple =
        multi_balanced_tensor(f, {dim, dh, dh},
                              {FactorBalance{0, right_act, c.hbal},
                               FactorBalance{1, c.hract, c.hbal}});
    Matrix ext = triple.proj() * Matrix::kron(coaction, idh);
    Matrix spread = triple.proj() * Matrix::kron(idm, *c.gamma);
    bool desc = kills_relations(ext, product.relations()) &&
                kills_relations(spread, product.relations());
    r.add("coaction.coassociative.descends", desc,
          desc ? "" : "a coassociativity composite does not descend");
    Matrix lhs = ext * coaction, rhs = spread * coaction;
    r.add("coaction.coassociative", lhs == rhs,
          lhs == rhs ? "" : first_col_mismatch(lhs, rhs));
  }

  {  // counitality
    Matrix ev = action_eval(f, dim, right_act);
    Matrix op = ev * Matrix::kron(idm, *c.counit);
    bool desc = kills_relations(op, product.relations());
    r.add("coaction.counital.descends", desc,
          desc ? "" : "the counit evaluation does not descend");
    Matrix got = op * coaction;
    r.add("coaction.counital", got == idm,
          got == idm ? "" : first_col_mismatch(got, idm));
  }

  {  // derived left action: stored data, both routes, bimodule axioms
    std::vector<Matrix> route_a = induced_family(c, dim, right_act, coaction, false);
    std::vector<Matrix> route_b = induced_family(c, dim, right_act, coaction, true);
    r.add("induced.agree", route_a == route_b,
          "the two counit routes for the left action disagree");
    r.add("induced.stored", induced == route_a,
          "stored left action differs from the derived one");
    r.add("induced.unital", combine(f, induced, base.unit) == idm,
          "derived left action is not unital");
    bool assoc = true, comm = true;
    std::string wa, wc;
    for (std::size_t i = 0; i < base.dim; ++i)
      for (std::size_t j = 0; j < base.dim; ++j) {
        if (assoc && induced[i] * induced[j] !=
                         combine(f, induced, base.mul(base.basis(i), base.basis(j)))) {
          assoc = false;
          wa = "base pair (" + base.labels[i] + ", " + base.labels[j] + ")";
        }
        if (comm && induced[i] * right_act[j] != right_act[j] * induced[i]) {
          comm = false;
          wc = "base pair (" + base.labels[i] + ", " + base.labels[j] + ")";
        }
      }
    r.add("induced.associative", assoc, wa);
    r.add("induced.commutes", comm, wc);
  }

  {  // coaction is bilinear for the derived left action
    bool desc = true, lin = true;
    std::string wd, wl;
    for (std::size_t k = 0; k < base.dim; ++k) {
      Matrix op = product.proj() * Matrix::kron(idm, c.bilin[k]);
      if (desc && !kills_relations(op, product.relations())) {
        desc = false;
        wd = "bilinearity action of " + base.labels[k] + " does not descend";
      }
      if (lin && product.proj() * coaction * induced[k] != op * coaction) {
        lin = false;
        wl = "base element " + base.labels[k];
      }
    }
    r.add("coaction.bilinear.descends", desc, wd);
    r.add("coaction.bilinear", lin, wl);
  }

  {  // image of the coaction lies in the agreement subspace
    bool desc = true;
    for (std::size_t k = 0; k < base.dim && desc; ++k) {
      Matrix diff = Matrix::kron(induced[k], idh) - Matrix::kron(idm, c.tak[k]);
      desc = kills_relations(product.proj() * diff, product.relations());
    }
    r.add("coaction.agreement.descends", desc,
          desc ? "" : "an agreement operator does not descend");
    if (desc) {
      Subspace tk = agreement_subspace(product, dim, dh, induced, c.tak);
      Matrix cq = product.proj() * coaction;
      bool ok = true;
      std::string w;
      for (std::size_t j = 0; j < dim && ok; ++j)
        if (!tk.contains(cq.col(j))) {
          ok = false;
          w = carrier_name(j) + " maps outside the agreement subspace";
        }
      r.add("coaction.agreement", ok, w);
    } else {
      r.add("coaction.agreement", false, "not evaluated: operators do not descend");
    }
  }

  return r;
}

Subspace coinv_generic(const Field& f, std::size_t dim, const Algebra& total,
                       const Matrix& coaction, const QuotientSpace& product) {
  Matrix d = product.proj() * (coaction - unit_insertion(f, dim, total));
  return Subspace::span(f, dim, kernel_basis(d));
}

}  // namespace

RightBgdComodule make_right_bgd_comodule(RightBialgebroid bgd, std::size_t dim,
                                         std::vector<Matrix> right_act,
                                         const Matrix& coaction_ambient) {
  if (right_act.size() != bgd.base.dim)
    throw DimensionError("comodule: need one right-action matrix per base basis vector");
  for (const Matrix& m : right_act)
    if (m.rows() != dim || m.cols() != dim)
      throw DimensionError("comodule: right-action matrix shape mismatch");
  if (coaction_ambient.rows() != dim * bgd.total.dim || coaction_ambient.cols() != dim)
    throw DimensionError("comodule: coaction matrix shape mismatch");
  ChirData c = chir(bgd);
  QuotientSpace product = carrier_product(c, dim, right_act);
  Matrix coaction = product.canonicalizer() * coaction_ambient;
  std::vector<Matrix> induced = induced_family(c, dim, right_act, coaction, false);
  return RightBgdComodule{std::move(bgd),      dim,
                          std::move(right_act), std::move(coaction),
                          std::move(product),   std::move(induced)};
}

LeftBgdComodule make_left_bgd_comodule(LeftBialgebroid bgd, std::size_t dim,
                                       std::vector<Matrix> right_act,
                                       const Matrix& coaction_ambient) {
  if (right_act.size() != bgd.base.dim)
    throw DimensionError("comodule: need one right-action matrix per base basis vector");
  for (const Matrix& m : right_act)
    if (m.rows() != dim || m.cols() != dim)
      throw DimensionError("comodule: right-action matrix shape mismatch");
  if (coaction_ambient.rows() != dim * bgd.total.dim || coaction_ambient.cols() != dim)
    throw DimensionError("comodule: coaction matrix shape mismatch");
  ChirData c = chir(bgd);
  QuotientSpace product = carrier_product(c, dim, right_act);
  Matrix coaction = product.canonicalizer() * coaction_ambient;
  std::vector<Matrix> induced = induced_family(c, dim, right_act, coaction, false);
  return LeftBgdComodule{std::move(bgd),      dim,
                         std::move(right_act), std::move(coaction),
                         std::move(product),   std::move(induced)};
}

Report validate_right_bgd_comodule(const RightBgdComodule& m, const std::string& subject) {
  return validate_generic(chir(m.bgd), m.dim, m.right_act, m.coaction, m.product,
                          m.induced_left, subject);
}

Report validate_left_bgd_comodule(const LeftBgdComodule& m, const std::string& subject) {
  return validate_generic(chir(m.bgd), m.dim, m.right_act, m.coaction, m.product,
                          m.induced_left, subject);
}

std::vector<Matrix> induced_left_action(const RightBgdComodule& m) {
  return induced_checked(chir(m.bgd), m.dim, m.right_act, m.coaction);
}

std::vector<Matrix> induced_left_action(const LeftBgdComodule& m) {
  return induced_checked(chir(m.bgd), m.dim, m.right_act, m.coaction);
}

Subspace comodule_takeuchi(const RightBgdComodule& m) {
  ChirData c = chir(m.bgd);
  return agreement_subspace(m.product, m.dim, m.bgd.total.dim, m.induced_left, c.tak);
}

Subspace comodule_takeuchi(const LeftBgdComodule& m) {
  ChirData c = chir(m.bgd);
  return agreement_subspace(m.product, m.dim, m.bgd.total.dim, m.induced_left, c.tak);
}

Subspace coinvariants(const RightBgdComodule& m) {
  return coinv_generic(m.bgd.total.field, m.dim, m.bgd.total, m.coaction, m.product);
}

Subspace coinvariants(const LeftBgdComodule& m) {
  return coinv_generic(m.bgd.total.field, m.dim, m.bgd.total, m.coaction, m.product);
}

RightBgdComodule regular_comodule(const RightBialgebroid& b) {
  std::vector<Matrix> act;
  act.reserve(b.base.dim);
  for (std::size_t k = 0; k < b.base.dim; ++k)
    act.push_back(b.total.right_mult(b.src.col(k)));
  return make_right_bgd_comodule(b, b.total.dim, std::move(act), b.coring.coproduct);
}

LeftBgdComodule regular_comodule(const LeftBialgebroid& b) {
  std::vector<Matrix> act;
  act.reserve(b.base.dim);
  for (std::size_t k = 0; k < b.base.dim; ++k)
    act.push_back(b.total.left_mult(b.tgt.col(k)));
  return make_left_bgd_comodule(b, b.total.dim, std::move(act), b.coring.coproduct);
}

// ---------------------------------------------------------------------------
// Hopf comodules
// ---------------------------------------------------------------------------

namespace {

// Shared core of the right-comodule pair validation: constituent comodules,
// commuting base actions, mixed base linearities and mutual colinearity of
// the two coactions.  All structural data is read off the two carried
// bialgebroids, so the same code validates left comodules through their
// co-opposite views.
Report pair_report(const RightBgdComodule& cr, const LeftBgdComodule& cl,
                   const std::string& subject) {
  Report r;
  r.subject = subject;
  const Algebra& H = cr.bgd.total;
  const Field& f = H.field;
  std::size_t dim = cr.dim, dh = H.dim;
  bool shared = cr.dim == cl.dim && cl.bgd.total.dim == dh;
  r.add("carrier.shared", shared,
        shared ? "" : "the two coactions disagree about the carrier");
  if (!shared) return r;

  r.merge(validate_right_bgd_comodule(cr), "right");
  r.merge(validate_left_bgd_comodule(cl), "left");

  Matrix idm = Matrix::identity(f, dim);
  Matrix idh = Matrix::identity(f, dh);

  std::vector<Matrix> sR, tR, sL, tL;
  for (std::size_t k = 0; k < cr.bgd.base.dim; ++k) {
    sR.push_back(H.right_mult(cr.bgd.src.col(k)));
    tR.push_back(H.right_mult(cr.bgd.tgt.col(k)));
  }
  for (std::size_t k = 0; k < cl.bgd.base.dim; ++k) {
    sL.push_back(H.left_mult(cl.bgd.src.col(k)));
    tL.push_back(H.left_mult(cl.bgd.tgt.col(k)));
  }

  {  // the two base actions commute
    bool ok = true;
    std::string w;
    for (std::size_t i = 0; i < cr.right_act.size() && ok; ++i)
      for (std::size_t j = 0; j < cl.right_act.size() && ok; ++j)
        if (cr.right_act[i] * cl.right_act[j] != cl.right_act[j] * cr.right_act[i]) {
          ok = false;
          w = "base pair (" + cr.bgd.base.labels[i] + ", " + cl.bgd.base.labels[j] + ")";
        }
    r.add("actions.commute", ok, w);
  }

  {  // each coaction is linear over the other base
    bool desc = true, lin = true;
    std::string wd, wl;
    for (std::size_t k = 0; k < tL.size(); ++k) {
      Matrix op = cr.product.proj() * Matrix::kron(idm, tL[k]);
      if (desc && !kills_relations(op, cr.product.relations())) {
        desc = false;
        wd = "action of " + cl.bgd.base.labels[k] + " does not descend";
      }
      if (lin && cr.product.proj() * cr.coaction * cl.right_act[k] != op * cr.coaction) {
        lin = false;
        wl = "base element " + cl.bgd.base.labels[k];
      }
    }
    r.add("coaction_r.cross_linear.descends", desc, wd);
    r.add("coaction_r.cross_linear", lin, wl);

    desc = lin = true;
    wd.clear();
    wl.clear();
    for (std::size_t k = 0; k < sR.size(); ++k) {
      Matrix op = cl.product.proj() * Matrix::kron(idm, sR[k]);
      if (desc && !kills_relations(op, cl.product.relations())) {
        desc = false;
        wd = "action of " + cr.bgd.base.labels[k] + " does not descend";
      }
      if (lin && cl.product.proj() * cl.coaction * cr.right_act[k] != op * cl.coaction) {
        lin = false;
        wl = "base element " + cr.bgd.base.labels[k];
      }
    }
    r.add("coaction_l.cross_linear.descends", desc, wd);
    r.add("coaction_l.cross_linear", lin, wl);
  }

  {  // mutual colinearity in the two mixed triple products
    QuotientSpace mix_rl = multi_balanced_tensor(
        f, {dim, dh, dh},
        {FactorBalance{0, cr.right_act, tR}, FactorBalance{1, tL, sL}});
    Matrix opA = mix_rl.proj() * Matrix::kron(idm, cl.bgd.coring.coproduct);
    Matrix opB = mix_rl.proj() * Matrix::kron(cr.coaction, idh);
    bool desc = kills_relations(opA, cr.product.relations()) &&
                kills_relations(opB, cl.product.relations());
    r.add("colinearity.rl.descends", desc,
          desc ? "" : "a mixed colinearity composite does not descend");
    Matrix lhs = opA * cr.coaction, rhs = opB * cl.coaction;
    r.add("colinearity.rl", lhs == rhs, lhs == rhs ? "" : first_col_mismatch(lhs, rhs));

    QuotientSpace mix_lr = multi_balanced_tensor(
        f, {dim, dh, dh},
        {FactorBalance{0, cl.right_act, sL}, FactorBalance{1, sR, tR}});
    Matrix opC = mix_lr.proj() * Matrix::kron(idm, cr.bgd.coring.coproduct);
    Matrix opD = mix_lr.proj() * Matrix::kron(cl.coaction, idh);
    desc = kills_relations(opC, cl.product.relations()) &&
           kills_relations(opD, cr.product.relations());
    r.add("colinearity.lr.descends", desc,
          desc ? "" : "a mixed colinearity composite does not descend");
    lhs = opC * cl.coaction;
    rhs = opD * cr.coaction;
    r.add("colinearity.lr", lhs == rhs, lhs == rhs ? "" : first_col_mismatch(lhs, rhs));
  }

  return r;
}

}  // namespace

HopfComodule make_hopf_comodule(HopfAlgebroid base, std::size_t dim,
                                std::vector<Matrix> act_r, std::vector<Matrix> act_l,
                                const Matrix& rho_r_ambient, const Matrix& rho_l_ambient) {
  RightBgdComodule cr =
      make_right_bgd_comodule(base.right, dim, std::move(act_r), rho_r_ambient);
  LeftBgdComodule cl =
      make_left_bgd_comodule(base.left, dim, std::move(act_l), rho_l_ambient);
  return HopfComodule{std::move(base), std::move(cr), std::move(cl)};
}

Report validate_hopf_comodule(const HopfComodule& m, const std::string& subject) {
  return pair_report(m.com_r, m.com_l, subject);
}

HopfComodule regular_comodule(const HopfAlgebroid& h) {
  const Algebra& H = h.total();
  std::vector<Matrix> act_r, act_l;
  for (std::size_t k = 0; k < h.right.base.dim; ++k)
    act_r.push_back(H.right_mult(h.right.src.col(k)));
  for (std::size_t k = 0; k < h.left.base.dim; ++k)
    act_l.push_back(H.left_mult(h.left.tgt.col(k)));
  return make_hopf_comodule(h, H.dim, std::move(act_r), std::move(act_l),
                            h.right.coring.coproduct, h.left.coring.coproduct);
}

HopfComodule base_comodule(const HopfAlgebroid& h) {
  const Algebra& R = h.right.base;
  const Algebra& H = h.total();
  const Field& f = H.field;
  Matrix iota = h.right.coring.counit * h.left.tgt;  // anti-isomorphism L → R
  std::vector<Matrix> act_r, act_l;
  for (std::size_t k = 0; k < R.dim; ++k) act_r.push_back(R.right_mult(R.basis(k)));
  for (std::size_t k = 0; k < h.left.base.dim; ++k)
    act_l.push_back(R.left_mult(iota.col(k)));
  Matrix rho = materialize(f, R.dim * H.dim, R.dim, [&](std::size_t j) {
    return vec_kron(f, R.unit, h.right.src.col(j));
  });
  return make_hopf_comodule(h, R.dim, std::move(act_r), std::move(act_l), rho, rho);
}

HopfComodule tensor_comodules(const HopfComodule& m, const HopfComodule& n) {
  const Algebra& H = m.base.total();
  const Field& f = H.field;
  if (n.base.total().dim != H.dim || n.base.total().mult != H.mult)
    throw Error("tensor comodule: factors live over different structures");
  std::size_t dm = m.dim(), dn = n.dim(), dh = H.dim;
  QuotientSpace q = multi_balanced_tensor(
      f, {dm, dn}, {FactorBalance{0, m.com_r.right_act, n.com_r.induced_left}});

  auto on_carrier = [&](const Matrix& ambient, const char* what) -> Matrix {
    Matrix lifted = q.proj() * ambient;
    if (!kills_relations(lifted, q.relations()))
      throw Error(std::string("tensor comodule: ") + what +
                  " does not descend to the balanced carrier");
    return lifted * q.section();
  };

  Matrix idm = Matrix::identity(f, dm);
  Matrix idn = Matrix::identity(f, dn);
  std::vector<Matrix> act_r, act_l;
  for (std::size_t k = 0; k < n.com_r.right_act.size(); ++k)
    act_r.push_back(on_carrier(Matrix::kron(idm, n.com_r.right_act[k]),
                               "the right base action"));
  for (std::size_t k = 0; k < m.com_l.right_act.size(); ++k)
    act_l.push_back(on_carrier(Matrix::kron(m.com_l.right_act[k], idn),
                               "the left-base action"));

  Matrix perm = tensor_permutation(f, {dm, dh, dn, dh}, {0, 2, 1, 3});
  Matrix collapse = Matrix::kron(Matrix::identity(f, dm * dn), H.mult);
  Matrix diag_r =
      collapse * perm * Matrix::kron(m.com_r.coaction, n.com_r.coaction);
  Matrix diag_l =
      collapse * perm * Matrix::kron(m.com_l.coaction, n.com_l.coaction);

  Matrix idh = Matrix::identity(f, dh);
  Matrix lift_r = Matrix::kron(q.proj(), idh) * diag_r;
  if (!kills_relations(lift_r, q.relations()))
    throw Error("tensor comodule: the diagonal coaction does not descend");
  Matrix lift_l = Matrix::kron(q.proj(), idh) * diag_l;
  if (!kills_relations(lift_l, q.relations()))
    throw Error("tensor comodule: the diagonal coaction does not descend");

  return make_hopf_comodule(m.base, q.dim(), std::move(act_r), std::move(act_l),
                            lift_r * q.section(), lift_l * q.section());
}

Matrix comparison_map(const HopfComodule& m) {
  const Algebra& H = m.base.total();
  const Field& f = H.field;
  Matrix idm = Matrix::identity(f, m.dim());
  Matrix ambient =
      Matrix::kron(idm, H.mult) * Matrix::kron(m.com_l.coaction, m.base.antipode);
  Matrix lifted = m.com_l.product.proj() * ambient;
  if (!kills_relations(lifted, m.com_r.product.relations()))
    throw Error("comparison map: not well defined on the balanced product");
  return lifted * m.com_r.product.section();
}

Matrix comparison_map_inverse(const HopfComodule& m) {
  if (!m.base.antipode_inverse)
    throw Error("comparison map inverse: the antipode is not invertible");
  const Algebra& H = m.base.total();
  const Field& f = H.field;
  std::size_t dh = H.dim;
  Matrix idm = Matrix::identity(f, m.dim());
  Matrix mult_op = H.mult * tensor_permutation(f, {dh, dh}, {1, 0});
  Matrix ambient = Matrix::kron(idm, mult_op) *
                   Matrix::kron(m.com_r.coaction, *m.base.antipode_inverse);
  Matrix lifted = m.com_r.product.proj() * ambient;
  if (!kills_relations(lifted, m.com_l.product.relations()))
    throw Error("comparison map inverse: not well defined on the balanced product");
  return lifted * m.com_l.product.section();
}

Report check_coinvariant_inclusion(const HopfComodule& m, const std::string& subject) {
  Report r;
  r.subject = subject;
  const Algebra& H = m.base.total();
  const Field& f = H.field;
  std::size_t dim = m.dim();

  Subspace ci_r = coinvariants(m.com_r);
  Subspace ci_l = coinvariants(m.com_l);
  r.add("inclusion.right_in_left", ci_l.contains(ci_r),
        "a right-sided coinvariant escapes the left-sided coinvariants");

  std::optional<Matrix> phi;
  std::string why;
  try {
    phi = comparison_map(m);
  } catch (const Error& e) {
    why = e.what();
  }
  r.add("comparison.defined", phi.has_value(), why);
  if (phi) {
    Matrix ins = unit_insertion(f, dim, H);
    r.add("comparison.coaction_to_unit",
          *phi * m.com_r.coaction_q() == m.com_l.product.proj() * ins,
          "the comparison map does not collapse the coaction to unit insertion");
    r.add("comparison.unit_to_coaction",
          *phi * (m.com_r.product.proj() * ins) == m.com_l.coaction_q(),
          "the comparison map does not carry unit insertion to the coaction");
  }

  if (m.base.antipode_inverse) {
    std::optional<Matrix> phi_inv;
    std::string why_inv;
    try {
      phi_inv = comparison_map_inverse(m);
    } catch (const Error& e) {
      why_inv = e.what();
    }
    r.add("comparison.inverse_defined", phi_inv.has_value(), why_inv);
    if (phi && phi_inv)
      r.add("comparison.mutually_inverse",
            *phi * *phi_inv == Matrix::identity(f, m.com_l.product.dim()) &&
                *phi_inv * *phi == Matrix::identity(f, m.com_r.product.dim()),
            "the two comparison maps do not invert each other");
    r.add("coinvariants.equal", ci_r == ci_l,
          "coinvariant spaces differ although the antipode is invertible");
  }
  return r;
}

// ---------------------------------------------------------------------------
// Left comodules
// ---------------------------------------------------------------------------

LeftHopfComodule make_left_hopf_comodule(HopfAlgebroid base, std::size_t dim,
                                         std::vector<Matrix> left_act_r,
                                         std::vector<Matrix> left_act_l,
                                         const Matrix& delta_r_ambient,
                                         const Matrix& delta_l_ambient) {
  const Algebra& H = base.total();
  const Field& f = H.field;
  std::size_t dh = H.dim;
  if (left_act_r.size() != base.right.base.dim || left_act_l.size() != base.left.base.dim)
    throw DimensionError("left comodule: need one action matrix per base basis vector");
  for (const Matrix& m : left_act_r)
    if (m.rows() != dim || m.cols() != dim)
      throw DimensionError("left comodule: action matrix shape mismatch");
  for (const Matrix& m : left_act_l)
    if (m.rows() != dim || m.cols() != dim)
      throw DimensionError("left comodule: action matrix shape mismatch");
  if (delta_r_ambient.rows() != dh * dim || delta_r_ambient.cols() != dim ||
      delta_l_ambient.rows() != dh * dim || delta_l_ambient.cols() != dim)
    throw DimensionError("left comodule: coaction matrix shape mismatch");

  std::vector<Matrix> sR, tL;
  for (std::size_t k = 0; k < base.right.base.dim; ++k)
    sR.push_back(H.right_mult(base.right.src.col(k)));
  for (std::size_t k = 0; k < base.left.base.dim; ++k)
    tL.push_back(H.left_mult(base.left.tgt.col(k)));
  QuotientSpace prod_r = multi_balanced_tensor(f, {dh, dim},
                                               {FactorBalance{0, sR, left_act_r}});
  QuotientSpace prod_l = multi_balanced_tensor(f, {dh, dim},
                                               {FactorBalance{0, tL, left_act_l}});
  Matrix dr = prod_r.canonicalizer() * delta_r_ambient;
  Matrix dl = prod_l.canonicalizer() * delta_l_ambient;
  return LeftHopfComodule{std::move(base),       dim,
                          std::move(left_act_r), std::move(left_act_l),
                          std::move(dr),         std::move(dl),
                          std::move(prod_r),     std::move(prod_l)};
}

RightBgdComodule cop_right_view(const LeftHopfComodule& m) {
  const Field& f = m.base.total().field;
  Matrix flip = tensor_permutation(f, {m.base.total().dim, m.dim}, {1, 0});
  return make_right_bgd_comodule(co_opposite(m.base.right), m.dim, m.left_act_r,
                                 flip * m.delta_r);
}

LeftBgdComodule cop_left_view(const LeftHopfComodule& m) {
  const Field& f = m.base.total().field;
  Matrix flip = tensor_permutation(f, {m.base.total().dim, m.dim}, {1, 0});
  return make_left_bgd_comodule(co_opposite(m.base.left), m.dim, m.left_act_l,
                                flip * m.delta_l);
}

Report validate_left_hopf_comodule(const LeftHopfComodule& m, const std::string& subject) {
  Report r;
  r.subject = subject;
  const Algebra& H = m.base.total();
  std::size_t dh = H.dim;
  bool shapes = m.left_act_r.size() == m.base.right.base.dim &&
                m.left_act_l.size() == m.base.left.base.dim &&
                m.delta_r.rows() == dh * m.dim && m.delta_r.cols() == m.dim &&
                m.delta_l.rows() == dh * m.dim && m.delta_l.cols() == m.dim;
  for (const Matrix& a : m.left_act_r)
    shapes = shapes && a.rows() == m.dim && a.cols() == m.dim;
  for (const Matrix& a : m.left_act_l)
    shapes = shapes && a.rows() == m.dim && a.cols() == m.dim;
  r.add("shape", shapes,
        shapes ? "" : "matrix dimensions inconsistent with carrier and base");
  if (!shapes) return r;

  {  // stored representatives are canonical for the stored quotients
    bool cr = true, cl = true;
    for (std::size_t j = 0; j < m.dim; ++j) {
      cr = cr && m.prod_r.is_canonical(m.delta_r.col(j));
      cl = cl && m.prod_l.is_canonical(m.delta_l.col(j));
    }
    r.add("delta_r.canonical", cr, cr ? "" : "a coaction column is non-canonical");
    r.add("delta_l.canonical", cl, cl ? "" : "a coaction column is non-canonical");
  }

  {  // stored quotients match the balancing data
    const Field& f = H.field;
    std::vector<Matrix> sR, tL;
    for (std::size_t k = 0; k < m.base.right.base.dim; ++k)
      sR.push_back(H.right_mult(m.base.right.src.col(k)));
    for (std::size_t k = 0; k < m.base.left.base.dim; ++k)
      tL.push_back(H.left_mult(m.base.left.tgt.col(k)));
    QuotientSpace qr = multi_balanced_tensor(f, {dh, m.dim},
                                             {FactorBalance{0, sR, m.left_act_r}});
    QuotientSpace ql = multi_balanced_tensor(f, {dh, m.dim},
                                             {FactorBalance{0, tL, m.left_act_l}});
    r.add("prod_r.quotient",
          qr.proj() == m.prod_r.proj() && qr.section() == m.prod_r.section(),
          "stored balanced-product quotient differs from the recomputed one");
    r.add("prod_l.quotient",
          ql.proj() == m.prod_l.proj() && ql.section() == m.prod_l.section(),
          "stored balanced-product quotient differs from the recomputed one");
  }

  r.merge(pair_report(cop_right_view(m), cop_left_view(m), subject), "cop");
  return r;
}

LeftHopfComodule left_regular_comodule(const HopfAlgebroid& h) {
  const Algebra& H = h.total();
  std::vector<Matrix> lar, lal;
  for (std::size_t k = 0; k < h.right.base.dim; ++k)
    lar.push_back(H.right_mult(h.right.tgt.col(k)));
  for (std::size_t k = 0; k < h.left.base.dim; ++k)
    lal.push_back(H.left_mult(h.left.src.col(k)));
  return make_left_hopf_comodule(h, H.dim, std::move(lar), std::move(lal),
                                 h.right.coring.coproduct, h.left.coring.coproduct);
}

HopfComodule antipode_flip_comodule(const LeftHopfComodule& m) {
  const HopfAlgebroid& h = m.base;
  const Algebra& H = h.total();
  const Field& f = H.field;
  Matrix pLtR = h.left.coring.counit * h.right.tgt;  // R → L
  Matrix pRtL = h.right.coring.counit * h.left.tgt;  // L → R
  std::vector<Matrix> act_r, act_l;
  for (std::size_t k = 0; k < h.right.base.dim; ++k)
    act_r.push_back(combine(f, m.left_act_l, pLtR.col(k)));
  for (std::size_t k = 0; k < h.left.base.dim; ++k)
    act_l.push_back(combine(f, m.left_act_r, pRtL.col(k)));
  Matrix flip = tensor_permutation(f, {H.dim, m.dim}, {1, 0});
  Matrix twist = flip * Matrix::kron(h.antipode, Matrix::identity(f, m.dim));
  return make_hopf_comodule(h, m.dim, std::move(act_r), std::move(act_l),
                            twist * m.delta_l, twist * m.delta_r);
}

LeftHopfComodule antipode_flip_comodule(const HopfComodule& m) {
  const HopfAlgebroid& h = m.base;
  const Algebra& H = h.total();
  const Field& f = H.field;
  Matrix pLtR = h.left.coring.counit * h.right.tgt;
  Matrix pRtL = h.right.coring.counit * h.left.tgt;
  std::vector<Matrix> lar, lal;
  for (std::size_t k = 0; k < h.right.base.dim; ++k)
    lar.push_back(combine(f, m.com_l.right_act, pLtR.col(k)));
  for (std::size_t k = 0; k < h.left.base.dim; ++k)
    lal.push_back(combine(f, m.com_r.right_act, pRtL.col(k)));
  Matrix flip = tensor_permutation(f, {m.dim(), H.dim}, {1, 0});
  Matrix twist = flip * Matrix::kron(Matrix::identity(f, m.dim()), h.antipode);
  return make_left_hopf_comodule(h, m.dim(), std::move(lar), std::move(lal),
                                 twist * m.com_l.coaction, twist * m.com_r.coaction);
}

// ---------------------------------------------------------------------------
// Comodule algebras
// ---------------------------------------------------------------------------

namespace {

// The subspace with the restricted product, when it is closed and unital.
std::optional<Algebra> subalgebra_on(const Algebra& a, const Subspace& s) {
  std::size_t bd = s.dim();
  Algebra b(a.field, bd);
  std::optional<Vec> u = s.coordinates(a.unit);
  if (!u) return std::nullopt;
  b.unit = *u;
  for (std::size_t i = 0; i < bd; ++i)
    for (std::size_t j = 0; j < bd; ++j) {
      std::optional<Vec> c =
          s.coordinates(a.mul(s.basis_vector(i), s.basis_vector(j)));
      if (!c) return std::nullopt;
      b.mult.set_col(i * bd + j, *c);
    }
  for (std::size_t i = 0; i < bd; ++i) b.labels[i] = "b" + std::to_string(i);
  return b;
}

}  // namespace

ComoduleAlgebra make_comodule_algebra(HopfAlgebroid base, Algebra alg, Matrix eta_r,
                                      std::vector<Matrix> act_l,
                                      const Matrix& rho_r_ambient,
                                      const Matrix& rho_l_ambient) {
  if (eta_r.rows() != alg.dim || eta_r.cols() != base.right.base.dim)
    throw DimensionError("comodule algebra: base embedding shape mismatch");
  std::vector<Matrix> act_r;
  for (std::size_t k = 0; k < eta_r.cols(); ++k)
    act_r.push_back(alg.right_mult(eta_r.col(k)));
  HopfComodule com = make_hopf_comodule(std::move(base), alg.dim, std::move(act_r),
                                        std::move(act_l), rho_r_ambient, rho_l_ambient);
  Subspace coinv = coinvariants(com.com_r);
  std::optional<Algebra> coinv_alg = subalgebra_on(alg, coinv);
  Matrix embed = coinv.basis_rows().transpose();
  return ComoduleAlgebra{std::move(alg),   std::move(eta_r),     std::move(com),
                         std::move(coinv), std::move(coinv_alg), std::move(embed)};
}

Report validate_comodule_algebra(const ComoduleAlgebra& a, const std::string& subject) {
  Report r;
  r.subject = subject;
  const Algebra& A = a.alg;
  const Algebra& H = a.com.base.total();
  const Field& f = A.field;
  std::size_t da = A.dim, dh = H.dim;
  bool shapes = a.com.dim() == da && a.com.com_l.dim == da &&
                a.eta_r.rows() == da && a.eta_r.cols() == a.com.base.right.base.dim;
  r.add("shape", shapes,
        shapes ? "" : "carrier, embedding and comodule dimensions disagree");
  if (!shapes) return r;

  r.merge(validate_algebra(A), "algebra");
  r.merge(validate_algebra_map(a.com.base.right.base, A, a.eta_r), "base_embedding");

  {  // the stored right base action is right multiplication along η_R
    bool ok = true;
    for (std::size_t k = 0; k < a.eta_r.cols(); ++k)
      ok = ok && a.com.com_r.right_act[k] == A.right_mult(a.eta_r.col(k));
    r.add("base_embedding.action", ok,
          ok ? "" : "right base action is not right multiplication by the embedded base");
  }

  r.merge(validate_hopf_comodule(a.com), "comodule");

  {  // unit colinearity
    Vec one_one = vec_kron(f, A.unit, H.unit);
    r.add("unit.colinear_r",
          a.com.com_r.coaction_q().apply(A.unit) ==
              a.com.com_r.product.proj().apply(one_one),
          "the unit does not map to 1⊗1 under the right-sided coaction");
    r.add("unit.colinear_l",
          a.com.com_l.coaction_q().apply(A.unit) ==
              a.com.com_l.product.proj().apply(one_one),
          "the unit does not map to 1⊗1 under the left-sided coaction");
  }

  {  // multiplicativity of both coactions, factorwise on canonical columns
    Matrix perm = tensor_permutation(f, {da, dh, da, dh}, {0, 2, 1, 3});
    Matrix collapse = Matrix::kron(A.mult, H.mult) * perm;
    auto check = [&](const char* name, const Matrix& coaction,
                     const QuotientSpace& product) {
      Matrix lhs = product.proj() * coaction * A.mult;
      Matrix rhs = product.proj() * collapse * Matrix::kron(coaction, coaction);
      std::string w;
      if (lhs != rhs) {
        for (std::size_t i = 0; i < da && w.empty(); ++i)
          for (std::size_t j = 0; j < da && w.empty(); ++j)
            if (lhs.col(i * da + j) != rhs.col(i * da + j))
              w = "product " + A.labels[i] + "·" + A.labels[j];
      }
      r.add(name, lhs == rhs, w);
    };
    check("mult.colinear_r", a.com.com_r.coaction, a.com.com_r.product);
    check("mult.colinear_l", a.com.com_l.coaction, a.com.com_l.product);
  }

  {  // coinvariants: stored span, unit, closure, cached algebra
    Subspace computed = coinvariants(a.com.com_r);
    r.add("coinvariants.span", a.coinv == computed,
          "stored coinvariant space differs from the computed one");
    r.add("coinvariants.unit", a.coinv.contains(A.unit),
          "the unit is not coinvariant");
    bool closed = true;
    std::string w;
    for (std::size_t i = 0; i < a.coinv.dim() && closed; ++i)
      for (std::size_t j = 0; j < a.coinv.dim() && closed; ++j) {
        Vec p = A.mul(a.coinv.basis_vector(i), a.coinv.basis_vector(j));
        if (!a.coinv.contains(p)) {
          closed = false;
          w = "product of coinvariant basis vectors " + std::to_string(i) + ", " +
              std::to_string(j) + " escapes";
        }
      }
    r.add("coinvariants.closed", closed, w);
    std::optional<Algebra> rebuilt = subalgebra_on(A, a.coinv);
    bool cache_ok = rebuilt.has_value() == a.coinv_alg.has_value();
    if (rebuilt && a.coinv_alg)
      cache_ok = cache_ok && rebuilt->dim == a.coinv_alg->dim &&
                 rebuilt->unit == a.coinv_alg->unit && rebuilt->mult == a.coinv_alg->mult;
    r.add("coinvariants.algebra", cache_ok,
          cache_ok ? "" : "cached coinvariant algebra is out of date");
    r.add("coinvariants.embedding",
          a.coinv_embed == a.coinv.basis_rows().transpose(),
          "stored embedding does not match the coinvariant basis");
  }

  {  // coinvariants commute with the embedded base
    bool ok = true;
    std::string w;
    for (std::size_t i = 0; i < a.coinv.dim() && ok; ++i)
      for (std::size_t k = 0; k < a.eta_r.cols() && ok; ++k) {
        Vec x = a.coinv.basis_vector(i), y = a.eta_r.col(k);
        if (A.mul(x, y) != A.mul(y, x)) {
          ok = false;
          w = "coinvariant basis vector " + std::to_string(i) +
              " does not commute with an embedded base element";
        }
      }
    r.add("coinvariants.commute_with_base", ok, w);
  }

  r.add("coinvariants.left_sided", coinvariants(a.com.com_l).contains(a.coinv),
        "a right-sided coinvariant is not left-sided coinvariant");
  return r;
}

ComoduleAlgebra regular_comodule_algebra(const HopfAlgebroid& h) {
  const Algebra& H = h.total();
  std::vector<Matrix> act_l;
  for (std::size_t k = 0; k < h.left.base.dim; ++k)
    act_l.push_back(H.left_mult(h.left.tgt.col(k)));
  return make_comodule_algebra(h, H, h.right.src, std::move(act_l),
                               h.right.coring.coproduct, h.left.coring.coproduct);
}

}  // namespace hopfgal
