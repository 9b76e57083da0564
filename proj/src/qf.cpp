#include "affalg/qf.hpp"

#include <vector>

#include "affalg/ybe.hpp"

namespace affalg {

namespace {

struct KindRow {
  AlgKind alg;
  FormSymmetry sym;
  bool zinbiel_leg;  // qf-zinbiel / connes condition
  bool prelie_leg;   // qf-prelie / qf-lie condition
  bool cyclic;       // connes / qf-lie flavour instead of the adjoint one
};

KindRow kind_row(const std::string& kind) {
  if (kind == "zinbiel")
    return {AlgKind::Zinbiel, FormSymmetry::symmetric, true, false, false};
  if (kind == "prelie")
    return {AlgKind::PreLie, FormSymmetry::symmetric, false, true, false};
  if (kind == "prepoisson")
    return {AlgKind::PrePoisson, FormSymmetry::symmetric, true, true, false};
  if (kind == "connes-assoc")
    return {AlgKind::CommAssoc, FormSymmetry::antisymmetric, true, false, true};
  if (kind == "lie")
    return {AlgKind::Lie, FormSymmetry::antisymmetric, false, true, true};
  if (kind == "poisson")
    return {AlgKind::Poisson, FormSymmetry::antisymmetric, true, true, true};
  throw Error("unknown quasi-frobenius kind '" + kind + "'");
}

std::string scalar_detail(const Rational& lhs, const Rational& rhs) {
  return "lhs = " + rat_str(lhs) + "; rhs = " + rat_str(rhs);
}

}  // namespace

CheckReport qf_check(const QuasiFrobenius& q) {
  KindRow row = kind_row(q.kind);
  if (q.algebra.kind != row.alg)
    throw Error("quasi-frobenius kind '" + q.kind + "' needs a " + kind_name(row.alg) +
                " algebra, got '" + kind_name(q.algebra.kind) + "'");
  q.algebra.validate();
  if (!(q.form.space() == q.algebra.space))
    throw Error("quasi-frobenius form lives on the wrong space");
  if (q.form.declared() != row.sym || !q.form.symmetry_ok())
    throw Error("quasi-frobenius kind '" + q.kind + "' needs a declared " +
                (row.sym == FormSymmetry::symmetric ? std::string("symmetric")
                                                    : std::string("antisymmetric")) +
                " form");
  if (!q.form.nondegenerate())
    throw Error("quasi-frobenius form must be nondegenerate");

  const BasisSpace& sp = q.algebra.space;
  int n = sp.dim();
  CheckReport rep;
  auto probe = [&](const std::string& id, int i, int j, int k, const Rational& lhs,
                   const Rational& rhs) {
    ++rep.checked;
    if (lhs != rhs)
      rep.fail({id, {sp.label(i), sp.label(j), sp.label(k)}, scalar_detail(lhs, rhs)});
  };

  if (row.zinbiel_leg) {
    const StructureConstants& p =
        q.algebra.product(row.cyclic ? "dot" : "zinbiel");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          Tensor ek = Tensor::basis(sp, k);
          if (row.cyclic) {
            Rational lhs = q.form.eval(p.prod_basis(i, j), ek) +
                           q.form.eval(p.prod_basis(j, k), Tensor::basis(sp, i)) +
                           q.form.eval(p.prod_basis(k, i), Tensor::basis(sp, j));
            probe("connes", i, j, k, lhs, 0);
          } else {
            Rational lhs =
                q.form.eval(p.prod_basis(i, j) + p.prod_basis(j, i), ek);
            Rational rhs = q.form.eval(Tensor::basis(sp, i), p.prod_basis(j, k)) +
                           q.form.eval(Tensor::basis(sp, j), p.prod_basis(i, k));
            probe("qf-zinbiel", i, j, k, lhs, rhs);
          }
        }
  }
  if (row.prelie_leg) {
    const StructureConstants& p =
        q.algebra.product(row.cyclic ? "bracket" : "prelie");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          Tensor ek = Tensor::basis(sp, k);
          if (row.cyclic) {
            Rational lhs = q.form.eval(p.prod_basis(i, j), ek) +
                           q.form.eval(p.prod_basis(j, k), Tensor::basis(sp, i)) +
                           q.form.eval(p.prod_basis(k, i), Tensor::basis(sp, j));
            probe("qf-lie", i, j, k, lhs, 0);
          } else {
            Rational lhs = q.form.eval(p.prod_basis(i, j), ek) -
                           q.form.eval(Tensor::basis(sp, i), p.prod_basis(j, k));
            Rational rhs = q.form.eval(p.prod_basis(j, i), ek) -
                           q.form.eval(Tensor::basis(sp, j), p.prod_basis(i, k));
            probe("qf-prelie", i, j, k, lhs, rhs);
          }
        }
  }
  return rep;
}

Tensor qf_to_r(const QuasiFrobenius& q) {
  std::vector<Tensor> duals = q.form.dual_basis();
  const BasisSpace& sp = q.algebra.space;
  Tensor r = Tensor::zero({sp, sp});
  for (int i = 0; i < sp.dim(); ++i)
    for (const auto& [key, v] : duals[static_cast<size_t>(i)].coeffs())
      r.add({i, key[0]}, v);
  return r;
}

EquivalenceReport equivalence_harness(const std::string& kind, const AlgebraBundle& a,
                                      const BilinearForm& varpi, int window_radius) {
  bool poisson_flavour;
  if (kind == "quasi-assoc")
    poisson_flavour = false;
  else if (kind == "quasi-poisson")
    poisson_flavour = true;
  else
    throw Error("equivalence_harness kinds: quasi-assoc, quasi-poisson");
  if (window_radius < 3)
    throw Error("equivalence_harness: window too small (radius must be at least 3)");

  const QuasiFrobenius qf{a, varpi, poisson_flavour ? "prepoisson" : "zinbiel"};
  EquivalenceReport out;
  CheckReport legs;

  // keep a bounded sample per leg so one flooding leg cannot crowd the others
  // out of the stored violations
  auto sample = [](CheckReport rep) {
    if (rep.violations.size() > 16) rep.violations.resize(16);
    return rep;
  };

  const CheckReport qf_rep = qf_check(qf);
  out.qf = qf_rep.passed();
  legs.merge(sample(qf_rep));

  const Tensor r = qf_to_r(qf);
  const std::vector<Tensor> res =
      residual(poisson_flavour ? YbeKind::PPYBE : YbeKind::ZYBE, a, r);
  out.residual_zero = true;
  CheckReport res_rep;
  for (size_t i = 0; i < res.size(); ++i) {
    ++res_rep.checked;
    if (res[i].is_zero()) continue;
    out.residual_zero = false;
    const auto& [key, v] = *res[i].coeffs().begin();
    res_rep.fail({i == 0 ? "zybe" : "plybe",
                  {a.space.label(key[0]), a.space.label(key[1]), a.space.label(key[2])},
                  "coefficient " + rat_str(v)});
  }
  legs.merge(sample(res_rep));

  const WindowedGradedAlgebra model = grperm_window(window_radius);
  const AdmissibleRegion region{window_radius, 2};
  const CheckReport lift_rep = lifted_residual_window(
      poisson_flavour ? YbeKind::PYBE : YbeKind::AYBE, a, model, r, region);
  out.lifted_residual_zero = lift_rep.passed();

  WindowedOperands ops;
  ops.model = &model;
  ops.algebra = &a;
  ops.form = &varpi;
  CheckReport form_rep = windowed_check("connes", ops, region);
  if (poisson_flavour) form_rep.merge(windowed_check("qf-lie", ops, region));
  out.form_cocycle = form_rep.passed();

  legs.merge(sample(form_rep));
  legs.merge(sample(lift_rep));

  out.details = legs;
  out.details.window = window_radius;
  out.details.margin = region.margin;
  if (!out.agree())
    out.details.fail({"equivalence-agreement",
                      {kind},
                      std::string("qf ") + (out.qf ? "passes" : "fails") + ", residual " +
                          (out.residual_zero ? "zero" : "nonzero") + ", lifted residual " +
                          (out.lifted_residual_zero ? "zero" : "nonzero") + ", form cocycle " +
                          (out.form_cocycle ? "passes" : "fails")});
  return out;
}

}  // namespace affalg
