#include "affalg/induce.hpp"

#include <utility>
#include <vector>

#include "affalg/bialgebra.hpp"
#include "affalg/qf.hpp"

namespace affalg {

namespace {

const StructureConstants& zinbiel_of(const AlgebraBundle& a) {
  if (a.kind != AlgKind::Zinbiel && a.kind != AlgKind::PrePoisson)
    throw Error("induced 'assoc' needs a zinbiel or prepoisson algebra, got '" +
                kind_name(a.kind) + "'");
  return a.product("zinbiel");
}

const StructureConstants& prelie_of(const AlgebraBundle& a) {
  if (a.kind != AlgKind::PreLie && a.kind != AlgKind::PrePoisson)
    throw Error("induced 'lie' needs a prelie or prepoisson algebra, got '" +
                kind_name(a.kind) + "'");
  return a.product("prelie");
}

const Coproduct& vartheta_of(const CoalgebraBundle& c) {
  if (c.kind != CoalgKind::ZinbielCo && c.kind != CoalgKind::PrePoissonCo)
    throw Error("induced 'Delta' needs a zinbiel-co or prepoisson-co coalgebra, got '" +
                cokind_name(c.kind) + "'");
  return c.coproduct("vartheta");
}

const Coproduct& theta_of(const CoalgebraBundle& c) {
  if (c.kind != CoalgKind::PreLieCo && c.kind != CoalgKind::PrePoissonCo)
    throw Error("induced 'delta' needs a prelie-co or prepoisson-co coalgebra, got '" +
                cokind_name(c.kind) + "'");
  return c.coproduct("theta");
}

// One symmetrization pass: out(y1,y2) += a(p,q)⊗b(u,v) placed straight and,
// with `sign`, with both factors reversed.
void fill_product(StructureConstants& out, const StructureConstants& a,
                  const StructureConstants& b, int dim_b, int sign) {
  for (const auto& [ka, va] : a.coeffs())
    for (const auto& [kb, vb] : b.coeffs()) {
      Rational v = va * vb;
      out.add(pair_index(ka[0], kb[0], dim_b), pair_index(ka[1], kb[1], dim_b),
              pair_index(ka[2], kb[2], dim_b), v);
      out.add(pair_index(ka[1], kb[1], dim_b), pair_index(ka[0], kb[0], dim_b),
              pair_index(ka[2], kb[2], dim_b), sign > 0 ? v : -v);
    }
}

AlgebraBundle induce_product_impl(const std::string& kind, const AlgebraBundle& a,
                                  const StructureConstants& bprod,
                                  const BasisSpace& bspace) {
  if (kind != "assoc" && kind != "lie" && kind != "poisson")
    throw Error("unknown induced product kind '" + kind + "'");
  if (kind == "poisson" && a.kind != AlgKind::PrePoisson)
    throw Error("induced 'poisson' needs a prepoisson algebra, got '" +
                kind_name(a.kind) + "'");
  AlgKind out_kind = kind == "assoc"   ? AlgKind::CommAssoc
                     : kind == "lie"   ? AlgKind::Lie
                                       : AlgKind::Poisson;
  AlgebraBundle out = make_bundle(out_kind, pair_space(a.space, bspace));
  int db = bspace.dim();
  if (kind == "assoc" || kind == "poisson")
    fill_product(out.products.at("dot"), zinbiel_of(a), bprod, db, 1);
  if (kind == "lie" || kind == "poisson")
    fill_product(out.products.at("bracket"), prelie_of(a), bprod, db, -1);
  return out;
}

StructureConstants window_product(const WindowedGradedAlgebra& model) {
  StructureConstants out(model.space());
  int dim = model.space().dim();
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      MonoProd p = model.diamond(model.mono(i), model.mono(j));
      if (p.in_window) out.set(i, j, model.index(p.value), 1);
    }
  return out;
}

Coproduct induce_coproduct_impl(const std::string& kind, const CoalgebraBundle& coalg,
                                const Coproduct& nu, const BasisSpace& bspace) {
  if (kind != "Delta" && kind != "delta")
    throw Error("unknown induced coproduct kind '" + kind + "'");
  bool big = kind == "Delta";
  const Coproduct& aco = big ? vartheta_of(coalg) : theta_of(coalg);
  Coproduct out(pair_space(coalg.space, bspace));
  int db = bspace.dim();
  for (const auto& [ka, va] : aco.coeffs())
    for (const auto& [kb, vb] : nu.coeffs()) {
      Rational v = va * vb;
      int src = pair_index(ka[0], kb[0], db);
      out.add(src, pair_index(ka[1], kb[1], db), pair_index(ka[2], kb[2], db), v);
      out.add(src, pair_index(ka[2], kb[2], db), pair_index(ka[1], kb[1], db),
              big ? v : -v);
    }
  return out;
}

}  // namespace

AlgebraBundle induce_product(const std::string& kind, const AlgebraBundle& a,
                             const AlgebraBundle& b_perm) {
  if (b_perm.kind != AlgKind::Perm)
    throw Error("induced products need a perm algebra factor, got '" +
                kind_name(b_perm.kind) + "'");
  return induce_product_impl(kind, a, b_perm.product("perm"), b_perm.space);
}

AlgebraBundle induce_product(const std::string& kind, const AlgebraBundle& a,
                             const WindowedGradedAlgebra& model) {
  return induce_product_impl(kind, a, window_product(model), model.space());
}

Coproduct induce_coproduct(const std::string& kind, const CoalgebraBundle& coalg,
                           const QuadraticPermAlgebra& q) {
  return induce_coproduct_impl(kind, coalg, nu_from_omega(q), q.perm.space);
}

Coproduct induce_coproduct(const std::string& kind, const CoalgebraBundle& coalg,
                           const WindowedGradedAlgebra& model) {
  return induce_coproduct_impl(kind, coalg, nu_from_omega(model), model.space());
}

BilinearForm induce_form(const BilinearForm& varpi, const BilinearForm& omega) {
  FormSymmetry sym = FormSymmetry::none;
  if (varpi.declared() != FormSymmetry::none && omega.declared() != FormSymmetry::none)
    sym = varpi.declared() == omega.declared() ? FormSymmetry::symmetric
                                               : FormSymmetry::antisymmetric;
  BilinearForm out(pair_space(varpi.space(), omega.space()), sym);
  int db = omega.space().dim();
  for (const auto& [ka, va] : varpi.entries())
    for (const auto& [kb, vb] : omega.entries())
      out.set(pair_index(ka.first, kb.first, db), pair_index(ka.second, kb.second, db),
              va * vb);
  return out;
}

CheckReport converse_probe(const std::string& kind, const ConverseCandidate& candidate,
                           int window_radius) {
  WindowedGradedAlgebra model(window_radius);
  WindowedOperands ops{&model, candidate.algebra, candidate.coalgebra, candidate.form};

  auto need_alg = [&](AlgKind k) -> const AlgebraBundle& {
    if (!candidate.algebra || candidate.algebra->kind != k)
      throw Error("converse probe '" + kind + "' needs a " + kind_name(k) + " candidate");
    return *candidate.algebra;
  };
  auto need_coalg = [&](CoalgKind k) -> const CoalgebraBundle& {
    if (!candidate.coalgebra || candidate.coalgebra->kind != k)
      throw Error("converse probe '" + kind + "' needs a " + cokind_name(k) + " candidate");
    return *candidate.coalgebra;
  };
  auto need_form = [&]() -> const BilinearForm& {
    if (!candidate.form) throw Error("converse probe '" + kind + "' needs a form candidate");
    return *candidate.form;
  };

  CheckReport direct;
  std::vector<std::pair<std::string, int>> ids;  // identity, margin
  if (kind == "zinbiel") {
    direct = verify_structure(need_alg(AlgKind::Zinbiel));
    ids = {{"comm", 2}, {"assoc", 2}};
  } else if (kind == "prepoisson") {
    direct = verify_structure(need_alg(AlgKind::PrePoisson));
    ids = {{"comm", 2}, {"assoc", 2}, {"antisym", 2}, {"jacobi", 2}, {"leibniz", 2}};
  } else if (kind == "zinbiel-co") {
    direct = verify_costructure(need_coalg(CoalgKind::ZinbielCo));
    ids = {{"cocomm", 2}, {"coassoc", 2}};
  } else if (kind == "prepoisson-co") {
    direct = verify_costructure(need_coalg(CoalgKind::PrePoissonCo));
    ids = {{"cocomm", 2}, {"coassoc", 2}, {"co-antisym", 2}, {"co-jacobi", 2},
           {"poisson-co", 2}};
  } else if (kind == "zinbiel-bi") {
    BialgebraBundle bb{BialgKind::ZinbielBi, need_alg(AlgKind::Zinbiel),
                       need_coalg(CoalgKind::ZinbielCo)};
    direct = verify_bialgebra(bb);
    ids = {{"comm", 2}, {"assoc", 2}, {"cocomm", 2}, {"coassoc", 2}, {"inf-bialg", 3}};
  } else if (kind == "prepoisson-bi") {
    BialgebraBundle bb{BialgKind::PrePoissonBi, need_alg(AlgKind::PrePoisson),
                       need_coalg(CoalgKind::PrePoissonCo)};
    direct = verify_bialgebra(bb);
    ids = {{"comm", 2},      {"assoc", 2},     {"antisym", 2},   {"jacobi", 2},
           {"leibniz", 2},   {"cocomm", 2},    {"coassoc", 2},   {"co-antisym", 2},
           {"co-jacobi", 2}, {"poisson-co", 2}, {"inf-bialg", 3}, {"lie-bialg", 3},
           {"poisson-bialg-1", 3}, {"poisson-bialg-2", 3}};
  } else if (kind == "connes") {
    direct = qf_check({need_alg(AlgKind::Zinbiel), need_form(), "zinbiel"});
    ids = {{"connes", 2}};
  } else if (kind == "qf") {
    direct = qf_check({need_alg(AlgKind::PrePoisson), need_form(), "prepoisson"});
    ids = {{"connes", 2}, {"qf-lie", 2}};
  } else {
    throw Error("unknown converse probe kind '" + kind + "'");
  }

  CheckReport windowed;
  for (const auto& [id, margin] : ids)
    windowed.merge(windowed_check(id, ops, {window_radius, margin}));

  CheckReport out = direct;
  out.merge(windowed);
  if (direct.passed() != windowed.passed())
    out.fail({"converse-agreement",
              {kind},
              std::string("direct check ") + (direct.passed() ? "passes" : "fails") +
                  " but the windowed induced check " +
                  (windowed.passed() ? "passes" : "fails")});
  return out;
}

}  // namespace affalg
