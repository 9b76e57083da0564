#include "affalg/bialgebra.hpp"

namespace affalg {

namespace {

const std::vector<std::pair<BialgKind, std::string>> kBiKindNames = {
    {BialgKind::Infinitesimal, "infinitesimal"}, {BialgKind::LieBi, "lie-bi"},
    {BialgKind::PoissonBi, "poisson-bi"},        {BialgKind::ZinbielBi, "zinbiel-bi"},
    {BialgKind::PreLieBi, "prelie-bi"},          {BialgKind::PrePoissonBi, "prepoisson-bi"},
};

// Pairwise compatibility displays, one evaluation per basis pair.
struct CompatChecker {
  const AlgebraBundle& alg;
  const CoalgebraBundle& coalg;
  CheckReport out;

  void expect_zero(const std::string& identity, int i, int j, const Tensor& residual) {
    ++out.checked;
    if (!residual.is_zero())
      out.fail({identity,
                {alg.space.label(i), alg.space.label(j)},
                "residual = " + residual.str()});
  }

  void infinitesimal(const StructureConstants& dot, const Coproduct& D) {
    int n = alg.space.dim();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Tensor lhs = D.of(dot.prod_basis(i, j));
        Tensor rhs = dot.left_mult(j).apply(D.of_basis(i), 0) +
                     dot.left_mult(i).apply(D.of_basis(j), 1);
        expect_zero("inf-bialg", i, j, lhs - rhs);
      }
  }

  void lie_bi(const StructureConstants& br, const Coproduct& d) {
    int n = alg.space.dim();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Tensor lhs = d.of(br.prod_basis(i, j));
        LinearMap adi = br.left_mult(i);
        LinearMap adj = br.left_mult(j);
        Tensor rhs = adi.apply(d.of_basis(j), 0) + adi.apply(d.of_basis(j), 1) -
                     adj.apply(d.of_basis(i), 0) - adj.apply(d.of_basis(i), 1);
        expect_zero("lie-bialg", i, j, lhs - rhs);
      }
  }

  void poisson_bi(const StructureConstants& dot, const StructureConstants& br,
                  const Coproduct& D, const Coproduct& d) {
    int n = alg.space.dim();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        LinearMap adi = br.left_mult(i);
        LinearMap uj = dot.left_mult(j);
        Tensor lhs1 = D.of(br.prod_basis(i, j));
        Tensor rhs1 = adi.apply(D.of_basis(j), 0) + adi.apply(D.of_basis(j), 1) +
                      uj.apply(d.of_basis(i), 0) - uj.apply(d.of_basis(i), 1);
        expect_zero("poisson-bialg-1", i, j, lhs1 - rhs1);
        LinearMap ui = dot.left_mult(i);
        LinearMap adj = br.left_mult(j);
        Tensor lhs2 = d.of(dot.prod_basis(i, j));
        Tensor rhs2 = ui.apply(d.of_basis(j), 0) + uj.apply(d.of_basis(i), 0) +
                      adi.apply(D.of_basis(j), 1) + adj.apply(D.of_basis(i), 1);
        expect_zero("poisson-bialg-2", i, j, lhs2 - rhs2);
      }
  }

  void zinbiel_bi(const StructureConstants& z, const Coproduct& vt) {
    int n = alg.space.dim();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        LinearMap fli = z.left_mult(i);
        LinearMap flj = z.left_mult(j);
        LinearMap frj = z.right_mult(j);
        Tensor ti = vt.of_basis(i);
        Tensor tj = vt.of_basis(j);
        Tensor prod = vt.of(z.prod_basis(i, j));
        Tensor lhs1 = prod + flip(prod);
        Tensor rhs1 = frj.apply(ti, 1) + fli.apply(tj, 0) + flip(fli.apply(tj, 1));
        expect_zero("zinbiel-bialg-1", i, j, lhs1 - rhs1);
        Tensor lhs2 = vt.of(z.prod_basis(i, j) + z.prod_basis(j, i));
        Tensor rhs2 = fli.apply(tj, 0) + flj.apply(ti, 1) + frj.apply(ti, 1);
        expect_zero("zinbiel-bialg-2", i, j, lhs2 - rhs2);
      }
  }

  void prelie_bi(const StructureConstants& p, const Coproduct& th) {
    int n = alg.space.dim();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        LinearMap lhi = p.left_mult(i);
        LinearMap lhj = p.left_mult(j);
        LinearMap rhi = p.right_mult(i);
        LinearMap rhj = p.right_mult(j);
        Tensor ti = th.of_basis(i);
        Tensor tj = th.of_basis(j);
        Tensor si = ti - flip(ti);
        Tensor sj = tj - flip(tj);
        Tensor prod = th.of(p.prod_basis(i, j));
        Tensor res1 = prod - flip(prod) - lhi.apply(sj, 0) - lhi.apply(sj, 1) -
                      rhj.apply(ti, 1) + rhj.apply(flip(ti), 0);
        expect_zero("prelie-bialg-1", i, j, res1);
        Tensor res2 = th.of(p.prod_basis(i, j) - p.prod_basis(j, i)) -
                      (rhj - lhj).apply(ti, 1) - (lhi - rhi).apply(tj, 1) -
                      lhi.apply(tj, 0) + lhj.apply(ti, 0);
        expect_zero("prelie-bialg-2", i, j, res2);
      }
  }

  void prepoisson_bi(const StructureConstants& z, const StructureConstants& p,
                     const Coproduct& vt, const Coproduct& th) {
    int n = alg.space.dim();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        LinearMap fli = z.left_mult(i);
        LinearMap frj = z.right_mult(j);
        LinearMap flfri = z.left_mult(i) + z.right_mult(i);
        LinearMap flfrj = z.left_mult(j) + z.right_mult(j);
        LinearMap flj = z.left_mult(j);
        LinearMap lhi = p.left_mult(i);
        LinearMap lhj = p.left_mult(j);
        LinearMap rhi = p.right_mult(i);
        LinearMap rhj = p.right_mult(j);
        Tensor vi = vt.of_basis(i);
        Tensor vj = vt.of_basis(j);
        Tensor ti = th.of_basis(i);
        Tensor tj = th.of_basis(j);
        Tensor vsj = vj + flip(vj);
        Tensor tsj = tj - flip(tj);

        Tensor lhs1 = th.of(z.prod_basis(i, j) + z.prod_basis(j, i));
        Tensor rhs1 = flfrj.apply(ti, 1) + flfri.apply(tj, 1) - lhi.apply(vj, 0) -
                      lhj.apply(vi, 0);
        expect_zero("prepoisson-bialg-1", i, j, lhs1 - rhs1);

        Tensor lhs2 = vt.of(p.prod_basis(i, j) - p.prod_basis(j, i));
        Tensor rhs2 = flj.apply(ti, 0) - flfrj.apply(ti, 1) + lhi.apply(vj, 0) +
                      (lhi - rhi).apply(vj, 1);
        expect_zero("prepoisson-bialg-2", i, j, lhs2 - rhs2);

        Tensor circ = vt.of(p.prod_basis(i, j));
        Tensor lhs3 = circ + flip(circ);
        Tensor rhs3 = -frj.apply(ti, 1) - frj.apply(flip(ti), 0) + lhi.apply(vsj, 0) +
                      lhi.apply(vsj, 1);
        expect_zero("prepoisson-bialg-3", i, j, lhs3 - rhs3);

        Tensor star = th.of(z.prod_basis(i, j));
        Tensor lhs4 = star - flip(star);
        Tensor rhs4 = frj.apply(ti, 1) + fli.apply(tsj, 1) + rhj.apply(flip(vi), 0) -
                      lhi.apply(vsj, 0);
        expect_zero("prepoisson-bialg-4", i, j, lhs4 - rhs4);
      }
  }
};

}  // namespace

std::string bikind_name(BialgKind k) {
  for (const auto& [kind, name] : kBiKindNames)
    if (kind == k) return name;
  throw Error("unknown bialgebra kind");
}

std::optional<BialgKind> bikind_from_name(std::string_view s) {
  for (const auto& [kind, name] : kBiKindNames)
    if (name == s) return kind;
  return std::nullopt;
}

AlgKind bialg_algebra_kind(BialgKind k) {
  switch (k) {
    case BialgKind::Infinitesimal: return AlgKind::CommAssoc;
    case BialgKind::LieBi: return AlgKind::Lie;
    case BialgKind::PoissonBi: return AlgKind::Poisson;
    case BialgKind::ZinbielBi: return AlgKind::Zinbiel;
    case BialgKind::PreLieBi: return AlgKind::PreLie;
    case BialgKind::PrePoissonBi: return AlgKind::PrePoisson;
  }
  throw Error("unknown bialgebra kind");
}

CoalgKind bialg_coalgebra_kind(BialgKind k) {
  return coalgebra_kind_of(bialg_algebra_kind(k));
}

void BialgebraBundle::validate() const {
  algebra.validate();
  coalgebra.validate();
  if (algebra.kind != bialg_algebra_kind(kind))
    throw Error("bialgebra '" + bikind_name(kind) + "' cannot carry a '" +
                kind_name(algebra.kind) + "' algebra");
  if (coalgebra.kind != bialg_coalgebra_kind(kind))
    throw Error("bialgebra '" + bikind_name(kind) + "' cannot carry a '" +
                cokind_name(coalgebra.kind) + "' coalgebra");
  if (algebra.space != coalgebra.space)
    throw Error("bialgebra components live on different spaces");
}

CheckReport verify_bialgebra(const BialgebraBundle& bundle) {
  bundle.validate();
  CheckReport rep = verify_structure(bundle.algebra);
  rep.merge(verify_costructure(bundle.coalgebra));
  CompatChecker ck{bundle.algebra, bundle.coalgebra, {}};
  switch (bundle.kind) {
    case BialgKind::Infinitesimal:
      ck.infinitesimal(bundle.algebra.product("dot"), bundle.coalgebra.coproduct("Delta"));
      break;
    case BialgKind::LieBi:
      ck.lie_bi(bundle.algebra.product("bracket"), bundle.coalgebra.coproduct("delta"));
      break;
    case BialgKind::PoissonBi:
      ck.infinitesimal(bundle.algebra.product("dot"), bundle.coalgebra.coproduct("Delta"));
      ck.lie_bi(bundle.algebra.product("bracket"), bundle.coalgebra.coproduct("delta"));
      ck.poisson_bi(bundle.algebra.product("dot"), bundle.algebra.product("bracket"),
                    bundle.coalgebra.coproduct("Delta"), bundle.coalgebra.coproduct("delta"));
      break;
    case BialgKind::ZinbielBi:
      ck.zinbiel_bi(bundle.algebra.product("zinbiel"), bundle.coalgebra.coproduct("vartheta"));
      break;
    case BialgKind::PreLieBi:
      ck.prelie_bi(bundle.algebra.product("prelie"), bundle.coalgebra.coproduct("theta"));
      break;
    case BialgKind::PrePoissonBi:
      ck.zinbiel_bi(bundle.algebra.product("zinbiel"), bundle.coalgebra.coproduct("vartheta"));
      ck.prelie_bi(bundle.algebra.product("prelie"), bundle.coalgebra.coproduct("theta"));
      ck.prepoisson_bi(bundle.algebra.product("zinbiel"), bundle.algebra.product("prelie"),
                       bundle.coalgebra.coproduct("vartheta"),
                       bundle.coalgebra.coproduct("theta"));
      break;
  }
  rep.merge(ck.out);
  return rep;
}

}  // namespace affalg
