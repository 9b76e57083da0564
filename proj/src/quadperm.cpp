#include "affalg/quadperm.hpp"

#include <utility>

namespace affalg {

QuadraticPermAlgebra::QuadraticPermAlgebra(AlgebraBundle perm_bundle, BilinearForm form)
    : perm(std::move(perm_bundle)), omega(std::move(form)) {
  if (perm.kind != AlgKind::Perm)
    throw Error("quadratic perm algebra needs a perm bundle, got '" + kind_name(perm.kind) +
                "'");
  perm.validate();
  if (omega.space() != perm.space)
    throw Error("quadratic form lives on a different space than the perm algebra");
  if (omega.declared() != FormSymmetry::antisymmetric || !omega.symmetry_ok())
    throw Error("quadratic perm form must be antisymmetric");
  if (!omega.nondegenerate()) throw Error("quadratic perm form must be nondegenerate");
  duals = omega.dual_basis();
}

const std::vector<Tensor>& dual_basis(const QuadraticPermAlgebra& q) { return q.duals; }

CheckReport verify_quadratic(const QuadraticPermAlgebra& q) {
  CheckReport rep = verify_structure(q.perm);
  const StructureConstants& m = q.perm.product("perm");
  const BasisSpace& sp = q.perm.space;
  int n = sp.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Tensor ei = Tensor::basis(sp, i);
        Tensor ej = Tensor::basis(sp, j);
        Tensor ek = Tensor::basis(sp, k);
        Rational inv = q.omega.eval(m.prod_basis(i, j), ek) -
                       q.omega.eval(ei, m.prod_basis(j, k)) +
                       q.omega.eval(ei, m.prod_basis(k, j));
        ++rep.checked;
        if (inv != 0)
          rep.fail({"omega-invariance",
                    {sp.label(i), sp.label(j), sp.label(k)},
                    "residual = " + rat_str(inv)});
        Rational der = q.omega.eval(m.prod_basis(i, j), ek) -
                       q.omega.eval(ej, m.prod_basis(i, k));
        ++rep.checked;
        if (der != 0)
          rep.fail({"omega-derived",
                    {sp.label(i), sp.label(j), sp.label(k)},
                    "residual = " + rat_str(der)});
      }
  return rep;
}

// ω̂(ν(e_i), e_l⊗e_m) = −ω(e_i, e_l⋄e_m) has the unique solution
// ν(e_i) = Σ_{l,m} R_i[l,m] f_l ⊗ f_m with R_i[l,m] = −ω(e_i, e_l⋄e_m),
// since ω̂(f_l⊗f_m, e_p⊗e_q) = δ_lp δ_mq.
Coproduct nu_from_omega(const QuadraticPermAlgebra& q) {
  const BasisSpace& sp = q.perm.space;
  const StructureConstants& m = q.perm.product("perm");
  int n = sp.dim();
  Coproduct nu(sp);
  for (int i = 0; i < n; ++i) {
    Tensor ei = Tensor::basis(sp, i);
    for (int l = 0; l < n; ++l)
      for (int mm = 0; mm < n; ++mm) {
        Rational r = -q.omega.eval(ei, m.prod_basis(l, mm));
        if (r == 0) continue;
        for (const auto& [kl, vl] : q.duals[l].coeffs())
          for (const auto& [km, vm] : q.duals[mm].coeffs())
            nu.add(i, kl[0], km[0], r * vl * vm);
      }
  }
  return nu;
}

CheckReport verify_perm_coalgebra(const Coproduct& nu) {
  CheckReport rep;
  const BasisSpace& sp = nu.space();
  for (int i = 0; i < sp.dim(); ++i) {
    Tensor t = nu.of_basis(i);
    Tensor a = nu.expand(t, 0);
    Tensor b = nu.expand(t, 1);
    ++rep.checked;
    Tensor r1 = a - b;
    if (!r1.is_zero()) rep.fail({"perm-co-1", {sp.label(i)}, "residual = " + r1.str()});
    ++rep.checked;
    Tensor r2 = b - permute3(a, Leg3Perm::swap12);
    if (!r2.is_zero()) rep.fail({"perm-co-2", {sp.label(i)}, "residual = " + r2.str()});
  }
  return rep;
}

}  // namespace affalg
