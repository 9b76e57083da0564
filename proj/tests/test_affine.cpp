#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "affalg/bialgebra.hpp"
#include "affalg/induce.hpp"
#include "affalg/qf.hpp"

using namespace affalg;

namespace {

struct RatGen {
  unsigned long long state;
  explicit RatGen(unsigned long long seed) : state(seed) {}
  unsigned long long next() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state >> 33;
  }
  Rational rational() {
    long num = static_cast<long>(next() % 19) - 9;
    long den = 1 + static_cast<long>(next() % 7);
    return rat(num, den);
  }
};

bool has_violation(const CheckReport& rep, const std::string& id) {
  for (const auto& v : rep.violations)
    if (v.identity == id) return true;
  return false;
}

bool has_violation_at(const CheckReport& rep, const std::string& id,
                      const std::vector<std::string>& where) {
  for (const auto& v : rep.violations)
    if (v.identity == id && v.where == where) return true;
  return false;
}

BasisSpace e_space(int n) { return BasisSpace::numbered("A", "e", n); }

AlgebraBundle zinbiel2() {
  AlgebraBundle b = make_bundle(AlgKind::Zinbiel, e_space(2));
  b.products.at("zinbiel").set(0, 0, 1, 1);  // e1*e1 = e2
  return b;
}

// Truncated polynomials t, t^2, t^3 with t^a * t^b = b/(a+b) t^{a+b}.
AlgebraBundle zinbiel3() {
  AlgebraBundle b = make_bundle(AlgKind::Zinbiel, e_space(3));
  b.products.at("zinbiel").set(0, 0, 1, rat(1, 2));
  b.products.at("zinbiel").set(0, 1, 2, rat(2, 3));
  b.products.at("zinbiel").set(1, 0, 2, rat(1, 3));
  return b;
}

// e1*e1 = e2; e1○e1 = e1, e1○e2 = e2○e1 = e2.
AlgebraBundle prepoisson2() {
  AlgebraBundle b = make_bundle(AlgKind::PrePoisson, e_space(2));
  b.products.at("zinbiel").set(0, 0, 1, 1);
  b.products.at("prelie").set(0, 0, 0, 1);
  b.products.at("prelie").set(0, 1, 1, 1);
  b.products.at("prelie").set(1, 0, 1, 1);
  return b;
}

// e1*e1 = a e2; e1○e1 = b e1 + c e2, e1○e2 = e2○e1 = b e2.
AlgebraBundle two_dim_family(const std::vector<Rational>& abc) {
  AlgebraBundle b = make_bundle(AlgKind::PrePoisson, e_space(2));
  b.products.at("zinbiel").set(0, 0, 1, abc[0]);
  b.products.at("prelie").set(0, 0, 0, abc[1]);
  b.products.at("prelie").set(0, 0, 1, abc[2]);
  b.products.at("prelie").set(0, 1, 1, abc[1]);
  b.products.at("prelie").set(1, 0, 1, abc[1]);
  return b;
}

CoalgebraBundle zinbiel_co2() {
  CoalgebraBundle b = make_cobundle(CoalgKind::ZinbielCo, e_space(2));
  b.coproducts.at("vartheta").set(0, 1, 1, 1);  // vartheta(e1) = e2⊗e2
  return b;
}

// theta(e1) = e1⊗e2 + e2⊗e1, theta(e2) = e2⊗e2.
CoalgebraBundle prepoisson_co2() {
  CoalgebraBundle b = make_cobundle(CoalgKind::PrePoissonCo, e_space(2));
  b.coproducts.at("vartheta").set(0, 1, 1, 1);
  b.coproducts.at("theta").set(0, 0, 1, 1);
  b.coproducts.at("theta").set(0, 1, 0, 1);
  b.coproducts.at("theta").set(1, 1, 1, 1);
  return b;
}

// x2◇x1 = x1, x2◇x2 = x2 with ω(x2, x1) = 1.
AlgebraBundle perm2() {
  AlgebraBundle b = make_bundle(AlgKind::Perm, BasisSpace::numbered("B", "x", 2));
  b.products.at("perm").set(1, 0, 0, 1);
  b.products.at("perm").set(1, 1, 1, 1);
  return b;
}

BilinearForm omega2() {
  BilinearForm f(perm2().space, FormSymmetry::antisymmetric);
  f.set(1, 0, 1);
  f.set(0, 1, -1);
  return f;
}

// ϖ(e1,e2) = ϖ(e2,e1) = 1, the invariant form of the two-dimensional fixtures.
BilinearForm varpi2() {
  BilinearForm f(e_space(2), FormSymmetry::symmetric);
  f.set(0, 1, 1);
  f.set(1, 0, 1);
  return f;
}

BilinearForm identity_form2() {
  BilinearForm f(e_space(2), FormSymmetry::symmetric);
  f.set(0, 0, 1);
  f.set(1, 1, 1);
  return f;
}

int pi(const WindowedGradedAlgebra& model, int a, const Mono& m) {
  return pair_index(a, model.index(m), model.space().dim());
}

std::string plabel(const BasisSpace& base, int a, const Mono& m) {
  return base.label(a) + "⊗" + m.label();
}

}  // namespace

TEST_CASE("window model stores shifted monomial products and the residue pairing") {
  WindowedGradedAlgebra model = grperm_window(2);
  CHECK(model.window_radius() == 2);
  CHECK(model.space().dim() == 50);
  CHECK(Mono{1, -2, 2}.label() == "(1,-2,2)");
  CHECK(Mono{0, 0, 1}.degree() == 1);
  CHECK(Mono{1, 1, 2}.degree() == 3);

  for (int i = 0; i < model.space().dim(); ++i) {
    CHECK(model.index(model.mono(i)) == i);
    CHECK(model.space().label(i) == model.mono(i).label());
  }
  CHECK(model.in_window({2, -2, 1}));
  CHECK(!model.in_window({3, 0, 1}));
  CHECK(!model.in_window({0, 0, 3}));
  CHECK_THROWS_AS(model.index({3, 0, 1}), Error);
  CHECK_THROWS_AS(model.mono(50), Error);
  CHECK_THROWS_AS(grperm_window(0), Error);

  // Products append the first factor's own variable and keep the second slot.
  CHECK(model.diamond({0, 0, 1}, {0, 0, 1}).value == Mono{1, 0, 1});
  CHECK(model.diamond({0, 0, 1}, {0, 0, 2}).value == Mono{1, 0, 2});
  CHECK(model.diamond({0, 0, 2}, {0, 0, 1}).value == Mono{0, 1, 1});
  CHECK(model.diamond({0, 0, 2}, {0, 0, 2}).value == Mono{0, 1, 2});
  CHECK(model.diamond({0, 1, 2}, {0, 0, 1}).value == Mono{0, 2, 1});
  CHECK(model.diamond({0, 1, 2}, {0, 0, 1}).in_window);
  MonoProd out = model.diamond({2, 0, 1}, {0, 0, 1});
  CHECK(out.value == Mono{3, 0, 1});
  CHECK(!out.in_window);

  CHECK(model.omega_eval({1, 1, 2}, {-1, -1, 1}) == 1);
  CHECK(model.omega_eval({-1, -1, 1}, {1, 1, 2}) == -1);
  CHECK(model.omega_eval({1, 1, 2}, {-1, -1, 2}) == 0);
  CHECK(model.omega_eval({1, 1, 2}, {-1, 0, 1}) == 0);
  CHECK(model.omega_grade() == 2);

  BilinearForm om = model.omega();
  CHECK(om.declared() == FormSymmetry::antisymmetric);
  CHECK(om.symmetry_ok());
  CHECK(om.nondegenerate());
  CHECK(om.eval(model.index({1, 1, 2}), model.index({-1, -1, 1})) == 1);
  CHECK(om.eval(model.index({0, 0, 1}), model.index({0, 0, 2})) == -1);
}

TEST_CASE("window model identities hold exactly on every admissible box") {
  WindowedGradedAlgebra model = grperm_window(3);
  WindowedOperands ops{&model, nullptr, nullptr, nullptr};
  for (const char* id : {"grading", "omega-invariance", "omega-derived"}) {
    CheckReport rep = windowed_check(id, ops, {3, 1});
    CHECK(rep.passed());
    CHECK(rep.checked > 0);
    CHECK(rep.skipped == 0);
    CHECK(rep.window == 3);
    CHECK(rep.margin == 1);
  }
}

TEST_CASE("windowed comultiplication solves the pairing equation") {
  WindowedGradedAlgebra model = grperm_window(2);
  Coproduct nu = nu_from_omega(model);
  BilinearForm om = model.omega();

  // Defining property against in-window probes; the product may leave the
  // window, the pairing of raw monomials is still total.
  for (int b1 = 0; b1 < model.space().dim(); ++b1) {
    Tensor nb = nu.of_basis(b1);
    for (int s2 = 1; s2 <= 2; ++s2)
      for (int i1 = -1; i1 <= 1; ++i1)
        for (int i2 = -1; i2 <= 1; ++i2)
          for (int s3 = 1; s3 <= 2; ++s3) {
            Mono b2{i1, i2, s2}, b3{-i1, i2, s3};
            Tensor probe = outer(Tensor::basis(model.space(), model.index(b2)),
                                 Tensor::basis(model.space(), model.index(b3)));
            Rational want = -model.omega_eval(model.mono(b1), model.diamond(b2, b3).value);
            CHECK(pairing_multi(nb, probe, om) == want);
          }
  }

  WindowedGradedAlgebra big = grperm_window(3);
  Coproduct nu3 = nu_from_omega(big);
  CHECK(nu3.of_basis(big.index({0, 0, 1})).term_count() == 84);
  CHECK(nu3.coeff(big.index({0, 0, 1}), big.index({0, 0, 1}), big.index({0, 1, 1})) == 1);
  CHECK(nu3.coeff(big.index({0, 0, 1}), big.index({1, 1, 2}), big.index({0, -1, 1})) == -1);
  CHECK(nu3.coeff(big.index({0, 0, 2}), big.index({2, -1, 1}), big.index({-2, 2, 2})) == 1);

  WindowedOperands ops{&big, nullptr, nullptr, nullptr};
  for (const char* id : {"perm-co-1", "perm-co-2"}) {
    CheckReport rep = windowed_check(id, ops, {3, 2});
    CHECK(rep.passed());
    CHECK(rep.checked == 18);
  }
}

TEST_CASE("quadratic perm bundles validate shape and expose dual bases") {
  QuadraticPermAlgebra q(perm2(), omega2());
  CHECK(dual_basis(q).size() == 2);
  CHECK(dual_basis(q)[0].coeff({1, 0, 0}) == 1);  // f1 = x2
  CHECK(dual_basis(q)[0].term_count() == 1);
  CHECK(dual_basis(q)[1].coeff({0, 0, 0}) == -1);  // f2 = -x1
  CHECK(dual_basis(q)[1].term_count() == 1);

  CheckReport rep = verify_quadratic(q);
  CHECK(rep.passed());
  CHECK(has_violation(rep, "omega-invariance") == false);
  CHECK(rep.checked > 0);

  BilinearForm doubled(perm2().space, FormSymmetry::antisymmetric);
  doubled.set(1, 0, 2);
  doubled.set(0, 1, -2);
  QuadraticPermAlgebra q2(perm2(), doubled);
  CHECK(dual_basis(q2)[0].coeff({1, 0, 0}) == rat(1, 2));

  CHECK_THROWS_AS(QuadraticPermAlgebra(zinbiel2(), omega2()), Error);
  BilinearForm sym(perm2().space, FormSymmetry::symmetric);
  sym.set(0, 1, 1);
  sym.set(1, 0, 1);
  CHECK_THROWS_AS(QuadraticPermAlgebra(perm2(), sym), Error);
  BilinearForm degenerate(perm2().space, FormSymmetry::antisymmetric);
  CHECK_THROWS_AS(QuadraticPermAlgebra(perm2(), degenerate), Error);
  BilinearForm elsewhere(e_space(2), FormSymmetry::antisymmetric);
  elsewhere.set(0, 1, 1);
  elsewhere.set(1, 0, -1);
  CHECK_THROWS_AS(QuadraticPermAlgebra(perm2(), elsewhere), Error);
}

TEST_CASE("finite comultiplication from the quadratic form") {
  QuadraticPermAlgebra q(perm2(), omega2());
  Coproduct nu = nu_from_omega(q);
  CHECK(nu.coeff(0, 0, 0) == 1);  // ν(x1) = x1⊗x1
  CHECK(nu.of_basis(0).term_count() == 1);
  CHECK(nu.coeff(1, 0, 1) == 1);  // ν(x2) = x1⊗x2
  CHECK(nu.of_basis(1).term_count() == 1);

  const StructureConstants& m = q.perm.product("perm");
  const BasisSpace& sp = q.perm.space;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) {
        Tensor probe = outer(Tensor::basis(sp, j), Tensor::basis(sp, k));
        Rational want = -q.omega.eval(Tensor::basis(sp, i), m.prod_basis(j, k));
        CHECK(pairing_multi(nu.of_basis(i), probe, q.omega) == want);
      }

  CHECK(verify_perm_coalgebra(nu).passed());
}

TEST_CASE("induced products over a finite perm factor") {
  AlgebraBundle pois = induce_product("poisson", prepoisson2(), perm2());
  CHECK(pois.kind == AlgKind::Poisson);
  CHECK(pois.space.dim() == 4);
  CHECK(pois.space.label(0) == "e1⊗x1");
  CHECK(pois.space.label(3) == "e2⊗x2");

  // Basis order: e1⊗x1, e1⊗x2, e2⊗x1, e2⊗x2.
  const StructureConstants& dot = pois.product("dot");
  CHECK(dot.coeff(0, 1, 2) == 1);  // (e1⊗x1)(e1⊗x2) = e2⊗x1
  CHECK(dot.coeff(1, 0, 2) == 1);
  CHECK(dot.coeff(1, 1, 3) == 2);  // (e1⊗x2)(e1⊗x2) = 2 e2⊗x2
  CHECK(dot.coeffs().size() == 3);

  const StructureConstants& br = pois.product("bracket");
  CHECK(br.coeff(0, 1, 0) == -1);  // [e1⊗x1, e1⊗x2] = -(e1⊗x1)
  CHECK(br.coeff(0, 3, 2) == -1);  // [e1⊗x1, e2⊗x2] = -(e2⊗x1)
  CHECK(br.coeff(1, 2, 2) == 1);   // [e1⊗x2, e2⊗x1] = e2⊗x1
  CHECK(br.coeff(1, 0, 0) == 1);
  CHECK(br.coeff(3, 0, 2) == 1);
  CHECK(br.coeff(2, 1, 2) == -1);
  CHECK(br.coeffs().size() == 6);

  CHECK(verify_structure(pois).passed());

  AlgebraBundle lie = induce_product("lie", prepoisson2(), perm2());
  CHECK(lie.kind == AlgKind::Lie);
  CHECK(lie.product("bracket").coeffs() == br.coeffs());
  CHECK(verify_structure(lie).passed());

  AlgebraBundle assoc = induce_product("assoc", zinbiel2(), perm2());
  CHECK(assoc.kind == AlgKind::CommAssoc);
  CHECK(assoc.product("dot").coeffs() == dot.coeffs());
  CHECK(verify_structure(assoc).passed());

  CHECK_THROWS_AS(induce_product("assoc", lie, perm2()), Error);
  CHECK_THROWS_AS(induce_product("poisson", zinbiel2(), perm2()), Error);
  CHECK_THROWS_AS(induce_product("dot", prepoisson2(), perm2()), Error);
  CHECK_THROWS_AS(induce_product("assoc", zinbiel2(), zinbiel2()), Error);
}

TEST_CASE("induced products over the window drop escaping monomials") {
  WindowedGradedAlgebra model = grperm_window(2);
  AlgebraBundle pois = induce_product("poisson", prepoisson2(), model);
  CHECK(pois.space.dim() == 2 * model.space().dim());

  const StructureConstants& dot = pois.product("dot");
  int y11 = pi(model, 0, {0, 0, 1});
  int y12 = pi(model, 0, {0, 0, 2});
  CHECK(dot.coeff(y11, y12, pi(model, 1, {1, 0, 2})) == 1);
  CHECK(dot.coeff(y11, y12, pi(model, 1, {0, 1, 1})) == 1);
  CHECK(dot.prod_basis(y11, y12).term_count() == 2);

  // x1^2∂1 ◇ x1∂1 escapes the radius-2 window in both orders.
  CHECK(dot.prod_basis(pi(model, 0, {2, 0, 1}), pi(model, 0, {1, 0, 1})).is_zero());
}

TEST_CASE("induced coproducts match the displayed tables") {
  QuadraticPermAlgebra q(perm2(), omega2());
  Coproduct big = induce_coproduct("Delta", prepoisson_co2(), q);
  CHECK(big.coeff(0, 2, 2) == 2);  // Delta(e1⊗x1) = 2 (e2⊗x1)⊗(e2⊗x1)
  CHECK(big.coeff(1, 2, 3) == 1);  // Delta(e1⊗x2) = (e2⊗x1)⊗(e2⊗x2) + swap
  CHECK(big.coeff(1, 3, 2) == 1);
  CHECK(big.coeffs().size() == 3);
  CHECK(big.of_basis(2).is_zero());
  CHECK(big.of_basis(3).is_zero());

  Coproduct small = induce_coproduct("delta", prepoisson_co2(), q);
  CHECK(small.of_basis(0).is_zero());
  CHECK(small.coeff(1, 0, 3) == 1);  // delta(e1⊗x2), four signed terms
  CHECK(small.coeff(1, 2, 1) == 1);
  CHECK(small.coeff(1, 3, 0) == -1);
  CHECK(small.coeff(1, 1, 2) == -1);
  CHECK(small.of_basis(2).is_zero());
  CHECK(small.coeff(3, 2, 3) == 1);  // delta(e2⊗x2) = (e2⊗x1)⊗(e2⊗x2) - swap
  CHECK(small.coeff(3, 3, 2) == -1);
  CHECK(small.coeffs().size() == 6);

  Coproduct fromz = induce_coproduct("Delta", zinbiel_co2(), q);
  CHECK(fromz.coeffs() == big.coeffs());

  CoalgebraBundle co = make_cobundle(CoalgKind::PoissonCo, big.space());
  co.coproducts.at("Delta") = big;
  co.coproducts.at("delta") = small;
  CHECK(verify_costructure(co).passed());

  BialgebraBundle bi{BialgKind::PoissonBi, induce_product("poisson", prepoisson2(), perm2()),
                     co};
  CHECK(verify_bialgebra(bi).passed());

  CoalgebraBundle inf = make_cobundle(CoalgKind::CocommCoassoc, big.space());
  inf.coproducts.at("Delta") = fromz;
  BialgebraBundle ibi{BialgKind::Infinitesimal, induce_product("assoc", zinbiel2(), perm2()),
                      inf};
  CHECK(verify_bialgebra(ibi).passed());

  CHECK_THROWS_AS(induce_coproduct("nabla", prepoisson_co2(), q), Error);
  CoalgebraBundle no_vt = make_cobundle(CoalgKind::PreLieCo, e_space(2));
  CHECK_THROWS_AS(induce_coproduct("Delta", no_vt, q), Error);
  CHECK_THROWS_AS(induce_coproduct("delta", zinbiel_co2(), q), Error);
}

TEST_CASE("induced forms multiply entries and inherit symmetry") {
  BilinearForm bb = induce_form(varpi2(), omega2());
  CHECK(bb.declared() == FormSymmetry::antisymmetric);
  CHECK(bb.symmetry_ok());
  CHECK(bb.nondegenerate());
  CHECK(bb.entries().size() == 4);
  CHECK(bb.eval(3, 0) == 1);   // (e2⊗x2, e1⊗x1)
  CHECK(bb.eval(1, 2) == 1);   // (e1⊗x2, e2⊗x1)
  CHECK(bb.eval(0, 3) == -1);
  CHECK(bb.eval(2, 1) == -1);

  BilinearForm anti_anti = induce_form(omega2(), omega2());
  CHECK(anti_anti.declared() == FormSymmetry::symmetric);
  CHECK(anti_anti.symmetry_ok());

  BilinearForm bare(e_space(2), FormSymmetry::none);
  bare.set(0, 1, 1);
  bare.set(1, 0, 1);
  bare.set(0, 0, 1);
  CHECK(induce_form(bare, omega2()).declared() == FormSymmetry::none);
}

TEST_CASE("quasi-frobenius batteries accept the invariant forms") {
  QuasiFrobenius good{zinbiel2(), varpi2(), "zinbiel"};
  CheckReport rep = qf_check(good);
  CHECK(rep.passed());
  CHECK(rep.checked == 8);

  QuasiFrobenius both{prepoisson2(), varpi2(), "prepoisson"};
  CheckReport rep2 = qf_check(both);
  CHECK(rep2.passed());
  CHECK(rep2.checked == 16);

  Tensor r = qf_to_r(good);
  CHECK(r.coeff({0, 1, 0}) == 1);
  CHECK(r.coeff({1, 0, 0}) == 1);
  CHECK(r.term_count() == 2);

  // The induced pair-space structures carry the multiplied form.
  BilinearForm bb = induce_form(varpi2(), omega2());
  QuasiFrobenius ass{induce_product("assoc", zinbiel2(), perm2()), bb, "connes-assoc"};
  CHECK(qf_check(ass).passed());
  QuasiFrobenius lie{induce_product("lie", prepoisson2(), perm2()), bb, "lie"};
  CHECK(qf_check(lie).passed());
  QuasiFrobenius pois{induce_product("poisson", prepoisson2(), perm2()), bb, "poisson"};
  CheckReport rp = qf_check(pois);
  CHECK(rp.passed());
  CHECK(rp.checked == 128);

  QuasiFrobenius bad{zinbiel2(), identity_form2(), "zinbiel"};
  CheckReport rb = qf_check(bad);
  CHECK(!rb.passed());
  CHECK(has_violation_at(rb, "qf-zinbiel", {"e1", "e1", "e2"}));
  CHECK(rb.violations[0].detail == "lhs = 2; rhs = 0");

  CHECK_THROWS_AS(qf_check({zinbiel2(), varpi2(), "frobenius"}), Error);
  CHECK_THROWS_AS(qf_check({prepoisson2(), varpi2(), "zinbiel"}), Error);
  BilinearForm anti(e_space(2), FormSymmetry::antisymmetric);
  anti.set(0, 1, 1);
  anti.set(1, 0, -1);
  CHECK_THROWS_AS(qf_check({zinbiel2(), anti, "zinbiel"}), Error);
  BilinearForm degenerate(e_space(2), FormSymmetry::symmetric);
  degenerate.set(0, 0, 1);
  CHECK_THROWS_AS(qf_check({zinbiel2(), degenerate, "zinbiel"}), Error);
  BilinearForm elsewhere(e_space(3), FormSymmetry::symmetric);
  elsewhere.set(0, 0, 1);
  elsewhere.set(1, 1, 1);
  elsewhere.set(2, 2, 1);
  CHECK_THROWS_AS(qf_check({zinbiel2(), elsewhere, "zinbiel"}), Error);
}

TEST_CASE("windowed product identities pass with skip accounting") {
  WindowedGradedAlgebra model = grperm_window(3);
  AlgebraBundle pp = prepoisson2();
  WindowedOperands ops{&model, &pp, nullptr, nullptr};

  for (const char* id : {"comm", "assoc", "antisym"}) {
    CheckReport rep = windowed_check(id, ops, {3, 2});
    CHECK(rep.passed());
    CHECK(rep.checked > 0);
  }
  CheckReport jac = windowed_check("jacobi", ops, {3, 2});
  CHECK(jac.passed());
  CHECK(jac.skipped > 0);
  CheckReport lei = windowed_check("leibniz", ops, {3, 2});
  CHECK(lei.passed());
  CHECK(lei.skipped > 0);

  // Chained products in three dimensions leave the window at depth two.
  AlgebraBundle z3 = zinbiel3();
  WindowedOperands ops3{&model, &z3, nullptr, nullptr};
  CheckReport a3 = windowed_check("assoc", ops3, {3, 2});
  CHECK(a3.passed());
  CHECK(a3.skipped > 0);
  CheckReport c3 = windowed_check("comm", ops3, {3, 1});
  CHECK(c3.passed());
  CHECK(c3.skipped > 0);
  CheckReport c3tight = windowed_check("comm", ops3, {3, 2});
  CHECK(c3tight.passed());
  CHECK(c3tight.skipped == 0);
}

TEST_CASE("windowed coproduct and compatibility identities pass") {
  WindowedGradedAlgebra model = grperm_window(3);
  AlgebraBundle pp = prepoisson2();
  CoalgebraBundle ppco = prepoisson_co2();
  WindowedOperands ops{&model, &pp, &ppco, nullptr};

  for (const char* id : {"cocomm", "coassoc", "co-antisym", "co-jacobi", "poisson-co"}) {
    CheckReport rep = windowed_check(id, ops, {3, 2});
    CHECK(rep.passed());
    CHECK(rep.checked == 36);
  }
  for (const char* id :
       {"inf-bialg", "lie-bialg", "poisson-bialg-1", "poisson-bialg-2"}) {
    CheckReport rep = windowed_check(id, ops, {3, 3});
    CHECK(rep.passed());
    CHECK(rep.checked == 16);
  }
}

TEST_CASE("windowed form identities pass on the invariant form") {
  WindowedGradedAlgebra model = grperm_window(3);
  AlgebraBundle pp = prepoisson2();
  BilinearForm vp = varpi2();
  WindowedOperands ops{&model, &pp, nullptr, &vp};
  for (const char* id : {"connes", "qf-lie"}) {
    CheckReport rep = windowed_check(id, ops, {3, 2});
    CHECK(rep.passed());
    CHECK(rep.skipped == 0);
    CHECK(rep.checked == 36 * 36 * 36);
  }
}

TEST_CASE("a broken zinbiel table fails the windowed associator at a named coefficient") {
  AlgebraBundle broken = make_bundle(AlgKind::Zinbiel, e_space(1));
  broken.products.at("zinbiel").set(0, 0, 0, 1);  // e1*e1 = e1
  CheckReport direct = verify_structure(broken);
  CHECK(!direct.passed());
  CHECK(has_violation(direct, "zinbiel"));

  WindowedGradedAlgebra model = grperm_window(3);
  WindowedOperands ops{&model, &broken, nullptr, nullptr};
  CheckReport rep = windowed_check("assoc", ops, {3, 3});
  CHECK(!rep.passed());
  std::vector<std::string> where = {plabel(broken.space, 0, {0, 0, 1}),
                                    plabel(broken.space, 0, {0, 0, 1}),
                                    plabel(broken.space, 0, {0, 0, 2})};
  CHECK(has_violation_at(rep, "assoc", where));
  bool found = false;
  for (const auto& v : rep.violations)
    if (v.where == where) {
      found = true;
      CHECK(v.detail.find("(2,0,2)") != std::string::npos);
      CHECK(v.detail.find("(1,1,1)") != std::string::npos);
    }
  CHECK(found);
  CHECK(windowed_check("comm", ops, {3, 3}).passed());  // symmetrized by construction
}

TEST_CASE("a broken prelie table fails the windowed jacobi identity") {
  AlgebraBundle broken = make_bundle(AlgKind::PreLie, e_space(2));
  broken.products.at("prelie").set(0, 0, 1, 1);  // e1○e1 = e2
  broken.products.at("prelie").set(1, 0, 0, 1);  // e2○e1 = e1
  CheckReport direct = verify_structure(broken);
  CHECK(!direct.passed());
  CHECK(has_violation(direct, "prelie"));

  WindowedGradedAlgebra model = grperm_window(3);
  WindowedOperands ops{&model, &broken, nullptr, nullptr};
  CheckReport rep = windowed_check("jacobi", ops, {3, 3});
  CHECK(!rep.passed());
  CHECK(has_violation(rep, "jacobi"));
  CHECK(windowed_check("antisym", ops, {3, 3}).passed());
}

TEST_CASE("a non-invariant form fails both the direct and windowed batteries") {
  AlgebraBundle z = zinbiel2();
  BilinearForm id2 = identity_form2();
  CheckReport direct = qf_check({z, id2, "zinbiel"});
  CHECK(!direct.passed());

  WindowedGradedAlgebra model = grperm_window(3);
  WindowedOperands ops{&model, &z, nullptr, &id2};
  CheckReport rep = windowed_check("connes", ops, {3, 2});
  CHECK(!rep.passed());
  CHECK(has_violation(rep, "connes"));
}

TEST_CASE("converse probes agree with the direct batteries in both directions") {
  AlgebraBundle z = zinbiel2();
  AlgebraBundle pp = prepoisson2();
  CoalgebraBundle zco = zinbiel_co2();
  CoalgebraBundle ppco = prepoisson_co2();
  BilinearForm vp = varpi2();

  CHECK(converse_probe("zinbiel", {&z, nullptr, nullptr}, 3).passed());
  CHECK(converse_probe("prepoisson", {&pp, nullptr, nullptr}, 3).passed());
  CHECK(converse_probe("zinbiel-co", {nullptr, &zco, nullptr}, 3).passed());
  CHECK(converse_probe("prepoisson-co", {nullptr, &ppco, nullptr}, 3).passed());
  CHECK(converse_probe("zinbiel-bi", {&z, &zco, nullptr}, 3).passed());
  CHECK(converse_probe("prepoisson-bi", {&pp, &ppco, nullptr}, 3).passed());
  CHECK(converse_probe("connes", {&z, nullptr, &vp}, 3).passed());
  CHECK(converse_probe("qf", {&pp, nullptr, &vp}, 3).passed());

  AlgebraBundle broken = make_bundle(AlgKind::Zinbiel, e_space(1));
  broken.products.at("zinbiel").set(0, 0, 0, 1);
  CheckReport rep = converse_probe("zinbiel", {&broken, nullptr, nullptr}, 3);
  CHECK(!rep.passed());
  CHECK(!has_violation(rep, "converse-agreement"));

  BilinearForm id2 = identity_form2();
  CheckReport repf = converse_probe("connes", {&z, nullptr, &id2}, 3);
  CHECK(!repf.passed());
  CHECK(!has_violation(repf, "converse-agreement"));

  CHECK_THROWS_AS(converse_probe("poisson", {&pp, nullptr, nullptr}, 3), Error);
  CHECK_THROWS_AS(converse_probe("zinbiel", {nullptr, nullptr, nullptr}, 3), Error);
  CHECK_THROWS_AS(converse_probe("connes", {&z, nullptr, nullptr}, 3), Error);
  CHECK_THROWS_AS(converse_probe("zinbiel", {&pp, nullptr, nullptr}, 3), Error);
}

TEST_CASE("random parameter samples keep the probe verdicts coupled") {
  RatGen gen(424243);
  for (int s = 0; s < 4; ++s) {
    AlgebraBundle b = two_dim_family({gen.rational(), gen.rational(), gen.rational()});
    CheckReport rep = converse_probe("prepoisson", {&b, nullptr, nullptr}, 3);
    CHECK(rep.passed());
    CHECK(!has_violation(rep, "converse-agreement"));
  }
}

TEST_CASE("windowed checks validate their operands and region") {
  WindowedGradedAlgebra model = grperm_window(3);
  AlgebraBundle pp = prepoisson2();
  WindowedOperands ops{&model, &pp, nullptr, nullptr};

  CHECK(AdmissibleRegion{3, 2}.box_radius() == 1);
  CHECK(AdmissibleRegion{3, 2}.in_box({1, -1, 2}));
  CHECK(!AdmissibleRegion{3, 2}.in_box({2, 0, 1}));
  CHECK(AdmissibleRegion{1, 2}.empty());

  CHECK_THROWS_AS(windowed_check("assoc", ops, {1, 2}), Error);
  CHECK_THROWS_AS(windowed_check("assoc", ops, {2, 1}), Error);
  CHECK_THROWS_AS(windowed_check("nonsense", ops, {3, 2}), Error);
  CHECK_THROWS_AS(windowed_check("assoc", {nullptr, &pp, nullptr, nullptr}, {3, 2}), Error);
  CHECK_THROWS_AS(windowed_check("assoc", {&model, nullptr, nullptr, nullptr}, {3, 2}),
                  Error);
  CHECK_THROWS_AS(windowed_check("cocomm", {&model, &pp, nullptr, nullptr}, {3, 2}), Error);
  CHECK_THROWS_AS(windowed_check("connes", {&model, &pp, nullptr, nullptr}, {3, 2}), Error);

  AlgebraBundle lie = induce_product("lie", prepoisson2(), perm2());
  CHECK_THROWS_AS(windowed_check("assoc", {&model, &lie, nullptr, nullptr}, {3, 2}), Error);

  CoalgebraBundle other = make_cobundle(CoalgKind::ZinbielCo, e_space(3));
  CHECK_THROWS_AS(windowed_check("cocomm", {&model, &pp, &other, nullptr}, {3, 2}), Error);
  BilinearForm wrong(e_space(3), FormSymmetry::symmetric);
  wrong.set(0, 0, 1);
  CHECK_THROWS_AS(windowed_check("connes", {&model, &pp, nullptr, &wrong}, {3, 2}), Error);
}
