#include "affalg/ooperator.hpp"

#include <map>
#include <set>
#include <vector>

namespace affalg {

namespace {

enum class Rule { assoc, zinbiel, lie, prelie };

struct Piece {
  Rule rule;
  const char* slot;  // product consumed on the algebra side
  const char* id;    // violation identity
};

const std::vector<Piece>& pieces_for(const std::string& kind) {
  static const std::map<std::string, std::vector<Piece>> table = {
      {"assoc", {{Rule::assoc, "dot", "o-assoc"}}},
      {"zinbiel", {{Rule::zinbiel, "zinbiel", "o-zinbiel"}}},
      {"lie", {{Rule::lie, "bracket", "o-lie"}}},
      {"prelie", {{Rule::prelie, "prelie", "o-prelie"}}},
      {"poisson", {{Rule::assoc, "dot", "o-assoc"}, {Rule::lie, "bracket", "o-lie"}}},
      {"prepoisson",
       {{Rule::zinbiel, "zinbiel", "o-zinbiel"}, {Rule::prelie, "prelie", "o-prelie"}}},
  };
  auto it = table.find(kind);
  if (it == table.end())
    throw Error("o-operator kinds: assoc, zinbiel, lie, prelie, poisson, prepoisson");
  return it->second;
}

const std::vector<const char*>& rule_actions(Rule rule) {
  static const std::vector<const char*> assoc = {"mu"};
  static const std::vector<const char*> zinbiel = {"l", "r"};
  static const std::vector<const char*> lie = {"rho"};
  static const std::vector<const char*> prelie = {"lhat", "rhat"};
  switch (rule) {
    case Rule::assoc:
      return assoc;
    case Rule::zinbiel:
      return zinbiel;
    case Rule::lie:
      return lie;
    default:
      return prelie;
  }
}

}  // namespace

CheckReport o_operator_check(const std::string& kind, const OOperatorProblem& problem) {
  const std::vector<Piece>& pieces = pieces_for(kind);
  if (problem.T.codomain() != problem.algebra.space)
    throw Error("o_operator_check: T must land in the algebra's space");
  if (problem.T.domain() != problem.rep.module)
    throw Error("o_operator_check: T's domain must be the representation module");
  if (problem.rep.algebra.space != problem.algebra.space)
    throw Error("o_operator_check: the representation acts for a different algebra space");
  for (const Piece& piece : pieces) {
    if (!problem.algebra.products.count(piece.slot))
      throw Error(std::string("o_operator_check ") + kind + " needs the " + piece.slot +
                  " product; kind " + kind_name(problem.algebra.kind) +
                  " does not provide it");
    for (const char* action : rule_actions(piece.rule))
      if (!problem.rep.actions.count(action))
        throw Error(std::string("o_operator_check ") + kind +
                    " needs the representation action '" + action + "'");
  }

  const BasisSpace& mod = problem.rep.module;
  CheckReport rep;
  for (int v1 = 0; v1 < mod.dim(); ++v1) {
    const Tensor tv1 = problem.T.apply_basis(v1);
    for (int v2 = 0; v2 < mod.dim(); ++v2) {
      const Tensor tv2 = problem.T.apply_basis(v2);
      const Tensor v1t = Tensor::basis(mod, v1);
      const Tensor v2t = Tensor::basis(mod, v2);
      for (const Piece& piece : pieces) {
        ++rep.checked;
        const StructureConstants& prod = problem.algebra.products.at(piece.slot);
        Tensor arg({mod});
        switch (piece.rule) {
          case Rule::assoc:
            arg = problem.rep.act("mu", tv1).apply(v2t) + problem.rep.act("mu", tv2).apply(v1t);
            break;
          case Rule::zinbiel:
            arg = problem.rep.act("l", tv1).apply(v2t) + problem.rep.act("r", tv2).apply(v1t);
            break;
          case Rule::lie:
            arg = problem.rep.act("rho", tv1).apply(v2t) - problem.rep.act("rho", tv2).apply(v1t);
            break;
          case Rule::prelie:
            arg = problem.rep.act("lhat", tv1).apply(v2t) +
                  problem.rep.act("rhat", tv2).apply(v1t);
            break;
        }
        const Tensor diff = prod.prod(tv1, tv2) - problem.T.apply(arg);
        if (!diff.is_zero())
          rep.fail({piece.id, {mod.label(v1), mod.label(v2)}, "difference " + diff.str()});
      }
    }
  }
  return rep;
}

CheckReport o_operator_equiv(const std::string& kind, const AlgebraBundle& a,
                             const Tensor& r) {
  static const std::map<std::string, std::pair<YbeKind, bool>> eqs = {
      {"assoc", {YbeKind::AYBE, false}},   {"zinbiel", {YbeKind::ZYBE, true}},
      {"lie", {YbeKind::CYBE, false}},     {"prelie", {YbeKind::PLYBE, true}},
      {"poisson", {YbeKind::PYBE, false}}, {"prepoisson", {YbeKind::PPYBE, true}},
  };
  auto it = eqs.find(kind);
  if (it == eqs.end())
    throw Error("o_operator_equiv kinds: assoc, zinbiel, lie, prelie, poisson, prepoisson");
  const auto [eq, symmetric] = it->second;
  if (r.rank() != 2 || r.leg(0) != a.space || r.leg(1) != a.space)
    throw Error("o_operator_equiv: r must be rank 2 over the algebra's space");
  if (symmetric && flip(r) != r)
    throw Error("o_operator_equiv: kind " + kind + " assumes a symmetric r");
  if (!symmetric && flip(r) != -r)
    throw Error("o_operator_equiv: kind " + kind + " assumes a skew-symmetric r");

  bool residual_zero = true;
  for (const Tensor& t : residual(eq, a, r))
    if (!t.is_zero()) residual_zero = false;

  const OOperatorProblem problem{a, build_coregular_rep(a), sharp(r)};
  const bool operator_ok = o_operator_check(kind, problem).passed();

  CheckReport rep;
  rep.checked = 1;
  if (residual_zero != operator_ok)
    rep.fail({"o-operator-equiv",
              {kind},
              std::string("residual ") + (residual_zero ? "zero" : "nonzero") +
                  " but the operator identity " + (operator_ok ? "holds" : "fails")});
  return rep;
}

CheckReport factorization_check(const Tensor& r, const QuadraticPermAlgebra& b) {
  if (r.rank() != 2 || r.leg(0) != r.leg(1))
    throw Error("factorization_check: r must be rank 2 with equal legs");
  const BasisSpace& bs = b.perm.space;
  Tensor kappa({bs, bs});
  for (int j = 0; j < bs.dim(); ++j)
    for (const auto& [k, v] : b.duals[j].coeffs()) kappa.add({j, k[0], 0}, v);

  const LinearMap lhs = sharp(lift_solution(r, b));
  const LinearMap rhs = kron(sharp(r), sharp(kappa));

  CheckReport rep;
  rep.checked = static_cast<long long>(lhs.codomain().dim()) * lhs.domain().dim();
  std::set<std::pair<int, int>> keys;
  for (const auto& [k, v] : lhs.entries()) keys.insert(k);
  for (const auto& [k, v] : rhs.entries()) keys.insert(k);
  for (const auto& [row, col] : keys) {
    const Rational lv = lhs.entry(row, col);
    const Rational rv = rhs.entry(row, col);
    if (lv != rv)
      rep.fail({"factorization",
                {lhs.codomain().label(row), lhs.domain().label(col)},
                "lift gives " + rat_str(lv) + ", kron gives " + rat_str(rv)});
  }
  return rep;
}

}  // namespace affalg
