#include "affalg/rep.hpp"

namespace affalg {

namespace {

// Representation conditions are equalities of module endomorphisms indexed by
// one or two algebra basis elements.
struct RepChecker {
  const Representation& rep;
  CheckReport out;

  void expect(const std::string& identity, int i, int j, const LinearMap& lhs,
              const LinearMap& rhs) {
    ++out.checked;
    if (lhs != rhs) {
      const BasisSpace& a = rep.algebra.space;
      out.fail({identity, {a.label(i), a.label(j)}, "difference = " + (lhs - rhs).str()});
    }
  }

  LinearMap act(const std::string& name, const Tensor& x) const { return rep.act(name, x); }
  LinearMap at(const std::string& name, int i) const { return rep.act_basis(name, i); }

  void comm_assoc_pairs(const StructureConstants& dot, const std::string& mu) {
    int n = dot.space().dim();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        expect("rep-assoc", i, j, at(mu, i).compose(at(mu, j)), act(mu, dot.prod_basis(i, j)));
  }

  void lie_pairs(const StructureConstants& br, const std::string& rho) {
    int n = br.space().dim();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        expect("rep-lie", i, j, act(rho, br.prod_basis(i, j)),
               at(rho, i).compose(at(rho, j)) - at(rho, j).compose(at(rho, i)));
  }

  void poisson_pairs(const StructureConstants& dot, const StructureConstants& br) {
    int n = dot.space().dim();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        expect("rep-poisson-1", i, j, act("rho", dot.prod_basis(i, j)),
               at("mu", j).compose(at("rho", i)) + at("mu", i).compose(at("rho", j)));
        expect("rep-poisson-2", i, j, act("mu", br.prod_basis(i, j)),
               at("rho", i).compose(at("mu", j)) - at("mu", j).compose(at("rho", i)));
      }
  }

  void zinbiel_pairs(const StructureConstants& z) {
    int n = z.space().dim();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        expect("rep-zinbiel-1", i, j, at("l", i).compose(at("l", j)),
               act("l", z.prod_basis(i, j)) + act("l", z.prod_basis(j, i)));
        expect("rep-zinbiel-2", i, j, act("r", z.prod_basis(i, j)),
               at("l", i).compose(at("r", j)));
        expect("rep-zinbiel-3", i, j, act("r", z.prod_basis(i, j)),
               at("r", j).compose(at("l", i)) + at("r", j).compose(at("r", i)));
      }
  }

  void prelie_pairs(const StructureConstants& p) {
    int n = p.space().dim();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        expect("rep-prelie-1", i, j,
               at("lhat", i).compose(at("lhat", j)) - act("lhat", p.prod_basis(i, j)),
               at("lhat", j).compose(at("lhat", i)) - act("lhat", p.prod_basis(j, i)));
        expect("rep-prelie-2", i, j,
               at("lhat", i).compose(at("rhat", j)) - at("rhat", j).compose(at("lhat", i)),
               act("rhat", p.prod_basis(i, j)) - at("rhat", j).compose(at("rhat", i)));
      }
  }

  void prepoisson_pairs(const StructureConstants& z, const StructureConstants& p) {
    int n = z.space().dim();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        expect("rep-prepoisson-1", i, j,
               act("l", p.prod_basis(i, j) - p.prod_basis(j, i)),
               at("lhat", i).compose(at("l", j)) - at("l", j).compose(at("lhat", i)));
        expect("rep-prepoisson-2", i, j, act("r", p.prod_basis(i, j)),
               at("r", j).compose(at("rhat", i)) - at("r", j).compose(at("lhat", i)) +
                   at("lhat", i).compose(at("r", j)));
        expect("rep-prepoisson-3", i, j, act("r", p.prod_basis(i, j)),
               at("rhat", j).compose(at("l", i)) + at("rhat", j).compose(at("r", i)) -
                   at("l", i).compose(at("rhat", j)));
        expect("rep-prepoisson-4", i, j,
               act("lhat", z.prod_basis(i, j) + z.prod_basis(j, i)),
               at("l", i).compose(at("lhat", j)) + at("l", j).compose(at("lhat", i)));
        expect("rep-prepoisson-5", i, j, act("rhat", z.prod_basis(i, j)),
               at("l", i).compose(at("rhat", j)) + at("r", j).compose(at("rhat", i)) -
                   at("r", j).compose(at("lhat", i)));
      }
  }
};

}  // namespace

const std::vector<std::string>& action_names(AlgKind k) {
  static const std::vector<std::string> mu = {"mu"};
  static const std::vector<std::string> rho = {"rho"};
  static const std::vector<std::string> poisson = {"mu", "rho"};
  static const std::vector<std::string> zinbiel = {"l", "r"};
  static const std::vector<std::string> prelie = {"lhat", "rhat"};
  static const std::vector<std::string> prepoisson = {"l", "r", "lhat", "rhat"};
  switch (k) {
    case AlgKind::CommAssoc: return mu;
    case AlgKind::Lie: return rho;
    case AlgKind::Poisson: return poisson;
    case AlgKind::Zinbiel: return zinbiel;
    case AlgKind::PreLie: return prelie;
    case AlgKind::PrePoisson: return prepoisson;
    case AlgKind::Perm: break;
  }
  throw Error("no representation theory wired for kind '" + kind_name(k) + "'");
}

void Representation::validate() const {
  algebra.validate();
  if (!module.valid()) throw Error("representation has no module");
  const auto& wanted = action_names(algebra.kind);
  if (actions.size() != wanted.size())
    throw Error("representation wants " + std::to_string(wanted.size()) +
                " action(s), got " + std::to_string(actions.size()));
  for (const auto& name : wanted) {
    auto it = actions.find(name);
    if (it == actions.end()) throw Error("representation is missing action '" + name + "'");
    if (static_cast<int>(it->second.size()) != algebra.space.dim())
      throw Error("action '" + name + "' has wrong arity");
    for (const auto& m : it->second)
      if (m.domain() != module || m.codomain() != module)
        throw Error("action '" + name + "' is not an endomorphism of the module");
  }
}

LinearMap Representation::act_basis(const std::string& name, int i) const {
  auto it = actions.find(name);
  if (it == actions.end()) throw Error("no action '" + name + "'");
  if (i < 0 || i >= static_cast<int>(it->second.size()))
    throw Error("action index out of range");
  return it->second[i];
}

LinearMap Representation::act(const std::string& name, const Tensor& x) const {
  if (x.rank() != 1 || x.leg(0) != algebra.space)
    throw Error("act: element must live in the algebra");
  LinearMap out = LinearMap::zero(module, module);
  for (const auto& [k, v] : x.coeffs()) out = out + act_basis(name, k[0]).scaled(v);
  return out;
}

Representation build_regular_rep(const AlgebraBundle& bundle) {
  bundle.validate();
  Representation rep;
  rep.algebra = bundle;
  rep.module = bundle.space;
  int n = bundle.space.dim();
  auto fill = [&](const std::string& action, const StructureConstants& m, bool left) {
    std::vector<LinearMap> ms;
    for (int i = 0; i < n; ++i) ms.push_back(left ? m.left_mult(i) : m.right_mult(i));
    rep.actions.emplace(action, std::move(ms));
  };
  switch (bundle.kind) {
    case AlgKind::CommAssoc:
      fill("mu", bundle.product("dot"), true);
      break;
    case AlgKind::Lie:
      fill("rho", bundle.product("bracket"), true);
      break;
    case AlgKind::Poisson:
      fill("mu", bundle.product("dot"), true);
      fill("rho", bundle.product("bracket"), true);
      break;
    case AlgKind::Zinbiel:
      fill("l", bundle.product("zinbiel"), true);
      fill("r", bundle.product("zinbiel"), false);
      break;
    case AlgKind::PreLie:
      fill("lhat", bundle.product("prelie"), true);
      fill("rhat", bundle.product("prelie"), false);
      break;
    case AlgKind::PrePoisson:
      fill("l", bundle.product("zinbiel"), true);
      fill("r", bundle.product("zinbiel"), false);
      fill("lhat", bundle.product("prelie"), true);
      fill("rhat", bundle.product("prelie"), false);
      break;
    case AlgKind::Perm:
      throw Error("no representation theory wired for kind 'perm'");
  }
  return rep;
}

Representation build_coregular_rep(const AlgebraBundle& bundle) {
  bundle.validate();
  Representation rep;
  rep.algebra = bundle;
  rep.module = dual_space(bundle.space);
  int n = bundle.space.dim();
  // Every slot is ±(combination of multiplications)ᵀ, written via dual_map.
  auto fill = [&](const std::string& action,
                  const std::function<LinearMap(const StructureConstants&, int)>& build,
                  const StructureConstants& m) {
    std::vector<LinearMap> ms;
    for (int i = 0; i < n; ++i) ms.push_back(build(m, i));
    rep.actions.emplace(action, std::move(ms));
  };
  auto mu_t = [](const StructureConstants& m, int i) {
    return dual_map(m.left_mult(i), DualVariant::plain);
  };
  auto neg_ad_t = [](const StructureConstants& m, int i) {
    return dual_map(m.left_mult(i), DualVariant::negated);
  };
  auto zin_l = [](const StructureConstants& z, int i) {
    return dual_map(z.left_mult(i) + z.right_mult(i), DualVariant::plain);
  };
  auto zin_r = [](const StructureConstants& z, int i) {
    return dual_map(z.right_mult(i), DualVariant::negated);
  };
  auto pre_l = [](const StructureConstants& p, int i) {
    return dual_map(p.right_mult(i) - p.left_mult(i), DualVariant::plain);
  };
  auto pre_r = [](const StructureConstants& p, int i) {
    return dual_map(p.right_mult(i), DualVariant::plain);
  };
  switch (bundle.kind) {
    case AlgKind::CommAssoc:
      fill("mu", mu_t, bundle.product("dot"));
      break;
    case AlgKind::Lie:
      fill("rho", neg_ad_t, bundle.product("bracket"));
      break;
    case AlgKind::Poisson:
      fill("mu", mu_t, bundle.product("dot"));
      fill("rho", neg_ad_t, bundle.product("bracket"));
      break;
    case AlgKind::Zinbiel:
      fill("l", zin_l, bundle.product("zinbiel"));
      fill("r", zin_r, bundle.product("zinbiel"));
      break;
    case AlgKind::PreLie:
      fill("lhat", pre_l, bundle.product("prelie"));
      fill("rhat", pre_r, bundle.product("prelie"));
      break;
    case AlgKind::PrePoisson:
      fill("l", zin_l, bundle.product("zinbiel"));
      fill("r", zin_r, bundle.product("zinbiel"));
      fill("lhat", pre_l, bundle.product("prelie"));
      fill("rhat", pre_r, bundle.product("prelie"));
      break;
    case AlgKind::Perm:
      throw Error("no representation theory wired for kind 'perm'");
  }
  return rep;
}

CheckReport verify_representation(const Representation& rep) {
  rep.validate();
  RepChecker ck{rep, {}};
  switch (rep.algebra.kind) {
    case AlgKind::CommAssoc:
      ck.comm_assoc_pairs(rep.algebra.product("dot"), "mu");
      break;
    case AlgKind::Lie:
      ck.lie_pairs(rep.algebra.product("bracket"), "rho");
      break;
    case AlgKind::Poisson:
      ck.comm_assoc_pairs(rep.algebra.product("dot"), "mu");
      ck.lie_pairs(rep.algebra.product("bracket"), "rho");
      ck.poisson_pairs(rep.algebra.product("dot"), rep.algebra.product("bracket"));
      break;
    case AlgKind::Zinbiel:
      ck.zinbiel_pairs(rep.algebra.product("zinbiel"));
      break;
    case AlgKind::PreLie:
      ck.prelie_pairs(rep.algebra.product("prelie"));
      break;
    case AlgKind::PrePoisson:
      ck.zinbiel_pairs(rep.algebra.product("zinbiel"));
      ck.prelie_pairs(rep.algebra.product("prelie"));
      ck.prepoisson_pairs(rep.algebra.product("zinbiel"), rep.algebra.product("prelie"));
      break;
    case AlgKind::Perm:
      throw Error("no representation theory wired for kind 'perm'");
  }
  return ck.out;
}

}  // namespace affalg
