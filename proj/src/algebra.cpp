#include "affalg/algebra.hpp"

#include <sstream>

namespace affalg {

namespace {

const std::vector<std::pair<AlgKind, std::string>> kKindNames = {
    {AlgKind::CommAssoc, "comm-assoc"}, {AlgKind::Lie, "lie"},
    {AlgKind::Perm, "perm"},            {AlgKind::Zinbiel, "zinbiel"},
    {AlgKind::PreLie, "prelie"},        {AlgKind::Poisson, "poisson"},
    {AlgKind::PrePoisson, "prepoisson"},
};

std::vector<std::string> tuple_labels(const BasisSpace& v, std::initializer_list<int> idx) {
  std::vector<std::string> out;
  for (int i : idx) out.push_back(v.label(i));
  return out;
}

std::string lhs_rhs(const Tensor& lhs, const Tensor& rhs) {
  return "lhs = " + lhs.str() + "; rhs = " + rhs.str();
}

// Compares lhs with rhs on one basis tuple and records a violation on mismatch.
void expect_equal(CheckReport& rep, const std::string& identity, const BasisSpace& v,
                  std::initializer_list<int> idx, const Tensor& lhs, const Tensor& rhs) {
  ++rep.checked;
  if (lhs != rhs) rep.fail({identity, tuple_labels(v, idx), lhs_rhs(lhs, rhs)});
}

void check_comm(CheckReport& rep, const StructureConstants& m, const std::string& id) {
  int n = m.space().dim();
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      expect_equal(rep, id, m.space(), {i, j}, m.prod_basis(i, j), m.prod_basis(j, i));
}

void check_assoc(CheckReport& rep, const StructureConstants& m, const std::string& id) {
  int n = m.space().dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        expect_equal(rep, id, m.space(), {i, j, k},
                     m.prod(m.prod_basis(i, j), Tensor::basis(m.space(), k)),
                     m.prod(Tensor::basis(m.space(), i), m.prod_basis(j, k)));
}

void check_left_comm(CheckReport& rep, const StructureConstants& m, const std::string& id) {
  int n = m.space().dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        expect_equal(rep, id, m.space(), {i, j, k},
                     m.prod(m.prod_basis(i, j), Tensor::basis(m.space(), k)),
                     m.prod(m.prod_basis(j, i), Tensor::basis(m.space(), k)));
}

void check_antisym(CheckReport& rep, const StructureConstants& b, const std::string& id) {
  int n = b.space().dim();
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      expect_equal(rep, id, b.space(), {i, j}, b.prod_basis(i, j), -b.prod_basis(j, i));
}

void check_jacobi(CheckReport& rep, const StructureConstants& b, const std::string& id) {
  int n = b.space().dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Tensor ei = Tensor::basis(b.space(), i);
        Tensor ej = Tensor::basis(b.space(), j);
        Tensor ek = Tensor::basis(b.space(), k);
        Tensor sum = b.prod(ei, b.prod_basis(j, k)) + b.prod(ej, b.prod_basis(k, i)) +
                     b.prod(ek, b.prod_basis(i, j));
        expect_equal(rep, id, b.space(), {i, j, k}, sum, Tensor::zero({b.space()}));
      }
}

void check_zinbiel(CheckReport& rep, const StructureConstants& z, const std::string& id) {
  int n = z.space().dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Tensor ei = Tensor::basis(z.space(), i);
        Tensor ek = Tensor::basis(z.space(), k);
        Tensor lhs = z.prod(ei, z.prod_basis(j, k));
        Tensor rhs = z.prod(z.prod_basis(i, j), ek) + z.prod(z.prod_basis(j, i), ek);
        expect_equal(rep, id, z.space(), {i, j, k}, lhs, rhs);
      }
}

void check_prelie(CheckReport& rep, const StructureConstants& p, const std::string& id) {
  int n = p.space().dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Tensor ei = Tensor::basis(p.space(), i);
        Tensor ej = Tensor::basis(p.space(), j);
        Tensor ek = Tensor::basis(p.space(), k);
        Tensor lhs = p.prod(p.prod_basis(i, j), ek) - p.prod(ei, p.prod_basis(j, k));
        Tensor rhs = p.prod(p.prod_basis(j, i), ek) - p.prod(ej, p.prod_basis(i, k));
        expect_equal(rep, id, p.space(), {i, j, k}, lhs, rhs);
      }
}

void check_leibniz(CheckReport& rep, const StructureConstants& dot,
                   const StructureConstants& br, const std::string& id) {
  int n = dot.space().dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Tensor ei = Tensor::basis(dot.space(), i);
        Tensor ej = Tensor::basis(dot.space(), j);
        Tensor ek = Tensor::basis(dot.space(), k);
        Tensor lhs = br.prod(ei, dot.prod_basis(j, k));
        Tensor rhs = dot.prod(br.prod_basis(i, j), ek) + dot.prod(ej, br.prod_basis(i, k));
        expect_equal(rep, id, dot.space(), {i, j, k}, lhs, rhs);
      }
}

void check_prepoisson(CheckReport& rep, const StructureConstants& z,
                      const StructureConstants& p) {
  int n = z.space().dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Tensor ei = Tensor::basis(z.space(), i);
        Tensor ej = Tensor::basis(z.space(), j);
        Tensor ek = Tensor::basis(z.space(), k);
        Tensor lhs1 = z.prod(p.prod_basis(i, j) - p.prod_basis(j, i), ek);
        Tensor rhs1 = p.prod(ei, z.prod_basis(j, k)) - z.prod(ej, p.prod_basis(i, k));
        expect_equal(rep, "prepoisson-1", z.space(), {i, j, k}, lhs1, rhs1);
        Tensor lhs2 = p.prod(z.prod_basis(i, j) + z.prod_basis(j, i), ek);
        Tensor rhs2 = z.prod(ei, p.prod_basis(j, k)) + z.prod(ej, p.prod_basis(i, k));
        expect_equal(rep, "prepoisson-2", z.space(), {i, j, k}, lhs2, rhs2);
      }
}

}  // namespace

std::string kind_name(AlgKind k) {
  for (const auto& [kind, name] : kKindNames)
    if (kind == k) return name;
  throw Error("unknown algebra kind");
}

std::optional<AlgKind> kind_from_name(std::string_view s) {
  for (const auto& [kind, name] : kKindNames)
    if (name == s) return kind;
  return std::nullopt;
}

const std::vector<std::string>& product_names(AlgKind k) {
  static const std::vector<std::string> dot = {"dot"};
  static const std::vector<std::string> bracket = {"bracket"};
  static const std::vector<std::string> perm = {"perm"};
  static const std::vector<std::string> zinbiel = {"zinbiel"};
  static const std::vector<std::string> prelie = {"prelie"};
  static const std::vector<std::string> poisson = {"dot", "bracket"};
  static const std::vector<std::string> prepoisson = {"zinbiel", "prelie"};
  switch (k) {
    case AlgKind::CommAssoc: return dot;
    case AlgKind::Lie: return bracket;
    case AlgKind::Perm: return perm;
    case AlgKind::Zinbiel: return zinbiel;
    case AlgKind::PreLie: return prelie;
    case AlgKind::Poisson: return poisson;
    case AlgKind::PrePoisson: return prepoisson;
  }
  throw Error("unknown algebra kind");
}

const StructureConstants& AlgebraBundle::product(const std::string& name) const {
  auto it = products.find(name);
  if (it == products.end())
    throw Error("bundle '" + kind_name(kind) + "' has no product '" + name + "'");
  return it->second;
}

void AlgebraBundle::validate() const {
  if (!space.valid()) throw Error("bundle has no space");
  const auto& wanted = product_names(kind);
  if (products.size() != wanted.size())
    throw Error("bundle '" + kind_name(kind) + "' wants " +
                std::to_string(wanted.size()) + " product(s), got " +
                std::to_string(products.size()));
  for (const auto& name : wanted) {
    auto it = products.find(name);
    if (it == products.end())
      throw Error("bundle '" + kind_name(kind) + "' is missing product '" + name + "'");
    if (it->second.space() != space)
      throw Error("product '" + name + "' lives on a different space");
  }
}

AlgebraBundle make_bundle(AlgKind kind, const BasisSpace& space) {
  AlgebraBundle b;
  b.kind = kind;
  b.space = space;
  for (const auto& name : product_names(kind))
    b.products.emplace(name, StructureConstants(space));
  return b;
}

CheckReport verify_structure(const AlgebraBundle& bundle) {
  bundle.validate();
  CheckReport rep;
  switch (bundle.kind) {
    case AlgKind::CommAssoc: {
      const auto& m = bundle.product("dot");
      check_comm(rep, m, "comm");
      check_assoc(rep, m, "assoc");
      break;
    }
    case AlgKind::Lie: {
      const auto& b = bundle.product("bracket");
      check_antisym(rep, b, "antisym");
      check_jacobi(rep, b, "jacobi");
      break;
    }
    case AlgKind::Perm: {
      const auto& m = bundle.product("perm");
      check_assoc(rep, m, "assoc");
      check_left_comm(rep, m, "left-comm");
      break;
    }
    case AlgKind::Zinbiel:
      check_zinbiel(rep, bundle.product("zinbiel"), "zinbiel");
      break;
    case AlgKind::PreLie:
      check_prelie(rep, bundle.product("prelie"), "prelie");
      break;
    case AlgKind::Poisson: {
      const auto& dot = bundle.product("dot");
      const auto& br = bundle.product("bracket");
      check_comm(rep, dot, "comm");
      check_assoc(rep, dot, "assoc");
      check_antisym(rep, br, "antisym");
      check_jacobi(rep, br, "jacobi");
      check_leibniz(rep, dot, br, "leibniz");
      break;
    }
    case AlgKind::PrePoisson: {
      const auto& z = bundle.product("zinbiel");
      const auto& p = bundle.product("prelie");
      check_zinbiel(rep, z, "zinbiel");
      check_prelie(rep, p, "prelie");
      check_prepoisson(rep, z, p);
      break;
    }
  }
  return rep;
}

CheckReport verify_parametric_family(const ParametricFamily& family,
                                     const std::vector<std::vector<Rational>>& samples) {
  CheckReport rep;
  for (size_t s = 0; s < samples.size(); ++s) {
    if (static_cast<int>(samples[s].size()) != family.arity)
      throw Error("family sample " + std::to_string(s) + " has arity " +
                  std::to_string(samples[s].size()) + ", expected " +
                  std::to_string(family.arity));
    CheckReport one = verify_structure(family.make(samples[s]));
    for (auto& v : one.violations) {
      v.where.insert(v.where.begin(), "sample" + std::to_string(s));
      rep.fail(v);
    }
    rep.violation_count += one.violation_count - static_cast<long long>(one.violations.size());
    rep.checked += one.checked;
    rep.skipped += one.skipped;
  }
  return rep;
}

AlgebraBundle subadjacent(const AlgebraBundle& bundle) {
  bundle.validate();
  AlgebraBundle out;
  out.space = bundle.space;
  switch (bundle.kind) {
    case AlgKind::Zinbiel: {
      const auto& z = bundle.product("zinbiel");
      out.kind = AlgKind::CommAssoc;
      out.products.emplace("dot", z + z.opposite());
      break;
    }
    case AlgKind::PreLie: {
      const auto& p = bundle.product("prelie");
      out.kind = AlgKind::Lie;
      out.products.emplace("bracket", p - p.opposite());
      break;
    }
    case AlgKind::PrePoisson: {
      const auto& z = bundle.product("zinbiel");
      const auto& p = bundle.product("prelie");
      out.kind = AlgKind::Poisson;
      out.products.emplace("dot", z + z.opposite());
      out.products.emplace("bracket", p - p.opposite());
      break;
    }
    default:
      throw Error("subadjacent: unsupported kind '" + kind_name(bundle.kind) + "'");
  }
  return out;
}

CheckReport rota_baxter_check(const AlgebraBundle& poisson, const LinearMap& R) {
  poisson.validate();
  if (poisson.kind != AlgKind::Poisson)
    throw Error("rota_baxter_check wants a poisson bundle");
  if (R.domain() != poisson.space || R.codomain() != poisson.space)
    throw Error("rota_baxter_check: operator shape mismatch");
  CheckReport rep;
  const BasisSpace& sp = poisson.space;
  const std::pair<std::string, std::string> ids[] = {
      {"dot", "rota-baxter-dot"}, {"bracket", "rota-baxter-bracket"}};
  for (const auto& [prod_name, id] : ids) {
    const auto& m = poisson.product(prod_name);
    for (int i = 0; i < sp.dim(); ++i)
      for (int j = 0; j < sp.dim(); ++j) {
        Tensor ri = R.apply_basis(i);
        Tensor rj = R.apply_basis(j);
        Tensor lhs = m.prod(ri, rj);
        Tensor inner = m.prod(ri, Tensor::basis(sp, j)) + m.prod(Tensor::basis(sp, i), rj);
        Tensor rhs = R.apply(inner);
        ++rep.checked;
        if (lhs != rhs) rep.fail({id, {sp.label(i), sp.label(j)}, lhs_rhs(lhs, rhs)});
      }
  }
  return rep;
}

AlgebraBundle rota_baxter_induce(const AlgebraBundle& poisson, const LinearMap& R) {
  CheckReport ok = rota_baxter_check(poisson, R);
  if (!ok.passed())
    throw Error("rota_baxter_induce: operator fails the check: " + ok.summary());
  const BasisSpace& sp = poisson.space;
  AlgebraBundle out = make_bundle(AlgKind::PrePoisson, sp);
  StructureConstants z(sp), p(sp);
  const auto& dot = poisson.product("dot");
  const auto& br = poisson.product("bracket");
  for (int i = 0; i < sp.dim(); ++i) {
    Tensor ri = R.apply_basis(i);
    for (int j = 0; j < sp.dim(); ++j) {
      Tensor ej = Tensor::basis(sp, j);
      Tensor star = dot.prod(ri, ej);
      Tensor circ = br.prod(ri, ej);
      for (const auto& [k, v] : star.coeffs()) z.add(i, j, k[0], v);
      for (const auto& [k, v] : circ.coeffs()) p.add(i, j, k[0], v);
    }
  }
  out.products.at("zinbiel") = z;
  out.products.at("prelie") = p;
  return out;
}

}  // namespace affalg
