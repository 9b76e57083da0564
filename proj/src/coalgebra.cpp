#include "affalg/coalgebra.hpp"

namespace affalg {

namespace {

const std::vector<std::pair<CoalgKind, std::string>> kCoKindNames = {
    {CoalgKind::CocommCoassoc, "cocomm-coassoc"}, {CoalgKind::LieCo, "lie-co"},
    {CoalgKind::ZinbielCo, "zinbiel-co"},         {CoalgKind::PreLieCo, "prelie-co"},
    {CoalgKind::PoissonCo, "poisson-co"},         {CoalgKind::PrePoissonCo, "prepoisson-co"},
};

void expect_zero(CheckReport& rep, const std::string& identity, const BasisSpace& v,
                 int i, const Tensor& residual) {
  ++rep.checked;
  if (!residual.is_zero()) rep.fail({identity, {v.label(i)}, "residual = " + residual.str()});
}

void check_cocomm_coassoc(CheckReport& rep, const Coproduct& d) {
  for (int i = 0; i < d.space().dim(); ++i) {
    Tensor t = d.of_basis(i);
    expect_zero(rep, "cocomm", d.space(), i, flip(t) - t);
    expect_zero(rep, "coassoc", d.space(), i, d.expand(t, 0) - d.expand(t, 1));
  }
}

void check_lie_co(CheckReport& rep, const Coproduct& d) {
  for (int i = 0; i < d.space().dim(); ++i) {
    Tensor t = d.of_basis(i);
    expect_zero(rep, "co-antisym", d.space(), i, flip(t) + t);
    Tensor b = d.expand(t, 1);
    Tensor c = d.expand(t, 0);
    expect_zero(rep, "co-jacobi", d.space(), i, b - permute3(b, Leg3Perm::swap12) - c);
  }
}

void check_zinbiel_co(CheckReport& rep, const Coproduct& th) {
  for (int i = 0; i < th.space().dim(); ++i) {
    Tensor t = th.of_basis(i);
    Tensor a = th.expand(t, 0);
    expect_zero(rep, "zinbiel-co", th.space(), i,
                a + permute3(a, Leg3Perm::swap12) - th.expand(t, 1));
  }
}

void check_prelie_co(CheckReport& rep, const Coproduct& th) {
  for (int i = 0; i < th.space().dim(); ++i) {
    Tensor t = th.of_basis(i);
    Tensor b = th.expand(t, 1);
    Tensor c = th.expand(t, 0);
    expect_zero(rep, "prelie-co", th.space(), i,
                b - permute3(b, Leg3Perm::swap12) - c + permute3(c, Leg3Perm::swap12));
  }
}

void check_poisson_co_compat(CheckReport& rep, const Coproduct& Delta, const Coproduct& delta) {
  for (int i = 0; i < Delta.space().dim(); ++i) {
    Tensor lhs = Delta.expand(delta.of_basis(i), 1);
    Tensor d = Delta.of_basis(i);
    Tensor rhs = delta.expand(d, 0) + permute3(delta.expand(d, 1), Leg3Perm::swap12);
    expect_zero(rep, "poisson-co", Delta.space(), i, lhs - rhs);
  }
}

void check_prepoisson_co_compat(CheckReport& rep, const Coproduct& vt, const Coproduct& th) {
  for (int i = 0; i < vt.space().dim(); ++i) {
    Tensor v = vt.of_basis(i);
    Tensor t = th.of_basis(i);
    Tensor e0 = th.expand(v, 0);
    Tensor lhs1 = e0 - permute3(e0, Leg3Perm::swap12);
    Tensor rhs1 = vt.expand(t, 1) - permute3(th.expand(v, 1), Leg3Perm::swap12);
    expect_zero(rep, "prepoisson-co-1", vt.space(), i, lhs1 - rhs1);
    Tensor g = vt.expand(t, 0);
    Tensor lhs2 = g + permute3(g, Leg3Perm::swap12);
    Tensor h = th.expand(v, 1);
    Tensor rhs2 = h + permute3(h, Leg3Perm::swap12);
    expect_zero(rep, "prepoisson-co-2", vt.space(), i, lhs2 - rhs2);
  }
}

}  // namespace

Coproduct::Coproduct(BasisSpace space) : space_(std::move(space)) {
  if (!space_.valid()) throw Error("coproduct needs a valid space");
}

void Coproduct::check_index(int i) const {
  if (i < 0 || i >= space_.dim()) throw Error("coproduct index out of range");
}

Rational Coproduct::coeff(int i, int j, int k) const {
  auto it = c_.find({i, j, k});
  return it == c_.end() ? Rational(0) : it->second;
}

void Coproduct::set(int i, int j, int k, const Rational& v) {
  check_index(i);
  check_index(j);
  check_index(k);
  if (v == 0)
    c_.erase({i, j, k});
  else
    c_[{i, j, k}] = v;
}

void Coproduct::add(int i, int j, int k, const Rational& v) {
  set(i, j, k, coeff(i, j, k) + v);
}

Tensor Coproduct::of_basis(int i) const {
  check_index(i);
  Tensor out({space_, space_});
  auto it = c_.lower_bound({i, 0, 0});
  for (; it != c_.end() && it->first[0] == i; ++it)
    out.add({it->first[1], it->first[2], 0}, it->second);
  return out;
}

Tensor Coproduct::of(const Tensor& x) const {
  if (x.rank() != 1 || x.leg(0) != space_) throw Error("coproduct: space mismatch");
  Tensor out({space_, space_});
  for (const auto& [k, v] : x.coeffs()) out = out + of_basis(k[0]).scaled(v);
  return out;
}

Tensor Coproduct::expand(const Tensor& t, int leg) const {
  if (t.rank() != 2) throw Error("expand wants a rank-2 tensor");
  if (leg != 0 && leg != 1) throw Error("expand: leg out of range");
  if (t.leg(leg) != space_) throw Error("expand: space mismatch on leg");
  std::vector<BasisSpace> legs = leg == 0
                                     ? std::vector<BasisSpace>{space_, space_, t.leg(1)}
                                     : std::vector<BasisSpace>{t.leg(0), space_, space_};
  Tensor out(legs);
  for (const auto& [key, v] : t.coeffs()) {
    auto it = c_.lower_bound({key[leg], 0, 0});
    for (; it != c_.end() && it->first[0] == key[leg]; ++it) {
      if (leg == 0)
        out.add({it->first[1], it->first[2], key[1]}, v * it->second);
      else
        out.add({key[0], it->first[1], it->first[2]}, v * it->second);
    }
  }
  return out;
}

std::string cokind_name(CoalgKind k) {
  for (const auto& [kind, name] : kCoKindNames)
    if (kind == k) return name;
  throw Error("unknown coalgebra kind");
}

std::optional<CoalgKind> cokind_from_name(std::string_view s) {
  for (const auto& [kind, name] : kCoKindNames)
    if (name == s) return kind;
  return std::nullopt;
}

const std::vector<std::string>& coproduct_names(CoalgKind k) {
  static const std::vector<std::string> Delta = {"Delta"};
  static const std::vector<std::string> delta = {"delta"};
  static const std::vector<std::string> vartheta = {"vartheta"};
  static const std::vector<std::string> theta = {"theta"};
  static const std::vector<std::string> poisson = {"Delta", "delta"};
  static const std::vector<std::string> prepoisson = {"vartheta", "theta"};
  switch (k) {
    case CoalgKind::CocommCoassoc: return Delta;
    case CoalgKind::LieCo: return delta;
    case CoalgKind::ZinbielCo: return vartheta;
    case CoalgKind::PreLieCo: return theta;
    case CoalgKind::PoissonCo: return poisson;
    case CoalgKind::PrePoissonCo: return prepoisson;
  }
  throw Error("unknown coalgebra kind");
}

const Coproduct& CoalgebraBundle::coproduct(const std::string& name) const {
  auto it = coproducts.find(name);
  if (it == coproducts.end())
    throw Error("cobundle '" + cokind_name(kind) + "' has no coproduct '" + name + "'");
  return it->second;
}

void CoalgebraBundle::validate() const {
  if (!space.valid()) throw Error("cobundle has no space");
  const auto& wanted = coproduct_names(kind);
  if (coproducts.size() != wanted.size())
    throw Error("cobundle '" + cokind_name(kind) + "' wants " +
                std::to_string(wanted.size()) + " coproduct(s), got " +
                std::to_string(coproducts.size()));
  for (const auto& name : wanted) {
    auto it = coproducts.find(name);
    if (it == coproducts.end())
      throw Error("cobundle '" + cokind_name(kind) + "' is missing coproduct '" + name + "'");
    if (it->second.space() != space)
      throw Error("coproduct '" + name + "' lives on a different space");
  }
}

CoalgebraBundle make_cobundle(CoalgKind kind, const BasisSpace& space) {
  CoalgebraBundle b;
  b.kind = kind;
  b.space = space;
  for (const auto& name : coproduct_names(kind))
    b.coproducts.emplace(name, Coproduct(space));
  return b;
}

CheckReport verify_costructure(const CoalgebraBundle& bundle) {
  bundle.validate();
  CheckReport rep;
  switch (bundle.kind) {
    case CoalgKind::CocommCoassoc:
      check_cocomm_coassoc(rep, bundle.coproduct("Delta"));
      break;
    case CoalgKind::LieCo:
      check_lie_co(rep, bundle.coproduct("delta"));
      break;
    case CoalgKind::ZinbielCo:
      check_zinbiel_co(rep, bundle.coproduct("vartheta"));
      break;
    case CoalgKind::PreLieCo:
      check_prelie_co(rep, bundle.coproduct("theta"));
      break;
    case CoalgKind::PoissonCo:
      check_cocomm_coassoc(rep, bundle.coproduct("Delta"));
      check_lie_co(rep, bundle.coproduct("delta"));
      check_poisson_co_compat(rep, bundle.coproduct("Delta"), bundle.coproduct("delta"));
      break;
    case CoalgKind::PrePoissonCo:
      check_zinbiel_co(rep, bundle.coproduct("vartheta"));
      check_prelie_co(rep, bundle.coproduct("theta"));
      check_prepoisson_co_compat(rep, bundle.coproduct("vartheta"),
                                 bundle.coproduct("theta"));
      break;
  }
  return rep;
}

AlgKind algebra_kind_of(CoalgKind k) {
  switch (k) {
    case CoalgKind::CocommCoassoc: return AlgKind::CommAssoc;
    case CoalgKind::LieCo: return AlgKind::Lie;
    case CoalgKind::ZinbielCo: return AlgKind::Zinbiel;
    case CoalgKind::PreLieCo: return AlgKind::PreLie;
    case CoalgKind::PoissonCo: return AlgKind::Poisson;
    case CoalgKind::PrePoissonCo: return AlgKind::PrePoisson;
  }
  throw Error("unknown coalgebra kind");
}

CoalgKind coalgebra_kind_of(AlgKind k) {
  switch (k) {
    case AlgKind::CommAssoc: return CoalgKind::CocommCoassoc;
    case AlgKind::Lie: return CoalgKind::LieCo;
    case AlgKind::Zinbiel: return CoalgKind::ZinbielCo;
    case AlgKind::PreLie: return CoalgKind::PreLieCo;
    case AlgKind::Poisson: return CoalgKind::PoissonCo;
    case AlgKind::PrePoisson: return CoalgKind::PrePoissonCo;
    case AlgKind::Perm: break;
  }
  throw Error("kind '" + kind_name(k) + "' has no coalgebra counterpart here");
}

AlgebraBundle dualize(const CoalgebraBundle& coalg, const BasisSpace& target) {
  coalg.validate();
  if (target.dim() != coalg.space.dim()) throw Error("dualize: dimension mismatch");
  AlgebraBundle out = make_bundle(algebra_kind_of(coalg.kind), target);
  const auto& pnames = product_names(out.kind);
  const auto& cnames = coproduct_names(coalg.kind);
  for (size_t s = 0; s < cnames.size(); ++s) {
    StructureConstants m(target);
    for (const auto& [key, v] : coalg.coproduct(cnames[s]).coeffs())
      m.set(key[1], key[2], key[0], v);
    out.products.at(pnames[s]) = m;
  }
  return out;
}

AlgebraBundle dualize(const CoalgebraBundle& coalg) {
  return dualize(coalg, dual_space(coalg.space));
}

CoalgebraBundle dualize_alg(const AlgebraBundle& alg, const BasisSpace& target) {
  alg.validate();
  if (target.dim() != alg.space.dim()) throw Error("dualize_alg: dimension mismatch");
  CoalgebraBundle out = make_cobundle(coalgebra_kind_of(alg.kind), target);
  const auto& pnames = product_names(alg.kind);
  const auto& cnames = coproduct_names(out.kind);
  for (size_t s = 0; s < pnames.size(); ++s) {
    Coproduct d(target);
    for (const auto& [key, v] : alg.product(pnames[s]).coeffs())
      d.set(key[2], key[0], key[1], v);
    out.coproducts.at(cnames[s]) = d;
  }
  return out;
}

CoalgebraBundle dualize_alg(const AlgebraBundle& alg) {
  return dualize_alg(alg, dual_space(alg.space));
}

}  // namespace affalg
