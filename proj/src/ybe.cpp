#include "affalg/ybe.hpp"

#include <map>
#include <utility>

#include "affalg/induce.hpp"

namespace affalg {

namespace {

// Operand legs of r ⊗ r: term α contributes (x_α, y_α), term β (x_β, y_β).
enum class Operand { xa, ya, xb, yb };

// One signed summand of a Yang-Baxter expansion: the product f1·f2 lands on
// output slot pos, the remaining slots (in increasing position) take o1, o2.
struct Placement {
  int sign;
  Operand f1, f2;
  int pos;
  Operand o1, o2;
};

using Catalog = std::vector<Placement>;

const Catalog& full_catalog(YbeKind k) {
  using O = Operand;
  static const Catalog zybe = {
      {+1, O::xa, O::xb, 0, O::yb, O::ya},  // (x_α∗x_β)⊗y_β⊗y_α
      {+1, O::xa, O::xb, 1, O::yb, O::ya},  // y_β⊗(x_α∗x_β)⊗y_α
      {+1, O::ya, O::yb, 2, O::xa, O::xb},  // x_α⊗x_β⊗(y_α∗y_β)
      {+1, O::ya, O::yb, 2, O::xb, O::xa},  // x_β⊗x_α⊗(y_α∗y_β)
      {-1, O::ya, O::xb, 1, O::xa, O::yb},  // x_α⊗(y_α∗x_β)⊗y_β
      {-1, O::xa, O::yb, 1, O::xb, O::ya},  // x_β⊗(x_α∗y_β)⊗y_α
      {-1, O::xa, O::yb, 0, O::xb, O::ya},  // (x_α∗y_β)⊗x_β⊗y_α
      {-1, O::ya, O::xb, 0, O::xa, O::yb},  // (y_α∗x_β)⊗x_α⊗y_β
  };
  static const Catalog plybe = {
      {+1, O::xa, O::xb, 0, O::yb, O::ya},  // (x_α∘x_β)⊗y_β⊗y_α
      {+1, O::xa, O::yb, 1, O::xb, O::ya},  // x_β⊗(x_α∘y_β)⊗y_α
      {+1, O::ya, O::xb, 0, O::xa, O::yb},  // (y_α∘x_β)⊗x_α⊗y_β
      {+1, O::ya, O::yb, 2, O::xb, O::xa},  // x_β⊗x_α⊗(y_α∘y_β)
      {-1, O::xa, O::xb, 1, O::yb, O::ya},  // y_β⊗(x_α∘x_β)⊗y_α
      {-1, O::ya, O::xb, 1, O::xa, O::yb},  // x_α⊗(y_α∘x_β)⊗y_β
      {-1, O::xa, O::yb, 0, O::xb, O::ya},  // (x_α∘y_β)⊗x_β⊗y_α
      {-1, O::ya, O::yb, 2, O::xa, O::xb},  // x_α⊗x_β⊗(y_α∘y_β)
  };
  static const Catalog aybe = {
      {+1, O::xa, O::xb, 0, O::ya, O::yb},  // (x_α·x_β)⊗y_α⊗y_β
      {+1, O::ya, O::yb, 2, O::xa, O::xb},  // x_α⊗x_β⊗(y_α·y_β)
      {-1, O::xa, O::yb, 1, O::xb, O::ya},  // x_β⊗(x_α·y_β)⊗y_α
  };
  static const Catalog cybe = {
      {+1, O::xa, O::xb, 0, O::ya, O::yb},  // [x_α,x_β]⊗y_α⊗y_β
      {+1, O::ya, O::xb, 1, O::xa, O::yb},  // x_α⊗[y_α,x_β]⊗y_β
      {+1, O::ya, O::yb, 2, O::xa, O::xb},  // x_α⊗x_β⊗[y_α,y_β]
  };
  switch (k) {
    case YbeKind::ZYBE:
      return zybe;
    case YbeKind::PLYBE:
      return plybe;
    case YbeKind::AYBE:
      return aybe;
    default:
      return cybe;
  }
}

// Four-placement forms of ZYBE/PLYBE, valid when flip(r) = r.
const Catalog& simplified_catalog(YbeKind k) {
  using O = Operand;
  static const Catalog zybe = {
      {+1, O::ya, O::yb, 2, O::xa, O::xb},  // x_α⊗x_β⊗(y_α∗y_β)
      {+1, O::ya, O::yb, 2, O::xb, O::xa},  // x_β⊗x_α⊗(y_α∗y_β)
      {-1, O::xa, O::xb, 0, O::ya, O::yb},  // (x_α∗x_β)⊗y_α⊗y_β
      {-1, O::ya, O::xb, 1, O::xa, O::yb},  // x_α⊗(y_α∗x_β)⊗y_β
  };
  static const Catalog plybe = {
      {+1, O::xa, O::xb, 0, O::ya, O::yb},  // (x_α∘x_β)⊗y_α⊗y_β
      {+1, O::ya, O::yb, 2, O::xb, O::xa},  // x_β⊗x_α⊗(y_α∘y_β)
      {-1, O::ya, O::xb, 1, O::xa, O::yb},  // x_α⊗(y_α∘x_β)⊗y_β
      {-1, O::ya, O::yb, 2, O::xa, O::xb},  // x_α⊗x_β⊗(y_α∘y_β)
  };
  return k == YbeKind::ZYBE ? zybe : plybe;
}

// Product slot a single equation consumes.
const char* equation_slot(YbeKind k) {
  switch (k) {
    case YbeKind::ZYBE:
      return "zinbiel";
    case YbeKind::PLYBE:
      return "prelie";
    case YbeKind::AYBE:
      return "dot";
    default:
      return "bracket";
  }
}

const StructureConstants& pick_product(YbeKind k, const AlgebraBundle& a) {
  const char* slot = equation_slot(k);
  auto it = a.products.find(slot);
  if (it == a.products.end())
    throw Error(ybe_name(k) + " needs the " + slot + " product; kind " + kind_name(a.kind) +
                " does not provide it");
  return it->second;
}

void check_r_shape(const BasisSpace& space, const Tensor& r, const std::string& who) {
  if (r.rank() != 2 || r.leg(0) != space || r.leg(1) != space)
    throw Error(who + ": r must be rank 2 over the algebra's space on both legs");
}

Tensor eval_catalog(const Catalog& cat, const StructureConstants& prod, const Tensor& r) {
  const BasisSpace& s = prod.space();
  Tensor out({s, s, s});
  for (const auto& [ka, va] : r.coeffs()) {
    for (const auto& [kb, vb] : r.coeffs()) {
      const int ops[4] = {ka[0], ka[1], kb[0], kb[1]};  // xa ya xb yb
      const Rational w0 = va * vb;
      for (const auto& p : cat) {
        Tensor pr = prod.prod_basis(ops[static_cast<int>(p.f1)], ops[static_cast<int>(p.f2)]);
        if (pr.is_zero()) continue;
        const Rational w = p.sign > 0 ? w0 : -w0;
        const int rest[2] = {ops[static_cast<int>(p.o1)], ops[static_cast<int>(p.o2)]};
        for (const auto& [pk, pv] : pr.coeffs()) {
          Tensor::Key key{};
          key[p.pos] = pk[0];
          int t = 0;
          for (int pos = 0; pos < 3; ++pos)
            if (pos != p.pos) key[pos] = rest[t++];
          out.add(key, w * pv);
        }
      }
    }
  }
  return out;
}

// Component equations of a kind, in result order.
std::vector<YbeKind> components(YbeKind k) {
  switch (k) {
    case YbeKind::PYBE:
      return {YbeKind::AYBE, YbeKind::CYBE};
    case YbeKind::PPYBE:
      return {YbeKind::ZYBE, YbeKind::PLYBE};
    default:
      return {k};
  }
}

}  // namespace

std::string ybe_name(YbeKind k) {
  switch (k) {
    case YbeKind::ZYBE:
      return "zybe";
    case YbeKind::PLYBE:
      return "plybe";
    case YbeKind::AYBE:
      return "aybe";
    case YbeKind::CYBE:
      return "cybe";
    case YbeKind::PYBE:
      return "pybe";
    default:
      return "ppybe";
  }
}

std::optional<YbeKind> ybe_from_name(std::string_view s) {
  if (s == "zybe") return YbeKind::ZYBE;
  if (s == "plybe") return YbeKind::PLYBE;
  if (s == "aybe") return YbeKind::AYBE;
  if (s == "cybe") return YbeKind::CYBE;
  if (s == "pybe") return YbeKind::PYBE;
  if (s == "ppybe") return YbeKind::PPYBE;
  return std::nullopt;
}

std::vector<Tensor> residual(YbeKind kind, const AlgebraBundle& a, const Tensor& r) {
  check_r_shape(a.space, r, "residual");
  std::vector<Tensor> out;
  for (YbeKind single : components(kind))
    out.push_back(eval_catalog(full_catalog(single), pick_product(single, a), r));
  return out;
}

Tensor symmetric_simplified_residual(YbeKind kind, const AlgebraBundle& a, const Tensor& r) {
  if (kind != YbeKind::ZYBE && kind != YbeKind::PLYBE)
    throw Error("symmetric_simplified_residual handles zybe and plybe only");
  check_r_shape(a.space, r, "symmetric_simplified_residual");
  if (flip(r) != r) throw Error("symmetric_simplified_residual: r must be symmetric");
  return eval_catalog(simplified_catalog(kind), pick_product(kind, a), r);
}

Coproduct coboundary_coproduct(const std::string& kind, const AlgebraBundle& a,
                               const Tensor& r) {
  check_r_shape(a.space, r, "coboundary_coproduct");
  const char* slot = nullptr;
  if (kind == "zinbiel")
    slot = "zinbiel";
  else if (kind == "prelie")
    slot = "prelie";
  else if (kind == "assoc")
    slot = "dot";
  else if (kind == "lie")
    slot = "bracket";
  else
    throw Error("coboundary_coproduct kinds: zinbiel, prelie, assoc, lie");
  auto it = a.products.find(slot);
  if (it == a.products.end())
    throw Error("coboundary_coproduct " + kind + " needs the " + slot + " product; kind " +
                kind_name(a.kind) + " does not provide it");
  const StructureConstants& prod = it->second;

  Coproduct out(a.space);
  for (int i = 0; i < a.space.dim(); ++i) {
    const LinearMap fl = prod.left_mult(i);
    const LinearMap fr = prod.right_mult(i);
    Tensor val({a.space, a.space});
    if (kind == "zinbiel")
      val = (fl + fr).apply(r, 1) - fl.apply(r, 0);
    else if (kind == "prelie")
      val = fl.apply(r, 0) + (fl - fr).apply(r, 1);
    else if (kind == "assoc")
      val = fl.apply(r, 1) - fl.apply(r, 0);
    else
      val = fl.apply(r, 1) + fl.apply(r, 0);
    for (const auto& [k, v] : val.coeffs()) out.add(i, k[0], k[1], v);
  }
  return out;
}

BialgebraBundle triangular_bialgebra(const std::string& kind, const AlgebraBundle& a,
                                     const Tensor& r) {
  struct Row {
    YbeKind eq;
    bool symmetric;
    BialgKind bi;
    std::vector<std::pair<const char*, const char*>> coproducts;  // slot, coboundary kind
  };
  static const std::map<std::string, Row> rows = {
      {"zinbiel", {YbeKind::ZYBE, true, BialgKind::ZinbielBi, {{"vartheta", "zinbiel"}}}},
      {"prelie", {YbeKind::PLYBE, true, BialgKind::PreLieBi, {{"theta", "prelie"}}}},
      {"prepoisson",
       {YbeKind::PPYBE, true, BialgKind::PrePoissonBi,
        {{"vartheta", "zinbiel"}, {"theta", "prelie"}}}},
      {"infinitesimal", {YbeKind::AYBE, false, BialgKind::Infinitesimal, {{"Delta", "assoc"}}}},
      {"lie", {YbeKind::CYBE, false, BialgKind::LieBi, {{"delta", "lie"}}}},
      {"poisson",
       {YbeKind::PYBE, false, BialgKind::PoissonBi, {{"Delta", "assoc"}, {"delta", "lie"}}}},
  };
  auto it = rows.find(kind);
  if (it == rows.end()) throw Error("triangular_bialgebra: unknown kind " + kind);
  const Row& row = it->second;

  if (a.kind != bialg_algebra_kind(row.bi))
    throw Error("triangular_bialgebra: kind " + kind + " needs a " +
                kind_name(bialg_algebra_kind(row.bi)) + " algebra, got " + kind_name(a.kind));
  check_r_shape(a.space, r, "triangular_bialgebra");
  if (row.symmetric && flip(r) != r)
    throw Error("triangular_bialgebra: kind " + kind + " requires a symmetric r");
  if (!row.symmetric && flip(r) != -r)
    throw Error("triangular_bialgebra: kind " + kind + " requires a skew-symmetric r");

  const std::vector<YbeKind> eqs = components(row.eq);
  const std::vector<Tensor> res = residual(row.eq, a, r);
  for (size_t i = 0; i < res.size(); ++i)
    if (!res[i].is_zero())
      throw Error("triangular_bialgebra: r is not a solution (" + ybe_name(eqs[i]) +
                  " residual nonzero)");

  BialgebraBundle out;
  out.kind = row.bi;
  out.algebra = a;
  out.coalgebra = make_cobundle(bialg_coalgebra_kind(row.bi), a.space);
  for (const auto& [slot, cob] : row.coproducts)
    out.coalgebra.coproducts.at(slot) = coboundary_coproduct(cob, a, r);
  return out;
}

Tensor lift_solution(const Tensor& r, const QuadraticPermAlgebra& b) {
  if (r.rank() != 2 || r.leg(0) != r.leg(1))
    throw Error("lift_solution: r must be rank 2 with equal legs");
  const BasisSpace& bs = b.perm.space;
  const BasisSpace big = pair_space(r.leg(0), bs);
  Tensor out({big, big});
  const int db = bs.dim();
  for (const auto& [k, v] : r.coeffs())
    for (int j = 0; j < db; ++j)
      for (const auto& [kd, c] : b.duals[j].coeffs())
        out.add({pair_index(k[0], j, db), pair_index(k[1], kd[0], db), 0}, v * c);
  return out;
}

Tensor lift_solution(const Tensor& r, const WindowedGradedAlgebra& model) {
  if (r.rank() != 2 || r.leg(0) != r.leg(1))
    throw Error("lift_solution: r must be rank 2 with equal legs");
  const BasisSpace big = pair_space(r.leg(0), model.space());
  Tensor out({big, big});
  const int dw = model.space().dim();
  for (const auto& [k, v] : r.coeffs()) {
    for (int idx = 0; idx < dw; ++idx) {
      const Mono m = model.mono(idx);
      const Mono dual{-m.i1, -m.i2, m.s == 1 ? 2 : 1};
      out.add({pair_index(k[0], idx, dw), pair_index(k[1], model.index(dual), dw), 0},
              m.s == 1 ? v : -v);
    }
  }
  return out;
}

CheckReport triangular_coincidence(const std::string& kind, const AlgebraBundle& a,
                                   const QuadraticPermAlgebra& b, const Tensor& r) {
  YbeKind eq;
  CoalgKind ck;
  if (kind == "assoc") {
    eq = YbeKind::ZYBE;
    ck = CoalgKind::ZinbielCo;
  } else if (kind == "lie") {
    eq = YbeKind::PLYBE;
    ck = CoalgKind::PreLieCo;
  } else if (kind == "poisson") {
    eq = YbeKind::PPYBE;
    ck = CoalgKind::PrePoissonCo;
  } else {
    throw Error("triangular_coincidence kinds: assoc, lie, poisson");
  }
  check_r_shape(a.space, r, "triangular_coincidence");
  if (flip(r) != r) throw Error("triangular_coincidence: r must be symmetric");

  const std::vector<YbeKind> eqs = components(eq);
  const std::vector<Tensor> res = residual(eq, a, r);
  for (size_t i = 0; i < res.size(); ++i)
    if (!res[i].is_zero())
      throw Error("triangular_coincidence: r is not a solution (" + ybe_name(eqs[i]) +
                  " residual nonzero)");

  CoalgebraBundle co = make_cobundle(ck, a.space);
  if (kind != "lie") co.coproducts.at("vartheta") = coboundary_coproduct("zinbiel", a, r);
  if (kind != "assoc") co.coproducts.at("theta") = coboundary_coproduct("prelie", a, r);

  const AlgebraBundle big = induce_product(kind, a, b.perm);
  const Tensor rhat = lift_solution(r, b);

  CheckReport rep;
  auto compare = [&](const char* ind_co, const char* cob_kind) {
    const Coproduct lhs = induce_coproduct(ind_co, co, b);
    const Coproduct rhs = coboundary_coproduct(cob_kind, big, rhat);
    for (int i = 0; i < big.space.dim(); ++i) {
      ++rep.checked;
      const Tensor diff = lhs.of_basis(i) - rhs.of_basis(i);
      if (!diff.is_zero())
        rep.fail({"triangular-coincidence",
                  {ind_co, big.space.label(i)},
                  "induced minus coboundary = " + diff.str()});
    }
  };
  if (kind != "lie") compare("Delta", "assoc");
  if (kind != "assoc") compare("delta", "lie");
  return rep;
}

CheckReport lifted_residual_window(YbeKind kind, const AlgebraBundle& a,
                                   const WindowedGradedAlgebra& model, const Tensor& r,
                                   const AdmissibleRegion& region) {
  const char* ind = nullptr;
  if (kind == YbeKind::AYBE)
    ind = "assoc";
  else if (kind == YbeKind::CYBE)
    ind = "lie";
  else if (kind == YbeKind::PYBE)
    ind = "poisson";
  else
    throw Error("lifted_residual_window kinds: aybe, cybe, pybe");
  check_r_shape(a.space, r, "lifted_residual_window");
  if (region.window_radius != model.window_radius())
    throw Error("lifted_residual_window: region radius differs from the model window");
  if (region.empty()) throw Error("lifted_residual_window: empty admissible region");

  const AlgebraBundle big = induce_product(ind, a, model);
  const Tensor rhat = lift_solution(r, model);

  CheckReport rep;
  rep.window = model.window_radius();
  rep.margin = region.margin;

  const int dw = model.space().dim();
  std::vector<char> inbox(dw, 0);
  long long nbox = 0;
  for (int i = 0; i < dw; ++i) {
    inbox[i] = region.in_box(model.mono(i)) ? 1 : 0;
    nbox += inbox[i];
  }
  const long long per_leg = static_cast<long long>(a.space.dim()) * nbox;

  auto run = [&](YbeKind single) {
    const Tensor res = eval_catalog(full_catalog(single), pick_product(single, big), rhat);
    rep.checked += per_leg * per_leg * per_leg;
    for (const auto& [k, v] : res.coeffs()) {
      if (!inbox[pair_second(k[0], dw)] || !inbox[pair_second(k[1], dw)] ||
          !inbox[pair_second(k[2], dw)])
        continue;
      rep.fail({ybe_name(single),
                {big.space.label(k[0]), big.space.label(k[1]), big.space.label(k[2])},
                "coefficient " + rat_str(v)});
    }
  };
  if (kind != YbeKind::CYBE) run(YbeKind::AYBE);
  if (kind != YbeKind::AYBE) run(YbeKind::CYBE);
  return rep;
}

}  // namespace affalg
