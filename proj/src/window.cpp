#include "affalg/window.hpp"

#include <algorithm>
#include <sstream>
#include <utility>
#include <vector>

namespace affalg {

namespace {

int iabs(int x) { return x < 0 ? -x : x; }

bool fits(const Mono& m, int bound) { return iabs(m.i1) <= bound && iabs(m.i2) <= bound; }

}  // namespace

std::string Mono::label() const {
  std::ostringstream out;
  out << "(" << i1 << "," << i2 << "," << s << ")";
  return out.str();
}

WindowedGradedAlgebra::WindowedGradedAlgebra(int window_radius) : n_(window_radius) {
  if (window_radius < 1) throw Error("window radius must be at least 1");
  int w = 2 * n_ + 1;
  std::vector<std::string> labels;
  labels.reserve(2 * w * w);
  for (int s = 1; s <= 2; ++s)
    for (int i1 = -n_; i1 <= n_; ++i1)
      for (int i2 = -n_; i2 <= n_; ++i2) labels.push_back(Mono{i1, i2, s}.label());
  space_ = BasisSpace("B", std::move(labels));
}

bool WindowedGradedAlgebra::in_window(const Mono& m) const {
  return (m.s == 1 || m.s == 2) && fits(m, n_);
}

int WindowedGradedAlgebra::index(const Mono& m) const {
  if (!in_window(m)) throw Error("monomial " + m.label() + " is out of window");
  int w = 2 * n_ + 1;
  return (m.s - 1) * w * w + (m.i1 + n_) * w + (m.i2 + n_);
}

Mono WindowedGradedAlgebra::mono(int index) const {
  int w = 2 * n_ + 1;
  if (index < 0 || index >= 2 * w * w) throw Error("window index out of range");
  return Mono{index / w % w - n_, index % w - n_, index / (w * w) + 1};
}

MonoProd WindowedGradedAlgebra::diamond(const Mono& a, const Mono& b) const {
  Mono out{a.i1 + b.i1, a.i2 + b.i2, b.s};
  (a.s == 1 ? out.i1 : out.i2) += 1;
  return {out, fits(out, n_)};
}

Rational WindowedGradedAlgebra::omega_eval(const Mono& a, const Mono& b) const {
  if (a.i1 + b.i1 != 0 || a.i2 + b.i2 != 0) return 0;
  if (a.s == 2 && b.s == 1) return 1;
  if (a.s == 1 && b.s == 2) return -1;
  return 0;
}

BilinearForm WindowedGradedAlgebra::omega() const {
  BilinearForm f(space_, FormSymmetry::antisymmetric);
  for (int i1 = -n_; i1 <= n_; ++i1)
    for (int i2 = -n_; i2 <= n_; ++i2) {
      Mono hi{i1, i2, 2}, lo{-i1, -i2, 1};
      f.set(index(hi), index(lo), 1);
      f.set(index(lo), index(hi), -1);
    }
  return f;
}

int WindowedGradedAlgebra::omega_grade() const {
  int grade = 0;
  bool seen = false;
  for (int i = 0; i < space_.dim(); ++i)
    for (int j = 0; j < space_.dim(); ++j) {
      Mono a = mono(i), b = mono(j);
      if (omega_eval(a, b) == 0) continue;
      int sum = a.degree() + b.degree();
      if (seen && sum != grade) throw Error("pairing is not graded");
      grade = sum;
      seen = true;
    }
  if (!seen) throw Error("pairing vanishes on the window");
  return grade;
}

WindowedGradedAlgebra grperm_window(int window_radius) {
  return WindowedGradedAlgebra(window_radius);
}

Coproduct nu_from_omega(const WindowedGradedAlgebra& model) {
  int n = model.window_radius();
  Coproduct nu(model.space());
  for (int b = 0; b < model.space().dim(); ++b) {
    Mono m = model.mono(b);
    for (int i1 = -n; i1 <= n; ++i1)
      for (int i2 = -n; i2 <= n; ++i2) {
        Mono left1{i1, i2, 1}, right1{m.i1 - i1, m.i2 - i2 + 1, m.s};
        if (model.in_window(right1)) nu.add(b, model.index(left1), model.index(right1), 1);
        Mono left2{i1, i2, 2}, right2{m.i1 - i1 + 1, m.i2 - i2, m.s};
        if (model.in_window(right2)) nu.add(b, model.index(left2), model.index(right2), -1);
      }
  }
  return nu;
}

bool AdmissibleRegion::in_box(const Mono& m) const { return fits(m, box_radius()); }

namespace {

// Symbolic pair-basis leg; a = -1 marks a pure model leg. Monomials are not
// window-restricted here: the engine tracks exact exponents and only the
// final certification step projects onto the window basis.
struct Ent {
  int a = -1;
  Mono m;
  auto operator<=>(const Ent&) const = default;
};

using EKey = std::vector<Ent>;
using SymTensor = std::map<EKey, Rational>;

void sym_add(SymTensor& t, EKey k, const Rational& v) {
  if (v == 0) return;
  auto it = t.find(k);
  if (it == t.end()) {
    t.emplace(std::move(k), v);
    return;
  }
  it->second += v;
  if (it->second == 0) t.erase(it);
}

void sym_acc(SymTensor& t, const SymTensor& o, int sign) {
  for (const auto& [k, v] : o) sym_add(t, k, sign > 0 ? v : -v);
}

// Rank-1 symbolic element with exact (unwindowed) monomials.
using Term = std::pair<Ent, Rational>;
using Small = std::vector<Term>;

void small_add(Small& v, const Ent& e, const Rational& c) {
  if (c == 0) return;
  for (auto& [e2, c2] : v)
    if (e2 == e) {
      c2 += c;
      return;
    }
  v.push_back({e, c});
}

Small small_normal(Small v) {
  std::sort(v.begin(), v.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  Small out;
  for (auto& t : v)
    if (t.second != 0) out.push_back(std::move(t));
  return out;
}

bool small_equal(const Small& a, const Small& b) { return small_normal(a) == small_normal(b); }

enum CoKind { kDelta, kSmallDelta, kNu };

struct Engine {
  const WindowedGradedAlgebra& model;
  const AlgebraBundle* alg;
  const CoalgebraBundle* coalg;
  const BilinearForm* form;
  int n;
  BasisSpace pairs;  // valid only when alg or coalg is present

  const StructureConstants* zin = nullptr;
  const StructureConstants* pre = nullptr;
  const Coproduct* vt = nullptr;
  const Coproduct* th = nullptr;

  Engine(const WindowedGradedAlgebra& m, const WindowedOperands& ops)
      : model(m), alg(ops.algebra), coalg(ops.coalgebra), form(ops.form),
        n(m.window_radius()) {
    if (alg && coalg && alg->space != coalg->space)
      throw Error("windowed operands live on different base spaces");
    const BasisSpace* a = alg ? &alg->space : (coalg ? &coalg->space : nullptr);
    if (a) pairs = pair_space(*a, model.space());
    if (form && a && form->space() != *a)
      throw Error("windowed form lives on a different base space");
  }

  const StructureConstants& zinbiel_slot() {
    if (!alg) throw Error("this windowed identity needs an algebra operand");
    if (alg->kind != AlgKind::Zinbiel && alg->kind != AlgKind::PrePoisson)
      throw Error("induced dot needs a zinbiel product slot");
    return alg->product("zinbiel");
  }

  const StructureConstants& prelie_slot() {
    if (!alg) throw Error("this windowed identity needs an algebra operand");
    if (alg->kind != AlgKind::PreLie && alg->kind != AlgKind::PrePoisson)
      throw Error("induced bracket needs a prelie product slot");
    return alg->product("prelie");
  }

  const Coproduct& vartheta_slot() {
    if (!coalg) throw Error("this windowed identity needs a coalgebra operand");
    if (coalg->kind != CoalgKind::ZinbielCo && coalg->kind != CoalgKind::PrePoissonCo)
      throw Error("induced Delta needs a vartheta slot");
    return coalg->coproduct("vartheta");
  }

  const Coproduct& theta_slot() {
    if (!coalg) throw Error("this windowed identity needs a coalgebra operand");
    if (coalg->kind != CoalgKind::PreLieCo && coalg->kind != CoalgKind::PrePoissonCo)
      throw Error("induced delta needs a theta slot");
    return coalg->coproduct("theta");
  }

  int adim() const { return alg ? alg->space.dim() : coalg->space.dim(); }

  std::vector<Mono> box_monos(const AdmissibleRegion& region) const {
    std::vector<Mono> out;
    int r = region.box_radius();
    for (int s = 1; s <= 2; ++s)
      for (int i1 = -r; i1 <= r; ++i1)
        for (int i2 = -r; i2 <= r; ++i2) out.push_back({i1, i2, s});
    return out;
  }

  std::vector<Ent> pair_inputs(const AdmissibleRegion& region) const {
    std::vector<Ent> out;
    for (int a = 0; a < adim(); ++a)
      for (const Mono& m : box_monos(region)) out.push_back({a, m});
    return out;
  }

  std::string label(const Ent& y) const {
    return pairs.label(pair_index(y.a, model.index(y.m), model.space().dim()));
  }

  // ν(x^m ∂s) = Σ_i [x^i∂1 ⊗ x^{m-i+(0,1)}∂s − x^i∂2 ⊗ x^{m-i+(1,0)}∂s];
  // the free index runs over |i| ≤ cap, wide enough for the caller's later
  // per-leg clipping.
  template <class F>
  void nu_terms(const Mono& m, int cap, F&& f) const {
    for (int i1 = -cap; i1 <= cap; ++i1)
      for (int i2 = -cap; i2 <= cap; ++i2) {
        f(Mono{i1, i2, 1}, Mono{m.i1 - i1, m.i2 - i2 + 1, m.s}, 1);
        f(Mono{i1, i2, 2}, Mono{m.i1 - i1 + 1, m.i2 - i2, m.s}, -1);
      }
  }

  // Induced coproduct value on one pair element, clipped per assembled leg:
  // Delta = (id + τ)(ϑ(a) • ν(m)), delta = (id − τ)(θ(a) • ν(m)). Keeping
  // leg exponents up to bound0/bound1 retains every contribution to any
  // coefficient the caller later certifies.
  SymTensor pair_delta(CoKind kind, const Ent& y, int bound0, int bound1) const {
    const Coproduct& co = kind == kDelta ? *vt : *th;
    Rational swap_sign = kind == kDelta ? 1 : -1;
    SymTensor out;
    int cap = std::max(bound0, bound1);
    auto it = co.coeffs().lower_bound({y.a, 0, 0});
    for (; it != co.coeffs().end() && it->first[0] == y.a; ++it) {
      int aj = it->first[1], ak = it->first[2];
      const Rational& c = it->second;
      nu_terms(y.m, cap, [&](const Mono& p, const Mono& q, int nsign) {
        Rational v = nsign > 0 ? c : -c;
        if (fits(p, bound0) && fits(q, bound1)) sym_add(out, {Ent{aj, p}, Ent{ak, q}}, v);
        if (fits(q, bound0) && fits(p, bound1))
          sym_add(out, {Ent{ak, q}, Ent{aj, p}}, v * swap_sign);
      });
    }
    return out;
  }

  SymTensor nu_pair(const Mono& m, int bound0, int bound1) const {
    SymTensor out;
    nu_terms(m, std::max(bound0, bound1), [&](const Mono& p, const Mono& q, int nsign) {
      if (fits(p, bound0) && fits(q, bound1))
        sym_add(out, {Ent{-1, p}, Ent{-1, q}}, Rational(nsign));
    });
    return out;
  }

  SymTensor coproduct_of(CoKind kind, const Ent& y, int bound0, int bound1) const {
    return kind == kNu ? nu_pair(y.m, bound0, bound1) : pair_delta(kind, y, bound0, bound1);
  }

  // Applies a coproduct to one leg of a rank-2 symbolic tensor; splice order
  // matches Coproduct::expand (leg 0 → new,new,old; leg 1 → old,new,new).
  SymTensor expand_leg(const SymTensor& t, int leg, CoKind kind, int bound0,
                       int bound1) const {
    SymTensor out;
    for (const auto& [key, v] : t) {
      SymTensor parts = coproduct_of(kind, key[leg], bound0, bound1);
      for (const auto& [pk, pv] : parts) {
        EKey nk = leg == 0 ? EKey{pk[0], pk[1], key[1]} : EKey{key[0], pk[0], pk[1]};
        sym_add(out, std::move(nk), v * pv);
      }
    }
    return out;
  }

  // Left-multiplies one leg by the fixed pair element y in the induced dot
  // or bracket; products are exact, monomials may leave the window.
  SymTensor mult_leg_left(const SymTensor& t, int leg, const Ent& y, bool bracket) const {
    const StructureConstants& sc = bracket ? *pre : *zin;
    SymTensor out;
    int na = adim();
    for (const auto& [key, v] : t) {
      const Ent& x = key[leg];
      Mono fwd = model.diamond(y.m, x.m).value;
      Mono rev = model.diamond(x.m, y.m).value;
      for (int k = 0; k < na; ++k) {
        Rational c1 = sc.coeff(y.a, x.a, k);
        Rational c2 = sc.coeff(x.a, y.a, k);
        if (bracket) c2 = -c2;
        if (c1 != 0) {
          EKey nk = key;
          nk[leg] = Ent{k, fwd};
          sym_add(out, std::move(nk), v * c1);
        }
        if (c2 != 0) {
          EKey nk = key;
          nk[leg] = Ent{k, rev};
          sym_add(out, std::move(nk), v * c2);
        }
      }
    }
    return out;
  }

  // Projects onto coefficients whose every leg is in-window; those are exact
  // by the clipping bounds above, everything else is truncation noise.
  Tensor certify(const SymTensor& t, int rank, bool pure) const {
    BasisSpace leg = pure ? model.space() : pairs;
    Tensor out(std::vector<BasisSpace>(rank, leg));
    int db = model.space().dim();
    for (const auto& [key, v] : t) {
      Tensor::Key k{0, 0, 0};
      bool ok = true;
      for (int l = 0; l < rank && ok; ++l) {
        if (!model.in_window(key[l].m)) {
          ok = false;
          break;
        }
        int bi = model.index(key[l].m);
        k[l] = pure ? bi : pair_index(key[l].a, bi, db);
      }
      if (ok) out.add(k, v);
    }
    return out;
  }

  Tensor small_tensor(const Small& v) const {
    Tensor out({pairs});
    int db = model.space().dim();
    for (const auto& [e, c] : v) out.add({pair_index(e.a, model.index(e.m), db), 0, 0}, c);
    return out;
  }

  // Induced product of symbolic elements. Windowed variant refuses tuples
  // whose needed products leave the window (returns false); the exact
  // variant keeps every monomial.
  bool small_mul(const Small& x, const Small& y, bool bracket, bool windowed,
                 Small* out) const {
    const StructureConstants& sc = bracket ? *pre : *zin;
    int na = adim();
    for (const auto& [ex, cx] : x)
      for (const auto& [ey, cy] : y) {
        Rational c = cx * cy;
        if (c == 0) continue;
        MonoProd fwd = model.diamond(ex.m, ey.m);
        MonoProd rev = model.diamond(ey.m, ex.m);
        for (int k = 0; k < na; ++k) {
          Rational c1 = sc.coeff(ex.a, ey.a, k);
          Rational c2 = sc.coeff(ey.a, ex.a, k);
          if (bracket) c2 = -c2;
          if (c1 != 0) {
            if (windowed && !fwd.in_window) return false;
            small_add(*out, {k, fwd.value}, c * c1);
          }
          if (c2 != 0) {
            if (windowed && !rev.in_window) return false;
            small_add(*out, {k, rev.value}, c * c2);
          }
        }
      }
    return true;
  }

  Rational form_eval(const Small& x, const Ent& y) const {
    Rational out = 0;
    for (const auto& [e, c] : x) out += c * form->eval(e.a, y.a) * model.omega_eval(e.m, y.m);
    return out;
  }
};

std::string lhs_rhs(const Tensor& lhs, const Tensor& rhs) {
  return "lhs = " + lhs.str() + "; rhs = " + rhs.str();
}

CheckReport check_model(Engine& eng, const std::string& id, const AdmissibleRegion& region) {
  CheckReport rep;
  std::vector<Mono> box = eng.box_monos(region);
  const WindowedGradedAlgebra& model = eng.model;
  if (id == "grading") {
    for (const Mono& b1 : box)
      for (const Mono& b2 : box) {
        ++rep.checked;
        Mono p = model.diamond(b1, b2).value;
        if (p.degree() != b1.degree() + b2.degree())
          rep.fail({id,
                    {b1.label(), b2.label()},
                    "degree " + std::to_string(p.degree()) + " != " +
                        std::to_string(b1.degree() + b2.degree())});
      }
    return rep;
  }
  for (const Mono& b1 : box)
    for (const Mono& b2 : box)
      for (const Mono& b3 : box) {
        ++rep.checked;
        Mono d12 = model.diamond(b1, b2).value;
        Rational r;
        if (id == "omega-invariance") {
          Mono d23 = model.diamond(b2, b3).value;
          Mono d32 = model.diamond(b3, b2).value;
          r = model.omega_eval(d12, b3) - model.omega_eval(b1, d23) +
              model.omega_eval(b1, d32);
        } else {  // omega-derived
          Mono d13 = model.diamond(b1, b3).value;
          r = model.omega_eval(d12, b3) - model.omega_eval(b2, d13);
        }
        if (r != 0)
          rep.fail({id, {b1.label(), b2.label(), b3.label()}, "residual = " + rat_str(r)});
      }
  return rep;
}

CheckReport check_products(Engine& eng, const std::string& id,
                           const AdmissibleRegion& region) {
  CheckReport rep;
  bool dot = id == "comm" || id == "assoc" || id == "leibniz";
  bool br = id == "antisym" || id == "jacobi" || id == "leibniz";
  if (dot) eng.zin = &eng.zinbiel_slot();
  if (br) eng.pre = &eng.prelie_slot();
  std::vector<Ent> ys = eng.pair_inputs(region);
  int m = static_cast<int>(ys.size());

  auto one = [](const Ent& y) { return Small{{y, 1}}; };

  if (id == "comm" || id == "antisym") {
    bool bracket = id == "antisym";
    for (int i = 0; i < m; ++i)
      for (int j = i; j < m; ++j) {
        Small lhs, rhs;
        if (!eng.small_mul(one(ys[i]), one(ys[j]), bracket, true, &lhs) ||
            !eng.small_mul(one(ys[j]), one(ys[i]), bracket, true, &rhs)) {
          ++rep.skipped;
          continue;
        }
        if (bracket)
          for (auto& t : rhs) t.second = -t.second;
        ++rep.checked;
        if (!small_equal(lhs, rhs))
          rep.fail({id,
                    {eng.label(ys[i]), eng.label(ys[j])},
                    lhs_rhs(eng.small_tensor(lhs), eng.small_tensor(rhs))});
      }
    return rep;
  }

  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) {
        Small lhs, rhs;
        bool ok = true;
        if (id == "assoc") {
          Small t12, t23;
          ok = eng.small_mul(one(ys[i]), one(ys[j]), false, true, &t12) &&
               eng.small_mul(t12, one(ys[k]), false, true, &lhs) &&
               eng.small_mul(one(ys[j]), one(ys[k]), false, true, &t23) &&
               eng.small_mul(one(ys[i]), t23, false, true, &rhs);
        } else if (id == "jacobi") {
          Small t1, t2, t3;
          ok = eng.small_mul(one(ys[j]), one(ys[k]), true, true, &t1) &&
               eng.small_mul(one(ys[i]), t1, true, true, &lhs) &&
               eng.small_mul(one(ys[k]), one(ys[i]), true, true, &t2) &&
               eng.small_mul(one(ys[j]), t2, true, true, &lhs) &&
               eng.small_mul(one(ys[i]), one(ys[j]), true, true, &t3) &&
               eng.small_mul(one(ys[k]), t3, true, true, &lhs);
        } else {  // leibniz
          Small t23, t12, t13;
          ok = eng.small_mul(one(ys[j]), one(ys[k]), false, true, &t23) &&
               eng.small_mul(one(ys[i]), t23, true, true, &lhs) &&
               eng.small_mul(one(ys[i]), one(ys[j]), true, true, &t12) &&
               eng.small_mul(t12, one(ys[k]), false, true, &rhs) &&
               eng.small_mul(one(ys[i]), one(ys[k]), true, true, &t13) &&
               eng.small_mul(one(ys[j]), t13, false, true, &rhs);
        }
        if (!ok) {
          ++rep.skipped;
          continue;
        }
        ++rep.checked;
        if (!small_equal(lhs, rhs))
          rep.fail({id,
                    {eng.label(ys[i]), eng.label(ys[j]), eng.label(ys[k])},
                    lhs_rhs(eng.small_tensor(lhs), eng.small_tensor(rhs))});
      }
  return rep;
}

CheckReport check_perm_co(Engine& eng, const std::string& id,
                          const AdmissibleRegion& region) {
  CheckReport rep;
  int n = eng.n;
  for (const Mono& b : eng.box_monos(region)) {
    SymTensor left = eng.expand_leg(eng.nu_pair(b, 2 * n + 1, n), 0, kNu, n, n);
    SymTensor right = eng.expand_leg(eng.nu_pair(b, n, 2 * n + 1), 1, kNu, n, n);
    Tensor tl = eng.certify(left, 3, true);
    Tensor tr = eng.certify(right, 3, true);
    Tensor residual =
        id == "perm-co-1" ? tl - tr : tr - permute3(tl, Leg3Perm::swap12);
    ++rep.checked;
    if (!residual.is_zero()) rep.fail({id, {b.label()}, "residual = " + residual.str()});
  }
  return rep;
}

CheckReport check_coalgebra(Engine& eng, const std::string& id,
                            const AdmissibleRegion& region) {
  CheckReport rep;
  int n = eng.n;
  bool big = id == "cocomm" || id == "coassoc" || id == "poisson-co";
  bool small = id == "co-antisym" || id == "co-jacobi" || id == "poisson-co";
  if (big) eng.vt = &eng.vartheta_slot();
  if (small) eng.th = &eng.theta_slot();
  for (const Ent& y : eng.pair_inputs(region)) {
    Tensor residual({eng.pairs});
    if (id == "cocomm" || id == "co-antisym") {
      CoKind kind = id == "cocomm" ? kDelta : kSmallDelta;
      Tensor t = eng.certify(eng.pair_delta(kind, y, n, n), 2, false);
      residual = id == "cocomm" ? flip(t) - t : flip(t) + t;
    } else if (id == "coassoc") {
      Tensor l = eng.certify(
          eng.expand_leg(eng.pair_delta(kDelta, y, 2 * n + 1, n), 0, kDelta, n, n), 3,
          false);
      Tensor r = eng.certify(
          eng.expand_leg(eng.pair_delta(kDelta, y, n, 2 * n + 1), 1, kDelta, n, n), 3,
          false);
      residual = l - r;
    } else if (id == "co-jacobi") {
      Tensor b = eng.certify(
          eng.expand_leg(eng.pair_delta(kSmallDelta, y, n, 2 * n + 1), 1, kSmallDelta, n, n),
          3, false);
      Tensor c = eng.certify(
          eng.expand_leg(eng.pair_delta(kSmallDelta, y, 2 * n + 1, n), 0, kSmallDelta, n, n),
          3, false);
      residual = b - permute3(b, Leg3Perm::swap12) - c;
    } else {  // poisson-co: (id⊗Δ)δ = (δ⊗id)Δ + (τ⊗id)(id⊗δ)Δ
      Tensor lhs = eng.certify(
          eng.expand_leg(eng.pair_delta(kSmallDelta, y, n, 2 * n + 1), 1, kDelta, n, n), 3,
          false);
      Tensor r1 = eng.certify(
          eng.expand_leg(eng.pair_delta(kDelta, y, 2 * n + 1, n), 0, kSmallDelta, n, n), 3,
          false);
      Tensor r2 = eng.certify(
          eng.expand_leg(eng.pair_delta(kDelta, y, n, 2 * n + 1), 1, kSmallDelta, n, n), 3,
          false);
      residual = lhs - r1 - permute3(r2, Leg3Perm::swap12);
    }
    ++rep.checked;
    if (!residual.is_zero()) rep.fail({id, {eng.label(y)}, "residual = " + residual.str()});
  }
  return rep;
}

CheckReport check_compat(Engine& eng, const std::string& id,
                         const AdmissibleRegion& region) {
  CheckReport rep;
  int keep = 2 * eng.n + 2;
  bool needs_dot = id == "inf-bialg" || id == "poisson-bialg-1" || id == "poisson-bialg-2";
  bool needs_br = id != "inf-bialg";
  if (needs_dot) eng.zin = &eng.zinbiel_slot();
  if (needs_br) eng.pre = &eng.prelie_slot();
  if (id == "inf-bialg" || id == "poisson-bialg-1" || id == "poisson-bialg-2")
    eng.vt = &eng.vartheta_slot();
  if (id != "inf-bialg") eng.th = &eng.theta_slot();

  std::vector<Ent> ys = eng.pair_inputs(region);
  auto co_of_product = [&](CoKind kind, const Ent& y1, const Ent& y2, bool bracket) {
    Small prod;
    eng.small_mul({{y1, 1}}, {{y2, 1}}, bracket, false, &prod);
    SymTensor out;
    for (const auto& [e, c] : prod) {
      SymTensor part = eng.pair_delta(kind, e, keep, keep);
      for (const auto& [k, v] : part) sym_add(out, k, v * c);
    }
    return out;
  };

  for (const Ent& y1 : ys)
    for (const Ent& y2 : ys) {
      SymTensor residual;
      if (id == "inf-bialg") {
        residual = co_of_product(kDelta, y1, y2, false);
        SymTensor d1 = eng.pair_delta(kDelta, y1, keep, keep);
        SymTensor d2 = eng.pair_delta(kDelta, y2, keep, keep);
        sym_acc(residual, eng.mult_leg_left(d1, 0, y2, false), -1);
        sym_acc(residual, eng.mult_leg_left(d2, 1, y1, false), -1);
      } else if (id == "lie-bialg") {
        residual = co_of_product(kSmallDelta, y1, y2, true);
        SymTensor d1 = eng.pair_delta(kSmallDelta, y1, keep, keep);
        SymTensor d2 = eng.pair_delta(kSmallDelta, y2, keep, keep);
        sym_acc(residual, eng.mult_leg_left(d2, 0, y1, true), -1);
        sym_acc(residual, eng.mult_leg_left(d2, 1, y1, true), -1);
        sym_acc(residual, eng.mult_leg_left(d1, 0, y2, true), 1);
        sym_acc(residual, eng.mult_leg_left(d1, 1, y2, true), 1);
      } else if (id == "poisson-bialg-1") {
        residual = co_of_product(kDelta, y1, y2, true);
        SymTensor D2 = eng.pair_delta(kDelta, y2, keep, keep);
        SymTensor d1 = eng.pair_delta(kSmallDelta, y1, keep, keep);
        sym_acc(residual, eng.mult_leg_left(D2, 0, y1, true), -1);
        sym_acc(residual, eng.mult_leg_left(D2, 1, y1, true), -1);
        sym_acc(residual, eng.mult_leg_left(d1, 0, y2, false), -1);
        sym_acc(residual, eng.mult_leg_left(d1, 1, y2, false), 1);
      } else {  // poisson-bialg-2
        residual = co_of_product(kSmallDelta, y1, y2, false);
        SymTensor d1 = eng.pair_delta(kSmallDelta, y1, keep, keep);
        SymTensor d2 = eng.pair_delta(kSmallDelta, y2, keep, keep);
        SymTensor D1 = eng.pair_delta(kDelta, y1, keep, keep);
        SymTensor D2 = eng.pair_delta(kDelta, y2, keep, keep);
        sym_acc(residual, eng.mult_leg_left(d2, 0, y1, false), -1);
        sym_acc(residual, eng.mult_leg_left(d1, 0, y2, false), -1);
        sym_acc(residual, eng.mult_leg_left(D2, 1, y1, true), -1);
        sym_acc(residual, eng.mult_leg_left(D1, 1, y2, true), -1);
      }
      ++rep.checked;
      Tensor t = eng.certify(residual, 2, false);
      if (!t.is_zero())
        rep.fail({id, {eng.label(y1), eng.label(y2)}, "residual = " + t.str()});
    }
  return rep;
}

CheckReport check_form(Engine& eng, const std::string& id, const AdmissibleRegion& region) {
  CheckReport rep;
  if (!eng.form) throw Error("this windowed identity needs a form operand");
  bool bracket = id == "qf-lie";
  if (bracket)
    eng.pre = &eng.prelie_slot();
  else
    eng.zin = &eng.zinbiel_slot();

  std::vector<Ent> ys = eng.pair_inputs(region);
  for (const Ent& y1 : ys)
    for (const Ent& y2 : ys)
      for (const Ent& y3 : ys) {
        Small p12, p23, p31;
        eng.small_mul({{y1, 1}}, {{y2, 1}}, bracket, false, &p12);
        eng.small_mul({{y2, 1}}, {{y3, 1}}, bracket, false, &p23);
        eng.small_mul({{y3, 1}}, {{y1, 1}}, bracket, false, &p31);
        Rational r =
            eng.form_eval(p12, y3) + eng.form_eval(p23, y1) + eng.form_eval(p31, y2);
        ++rep.checked;
        if (r != 0)
          rep.fail({id,
                    {eng.label(y1), eng.label(y2), eng.label(y3)},
                    "residual = " + rat_str(r)});
      }
  return rep;
}

}  // namespace

CheckReport windowed_check(const std::string& identity, const WindowedOperands& ops,
                           const AdmissibleRegion& region) {
  if (!ops.model) throw Error("windowed check needs a model operand");
  const WindowedGradedAlgebra& model = *ops.model;
  if (region.window_radius != model.window_radius())
    throw Error("region window radius does not match the model");
  if (region.empty())
    throw Error("windowed check '" + identity + "': empty region (window " +
                std::to_string(region.window_radius) + ", margin " +
                std::to_string(region.margin) + ")");

  Engine eng(model, ops);
  CheckReport rep;
  if (identity == "grading" || identity == "omega-invariance" || identity == "omega-derived")
    rep = check_model(eng, identity, region);
  else if (identity == "perm-co-1" || identity == "perm-co-2")
    rep = check_perm_co(eng, identity, region);
  else if (identity == "comm" || identity == "assoc" || identity == "antisym" ||
           identity == "jacobi" || identity == "leibniz")
    rep = check_products(eng, identity, region);
  else if (identity == "cocomm" || identity == "coassoc" || identity == "co-antisym" ||
           identity == "co-jacobi" || identity == "poisson-co")
    rep = check_coalgebra(eng, identity, region);
  else if (identity == "inf-bialg" || identity == "lie-bialg" ||
           identity == "poisson-bialg-1" || identity == "poisson-bialg-2")
    rep = check_compat(eng, identity, region);
  else if (identity == "connes" || identity == "qf-lie")
    rep = check_form(eng, identity, region);
  else
    throw Error("unknown windowed identity '" + identity + "'");

  rep.window = region.window_radius;
  rep.margin = region.margin;
  return rep;
}

}  // namespace affalg
