#include "affalg/linmap.hpp"

#include <sstream>

namespace affalg {

LinearMap::LinearMap(BasisSpace domain, BasisSpace codomain)
    : dom_(std::move(domain)), cod_(std::move(codomain)) {
  if (!dom_.valid() || !cod_.valid()) throw Error("linear map over empty space");
}

LinearMap LinearMap::identity(const BasisSpace& v) {
  LinearMap f(v, v);
  for (int i = 0; i < v.dim(); ++i) f.set(i, i, Rational(1));
  return f;
}

LinearMap LinearMap::zero(const BasisSpace& domain, const BasisSpace& codomain) {
  return LinearMap(domain, codomain);
}

Rational LinearMap::entry(int row, int col) const {
  auto it = m_.find({row, col});
  return it == m_.end() ? Rational(0) : it->second;
}

void LinearMap::set(int row, int col, const Rational& v) {
  m_.erase({row, col});
  add(row, col, v);
}

void LinearMap::add(int row, int col, const Rational& v) {
  if (v == 0) return;
  if (row < 0 || row >= cod_.dim() || col < 0 || col >= dom_.dim())
    throw Error("linear map entry out of range");
  auto [it, fresh] = m_.emplace(std::make_pair(row, col), v);
  if (!fresh) {
    it->second += v;
    if (it->second == 0) m_.erase(it);
  }
}

Tensor LinearMap::apply(const Tensor& t, int leg) const {
  if (leg < 0 || leg >= t.rank()) throw Error("apply: leg out of range");
  if (t.leg(leg) != dom_) throw Error("apply: leg space differs from map domain");
  std::vector<BasisSpace> legs = t.legs();
  legs[leg] = cod_;
  Tensor r(std::move(legs));
  for (const auto& [k, v] : t.coeffs())
    for (const auto& [rc, a] : m_) {
      if (rc.second != k[leg]) continue;
      Tensor::Key nk = k;
      nk[leg] = rc.first;
      r.add(nk, a * v);
    }
  return r;
}

Tensor LinearMap::apply_basis(int col) const {
  return apply(Tensor::basis(dom_, col));
}

LinearMap LinearMap::compose(const LinearMap& inner) const {
  if (inner.cod_ != dom_) throw Error("compose: inner codomain differs from outer domain");
  LinearMap r(inner.dom_, cod_);
  for (const auto& [rc1, a] : m_)
    for (const auto& [rc2, b] : inner.m_)
      if (rc1.second == rc2.first) r.add(rc1.first, rc2.second, a * b);
  return r;
}

LinearMap LinearMap::operator+(const LinearMap& o) const {
  if (dom_ != o.dom_ || cod_ != o.cod_) throw Error("map shape mismatch");
  LinearMap r = *this;
  for (const auto& [rc, v] : o.m_) r.add(rc.first, rc.second, v);
  return r;
}

LinearMap LinearMap::operator-(const LinearMap& o) const {
  if (dom_ != o.dom_ || cod_ != o.cod_) throw Error("map shape mismatch");
  LinearMap r = *this;
  for (const auto& [rc, v] : o.m_) r.add(rc.first, rc.second, -v);
  return r;
}

LinearMap LinearMap::operator-() const { return scaled(Rational(-1)); }

LinearMap LinearMap::scaled(const Rational& s) const {
  LinearMap r(dom_, cod_);
  if (s == 0) return r;
  for (const auto& [rc, v] : m_) r.m_.emplace(rc, v * s);
  return r;
}

bool LinearMap::operator==(const LinearMap& o) const {
  return dom_ == o.dom_ && cod_ == o.cod_ && m_ == o.m_;
}

std::string LinearMap::str() const {
  std::ostringstream out;
  bool first = true;
  for (int c = 0; c < dom_.dim(); ++c) {
    Tensor img = apply_basis(c);
    if (img.is_zero()) continue;
    if (!first) out << "; ";
    first = false;
    out << dom_.label(c) << " -> " << img.str();
  }
  return first ? "0" : out.str();
}

LinearMap dual_map(const LinearMap& f, DualVariant variant) {
  LinearMap r(dual_space(f.codomain()), dual_space(f.domain()));
  for (const auto& [rc, v] : f.entries()) {
    // rows/cols swap; dual bases pair positionally
    r.add(rc.second, rc.first, variant == DualVariant::plain ? v : -v);
  }
  return r;
}

LinearMap sharp(const Tensor& r) {
  if (r.rank() != 2) throw Error("sharp needs a rank-2 tensor");
  LinearMap f(dual_space(r.leg(0)), r.leg(1));
  for (const auto& [k, v] : r.coeffs()) f.add(k[1], k[0], v);
  return f;
}

LinearMap kron(const LinearMap& f, const LinearMap& g) {
  LinearMap r(pair_space(f.domain(), g.domain()), pair_space(f.codomain(), g.codomain()));
  int dom_gd = g.domain().dim(), cod_gd = g.codomain().dim();
  for (const auto& [rc1, a] : f.entries())
    for (const auto& [rc2, b] : g.entries())
      r.add(pair_index(rc1.first, rc2.first, cod_gd),
            pair_index(rc1.second, rc2.second, dom_gd), a * b);
  return r;
}

}  // namespace affalg
