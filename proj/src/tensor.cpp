#include "affalg/tensor.hpp"

#include <sstream>

namespace affalg {

Tensor::Tensor(std::vector<BasisSpace> legs) : legs_(std::move(legs)) {
  if (legs_.empty() || legs_.size() > 3)
    throw Error("tensor rank must be 1, 2 or 3");
  for (const auto& l : legs_)
    if (!l.valid()) throw Error("tensor leg over empty space");
}

Tensor Tensor::zero(std::vector<BasisSpace> legs) { return Tensor(std::move(legs)); }

Tensor Tensor::basis(const BasisSpace& v, int i) {
  Tensor t({v});
  t.set({i, 0, 0}, Rational(1));
  return t;
}

Rational Tensor::coeff(const Key& k) const {
  auto it = c_.find(k);
  return it == c_.end() ? Rational(0) : it->second;
}

void Tensor::add(const Key& k, const Rational& v) {
  if (v == 0) return;
  for (int leg = 0; leg < rank(); ++leg)
    if (k[leg] < 0 || k[leg] >= legs_[leg].dim())
      throw Error("tensor index out of range for leg " + std::to_string(leg));
  for (int leg = rank(); leg < 3; ++leg)
    if (k[leg] != 0) throw Error("unused tensor key slot must stay 0");
  auto [it, fresh] = c_.emplace(k, v);
  if (!fresh) {
    it->second += v;
    if (it->second == 0) c_.erase(it);
  }
}

void Tensor::set(const Key& k, const Rational& v) {
  c_.erase(k);
  add(k, v);
}

void Tensor::check_compatible(const Tensor& o) const {
  if (legs_.size() != o.legs_.size()) throw Error("tensor rank mismatch");
  for (size_t i = 0; i < legs_.size(); ++i)
    if (legs_[i] != o.legs_[i]) throw Error("tensor leg space mismatch");
}

Tensor Tensor::operator+(const Tensor& o) const {
  check_compatible(o);
  Tensor r = *this;
  for (const auto& [k, v] : o.c_) r.add(k, v);
  return r;
}

Tensor Tensor::operator-(const Tensor& o) const {
  check_compatible(o);
  Tensor r = *this;
  for (const auto& [k, v] : o.c_) r.add(k, -v);
  return r;
}

Tensor Tensor::operator-() const { return scaled(Rational(-1)); }

Tensor Tensor::scaled(const Rational& s) const {
  Tensor r(legs_);
  if (s == 0) return r;
  for (const auto& [k, v] : c_) r.c_.emplace(k, v * s);
  return r;
}

bool Tensor::operator==(const Tensor& o) const {
  if (legs_.size() != o.legs_.size()) return false;
  for (size_t i = 0; i < legs_.size(); ++i)
    if (legs_[i] != o.legs_[i]) return false;
  return c_ == o.c_;
}

std::string Tensor::str() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, v] : c_) {
    if (!first) out << " + ";
    first = false;
    out << rat_str(v) << " ";
    for (int leg = 0; leg < rank(); ++leg) {
      if (leg) out << "⊗";
      out << legs_[leg].label(k[leg]);
    }
  }
  return out.str();
}

Tensor flip(const Tensor& t) {
  if (t.rank() != 2) throw Error("flip needs a rank-2 tensor");
  Tensor r({t.leg(1), t.leg(0)});
  for (const auto& [k, v] : t.coeffs()) r.add({k[1], k[0], 0}, v);
  return r;
}

Tensor permute3(const Tensor& t, Leg3Perm p) {
  if (t.rank() != 3) throw Error("permute3 needs a rank-3 tensor");
  std::vector<BasisSpace> legs;
  if (p == Leg3Perm::swap12)
    legs = {t.leg(1), t.leg(0), t.leg(2)};
  else
    legs = {t.leg(0), t.leg(2), t.leg(1)};
  Tensor r(std::move(legs));
  for (const auto& [k, v] : t.coeffs()) {
    if (p == Leg3Perm::swap12)
      r.add({k[1], k[0], k[2]}, v);
    else
      r.add({k[0], k[2], k[1]}, v);
  }
  return r;
}

Tensor outer(const Tensor& a, const Tensor& b) {
  if (a.rank() + b.rank() > 3) throw Error("outer product exceeds rank 3");
  std::vector<BasisSpace> legs = a.legs();
  for (const auto& l : b.legs()) legs.push_back(l);
  Tensor r(std::move(legs));
  for (const auto& [ka, va] : a.coeffs())
    for (const auto& [kb, vb] : b.coeffs()) {
      Tensor::Key k{0, 0, 0};
      for (int i = 0; i < a.rank(); ++i) k[i] = ka[i];
      for (int i = 0; i < b.rank(); ++i) k[a.rank() + i] = kb[i];
      r.add(k, va * vb);
    }
  return r;
}

}  // namespace affalg
