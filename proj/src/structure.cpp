#include "affalg/structure.hpp"

namespace affalg {

StructureConstants::StructureConstants(BasisSpace space) : space_(std::move(space)) {
  if (!space_.valid()) throw Error("structure constants need a valid space");
}

void StructureConstants::check_index(int i) const {
  if (i < 0 || i >= space_.dim()) throw Error("structure constant index out of range");
}

Rational StructureConstants::coeff(int i, int j, int k) const {
  auto it = c_.find({i, j, k});
  return it == c_.end() ? Rational(0) : it->second;
}

void StructureConstants::set(int i, int j, int k, const Rational& v) {
  check_index(i);
  check_index(j);
  check_index(k);
  if (v == 0)
    c_.erase({i, j, k});
  else
    c_[{i, j, k}] = v;
}

void StructureConstants::add(int i, int j, int k, const Rational& v) {
  set(i, j, k, coeff(i, j, k) + v);
}

Tensor StructureConstants::prod_basis(int i, int j) const {
  check_index(i);
  check_index(j);
  Tensor out({space_});
  auto it = c_.lower_bound({i, j, 0});
  for (; it != c_.end() && it->first[0] == i && it->first[1] == j; ++it)
    out.add({it->first[2], 0, 0}, it->second);
  return out;
}

Tensor StructureConstants::prod(const Tensor& x, const Tensor& y) const {
  if (x.rank() != 1 || y.rank() != 1) throw Error("prod wants rank-1 tensors");
  if (x.leg(0) != space_ || y.leg(0) != space_) throw Error("prod: space mismatch");
  Tensor out({space_});
  for (const auto& [kx, vx] : x.coeffs())
    for (const auto& [ky, vy] : y.coeffs()) {
      auto it = c_.lower_bound({kx[0], ky[0], 0});
      for (; it != c_.end() && it->first[0] == kx[0] && it->first[1] == ky[0]; ++it)
        out.add({it->first[2], 0, 0}, vx * vy * it->second);
    }
  return out;
}

LinearMap StructureConstants::left_mult(int i) const {
  check_index(i);
  LinearMap m(space_, space_);
  auto it = c_.lower_bound({i, 0, 0});
  for (; it != c_.end() && it->first[0] == i; ++it)
    m.add(it->first[2], it->first[1], it->second);
  return m;
}

LinearMap StructureConstants::right_mult(int j) const {
  check_index(j);
  LinearMap m(space_, space_);
  for (const auto& [key, v] : c_)
    if (key[1] == j) m.add(key[2], key[0], v);
  return m;
}

LinearMap StructureConstants::left_mult(const Tensor& x) const {
  if (x.rank() != 1 || x.leg(0) != space_) throw Error("left_mult: space mismatch");
  LinearMap m = LinearMap::zero(space_, space_);
  for (const auto& [k, v] : x.coeffs()) m = m + left_mult(k[0]).scaled(v);
  return m;
}

LinearMap StructureConstants::right_mult(const Tensor& y) const {
  if (y.rank() != 1 || y.leg(0) != space_) throw Error("right_mult: space mismatch");
  LinearMap m = LinearMap::zero(space_, space_);
  for (const auto& [k, v] : y.coeffs()) m = m + right_mult(k[0]).scaled(v);
  return m;
}

StructureConstants StructureConstants::opposite() const {
  StructureConstants o(space_);
  for (const auto& [key, v] : c_) o.set(key[1], key[0], key[2], v);
  return o;
}

StructureConstants StructureConstants::operator+(const StructureConstants& o) const {
  if (space_ != o.space_) throw Error("structure constant sum: space mismatch");
  StructureConstants out = *this;
  for (const auto& [key, v] : o.c_) out.add(key[0], key[1], key[2], v);
  return out;
}

StructureConstants StructureConstants::operator-(const StructureConstants& o) const {
  return *this + o.scaled(Rational(-1));
}

StructureConstants StructureConstants::scaled(const Rational& s) const {
  StructureConstants out(space_);
  if (s == 0) return out;
  for (const auto& [key, v] : c_) out.set(key[0], key[1], key[2], v * s);
  return out;
}

bool StructureConstants::operator==(const StructureConstants& o) const {
  return space_ == o.space_ && c_ == o.c_;
}

}  // namespace affalg
