#pragma once

#include <array>
#include <map>
#include <string>

#include "affalg/linmap.hpp"
#include "affalg/tensor.hpp"

namespace affalg {

// One bilinear product on a space: e_i · e_j = Σ_k c[i,j,k] e_k.
// No zero coefficients stored; indices are validated on write.
class StructureConstants {
 public:
  using Key = std::array<int, 3>;  // (i, j, k)

  StructureConstants() = default;
  explicit StructureConstants(BasisSpace space);

  const BasisSpace& space() const { return space_; }
  const std::map<Key, Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  Rational coeff(int i, int j, int k) const;
  void set(int i, int j, int k, const Rational& v);
  void add(int i, int j, int k, const Rational& v);

  Tensor prod_basis(int i, int j) const;                    // e_i · e_j
  Tensor prod(const Tensor& x, const Tensor& y) const;      // rank-1 args
  LinearMap left_mult(int i) const;                         // e_i · —
  LinearMap right_mult(int j) const;                        // — · e_j
  LinearMap left_mult(const Tensor& x) const;
  LinearMap right_mult(const Tensor& y) const;

  StructureConstants opposite() const;  // c'[i,j,k] = c[j,i,k]
  StructureConstants operator+(const StructureConstants& o) const;
  StructureConstants operator-(const StructureConstants& o) const;
  StructureConstants scaled(const Rational& s) const;
  bool operator==(const StructureConstants& o) const;
  bool operator!=(const StructureConstants& o) const { return !(*this == o); }

 private:
  BasisSpace space_;
  std::map<Key, Rational> c_;

  void check_index(int i) const;
};

}  // namespace affalg
