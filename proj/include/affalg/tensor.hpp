#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "affalg/rational.hpp"
#include "affalg/space.hpp"

namespace affalg {

enum class Leg3Perm { swap12, swap23 };

// Sparse element of V1 (⊗ V2 (⊗ V3)). No zero coefficients stored; keys are
// kept in map order so equality is structural.
class Tensor {
 public:
  using Key = std::array<int, 3>;  // trailing unused slots stay 0

  explicit Tensor(std::vector<BasisSpace> legs);
  static Tensor zero(std::vector<BasisSpace> legs);
  static Tensor basis(const BasisSpace& v, int i);

  int rank() const { return static_cast<int>(legs_.size()); }
  const std::vector<BasisSpace>& legs() const { return legs_; }
  const BasisSpace& leg(int i) const { return legs_.at(i); }
  const std::map<Key, Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int term_count() const { return static_cast<int>(c_.size()); }

  Rational coeff(const Key& k) const;
  void add(const Key& k, const Rational& v);  // accumulates, drops zeros
  void set(const Key& k, const Rational& v);

  Tensor operator+(const Tensor& o) const;
  Tensor operator-(const Tensor& o) const;
  Tensor operator-() const;
  Tensor scaled(const Rational& s) const;
  bool operator==(const Tensor& o) const;
  bool operator!=(const Tensor& o) const { return !(*this == o); }

  std::string str() const;

 private:
  std::vector<BasisSpace> legs_;
  std::map<Key, Rational> c_;

  void check_compatible(const Tensor& o) const;
};

Tensor flip(const Tensor& t);                       // rank 2: τ
Tensor permute3(const Tensor& t, Leg3Perm p);       // rank 3: τ⊗id / id⊗τ
Tensor outer(const Tensor& a, const Tensor& b);     // rank sum ≤ 3

}  // namespace affalg
