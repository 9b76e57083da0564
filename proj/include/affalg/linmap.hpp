#pragma once

#include <map>
#include <string>
#include <utility>

#include "affalg/tensor.hpp"

namespace affalg {

enum class DualVariant { plain, negated };

// Sparse linear map; entries absent from the matrix are zero.
class LinearMap {
 public:
  LinearMap() = default;
  LinearMap(BasisSpace domain, BasisSpace codomain);
  static LinearMap identity(const BasisSpace& v);
  static LinearMap zero(const BasisSpace& domain, const BasisSpace& codomain);

  const BasisSpace& domain() const { return dom_; }
  const BasisSpace& codomain() const { return cod_; }

  Rational entry(int row, int col) const;  // row indexes codomain
  void set(int row, int col, const Rational& v);
  void add(int row, int col, const Rational& v);

  Tensor apply(const Tensor& t, int leg = 0) const;  // acts on one leg
  Tensor apply_basis(int col) const;                 // image of e_col

  LinearMap compose(const LinearMap& inner) const;  // x ↦ this(inner(x))
  LinearMap operator+(const LinearMap& o) const;
  LinearMap operator-(const LinearMap& o) const;
  LinearMap operator-() const;
  LinearMap scaled(const Rational& s) const;
  bool operator==(const LinearMap& o) const;
  bool operator!=(const LinearMap& o) const { return !(*this == o); }
  bool is_zero() const { return m_.empty(); }

  const std::map<std::pair<int, int>, Rational>& entries() const { return m_; }

  std::string str() const;

 private:
  BasisSpace dom_, cod_;
  std::map<std::pair<int, int>, Rational> m_;
};

// plain: ⟨f*(ξ),v⟩ = ⟨ξ,f(v)⟩ (transpose, mapping dual spaces);
// negated: the action convention ⟨μ*(a)(ξ),v⟩ = −⟨ξ,μ(a)(v)⟩.
LinearMap dual_map(const LinearMap& f, DualVariant variant);

// ⟨ξ2, r♯(ξ1)⟩ = ⟨ξ1⊗ξ2, r⟩: dual of leg 0 → leg 1, matrix = coefficient
// rows of r by first leg.
LinearMap sharp(const Tensor& r);

// Matrix of f⊗g on the pair space (used for r̂♯ = r♯⊗κ♯ comparisons).
LinearMap kron(const LinearMap& f, const LinearMap& g);

}  // namespace affalg
