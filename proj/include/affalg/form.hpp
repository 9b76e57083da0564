#pragma once

#include <map>
#include <utility>
#include <vector>

#include "affalg/linmap.hpp"
#include "affalg/tensor.hpp"

namespace affalg {

enum class FormSymmetry { none, symmetric, antisymmetric };

// Bilinear form on one space, stored as a sparse matrix. The symmetry flag is
// declared by the caller and can be verified by scan.
class BilinearForm {
 public:
  BilinearForm() = default;
  BilinearForm(BasisSpace space, FormSymmetry declared);

  const BasisSpace& space() const { return space_; }
  FormSymmetry declared() const { return declared_; }

  Rational eval(int i, int j) const;
  Rational eval(const Tensor& x, const Tensor& y) const;  // rank-1 arguments
  void set(int i, int j, const Rational& v);

  bool symmetry_ok() const;     // matrix matches the declared flag
  bool nondegenerate() const;   // full rank over ℚ

  // Vectors f_i with form(f_i, e_j) = δ_ij. Requires nondegeneracy.
  std::vector<Tensor> dual_basis() const;

  const std::map<std::pair<int, int>, Rational>& entries() const { return m_; }

 private:
  BasisSpace space_;
  FormSymmetry declared_ = FormSymmetry::none;
  std::map<std::pair<int, int>, Rational> m_;
};

// ω̂: product of legwise form evaluations, summed over coefficient pairs.
// Ranks must agree and be 2 or 3.
Rational pairing_multi(const Tensor& lhs, const Tensor& rhs, const BilinearForm& form);

}  // namespace affalg
