#pragma once

#include <vector>

#include "affalg/algebra.hpp"
#include "affalg/coalgebra.hpp"
#include "affalg/form.hpp"

namespace affalg {

// Finite-dimensional perm algebra with an antisymmetric nondegenerate ω.
// The constructor validates shape (kind, shared space, declared+actual
// antisymmetry, nondegeneracy) and caches the dual basis f_i with
// ω(f_i, e_j) = δ_ij. Axioms and invariance are checked separately by
// verify_quadratic.
struct QuadraticPermAlgebra {
  AlgebraBundle perm;
  BilinearForm omega;
  std::vector<Tensor> duals;

  QuadraticPermAlgebra(AlgebraBundle perm_bundle, BilinearForm form);
};

const std::vector<Tensor>& dual_basis(const QuadraticPermAlgebra& q);

// Perm axioms plus, on all basis triples,
//   "omega-invariance": ω(b1⋄b2, b3) = ω(b1, b2⋄b3 − b3⋄b2)
//   "omega-derived":    ω(b1⋄b2, b3) = ω(b2, b1⋄b3)
CheckReport verify_quadratic(const QuadraticPermAlgebra& q);

// The unique ν with ω̂(ν(b1), b2⊗b3) = −ω(b1, b2⋄b3), solved exactly from
// the dual-basis change of coordinates.
Coproduct nu_from_omega(const QuadraticPermAlgebra& q);

// Composition axioms of a (completed) perm coalgebra, per basis element:
//   "perm-co-1": (ν⊗id)ν = (id⊗ν)ν
//   "perm-co-2": (id⊗ν)ν = (τ⊗id)(ν⊗id)ν
CheckReport verify_perm_coalgebra(const Coproduct& nu);

}  // namespace affalg
