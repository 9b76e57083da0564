#pragma once

#include <string>

#include "affalg/rep.hpp"
#include "affalg/ybe.hpp"

namespace affalg {

// A candidate O-operator: a linear map T from the representation's module
// into the algebra. The representation must act on the same algebra and
// carry the action slots the kind needs.
struct OOperatorProblem {
  AlgebraBundle algebra;
  Representation rep;
  LinearMap T;
};

// Defining identity per kind, checked on every module basis pair (v1, v2):
//   assoc       T(v1)·T(v2)  = T(mu(Tv1)v2 + mu(Tv2)v1)
//   zinbiel     T(v1)∗T(v2)  = T(l(Tv1)v2 + r(Tv2)v1)
//   lie         [Tv1, Tv2]   = T(rho(Tv1)v2 − rho(Tv2)v1)
//   prelie      T(v1)∘T(v2)  = T(lhat(Tv1)v2 + rhat(Tv2)v1)
//   poisson     assoc ∧ lie         prepoisson  zinbiel ∧ prelie
CheckReport o_operator_check(const std::string& kind, const OOperatorProblem& problem);

// The two sides of the operator correspondence for r ∈ A⊗A with the
// symmetry the kind assumes (skew for assoc/lie/poisson, symmetric for
// zinbiel/prelie/prepoisson): residual(matching equation, r) vanishes iff
// r♯ is an O-operator for the coregular representation. Both sides are
// computed; the report flags any disagreement.
CheckReport o_operator_equiv(const std::string& kind, const AlgebraBundle& a,
                             const Tensor& r);

// Matrix identity r̂♯ = r♯ ⊗ κ♯ for the lift over a quadratic perm algebra,
// κ = Σ_j e_j⊗f_j, compared entrywise on the pair space.
CheckReport factorization_check(const Tensor& r, const QuadraticPermAlgebra& b);

}  // namespace affalg
