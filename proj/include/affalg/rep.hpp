#pragma once

#include <map>
#include <string>
#include <vector>

#include "affalg/algebra.hpp"

namespace affalg {

// Action slots per kind: comm-assoc {mu}; lie {rho}; poisson {mu, rho};
// zinbiel {l, r}; prelie {lhat, rhat}; prepoisson {l, r, lhat, rhat}.
const std::vector<std::string>& action_names(AlgKind k);

// actions[name][i] is the endomorphism of the module by the i-th algebra
// basis element; elements act by linear extension.
struct Representation {
  AlgebraBundle algebra;
  BasisSpace module;
  std::map<std::string, std::vector<LinearMap>> actions;

  void validate() const;
  LinearMap act_basis(const std::string& name, int i) const;
  LinearMap act(const std::string& name, const Tensor& x) const;
};

// Module = the algebra itself, acting by left/right multiplications.
Representation build_regular_rep(const AlgebraBundle& bundle);

// Module = the dual space; actions are (sums of) transposed multiplications
// with the signs fixed by the dual-action convention ⟨μ*(a)ξ,v⟩ = −⟨ξ,μ(a)v⟩:
//   comm-assoc: mu ↦ muᵀ            lie: rho ↦ −rhoᵀ
//   zinbiel:    l ↦ (fl+fr)ᵀ, r ↦ −frᵀ
//   prelie:     lhat ↦ (rhat−lhat)ᵀ, rhat ↦ rhatᵀ
// poisson / prepoisson combine the slots above.
Representation build_coregular_rep(const AlgebraBundle& bundle);

// All representation conditions of the kind, on all algebra basis pairs.
CheckReport verify_representation(const Representation& rep);

}  // namespace affalg
