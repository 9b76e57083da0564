#pragma once

#include <string>

#include "affalg/algebra.hpp"
#include "affalg/form.hpp"
#include "affalg/report.hpp"

namespace affalg {

// An algebra with an invariant form candidate. Kinds and their conditions
// (each quantified over all basis triples):
//   zinbiel      symmetric ϖ,  ϖ(a1∗a2+a2∗a1, a3) = ϖ(a1,a2∗a3) + ϖ(a2,a1∗a3)
//   prelie       symmetric ϖ,  ϖ(a1∘a2,a3) − ϖ(a1,a2∘a3)
//                                = ϖ(a2∘a1,a3) − ϖ(a2,a1∘a3)
//   prepoisson   both of the above with one shared ϖ
//   connes-assoc antisymmetric 𝓑,  𝓑(a1a2,a3) + 𝓑(a2a3,a1) + 𝓑(a3a1,a2) = 0
//   lie          antisymmetric 𝓑,  same cyclic sum over brackets
//   poisson      both cyclic conditions with one shared 𝓑
struct QuasiFrobenius {
  AlgebraBundle algebra;
  BilinearForm form;
  std::string kind;
};

// Identity battery ("qf-zinbiel", "qf-prelie", "connes", "qf-lie" as
// applicable). Throws on kind/algebra mismatch, wrong or undeclared form
// symmetry, or a degenerate form.
CheckReport qf_check(const QuasiFrobenius& q);

// r = Σ_i e_i ⊗ f_i with ϖ(f_i, e_j) = δ_ij; symmetric ϖ gives symmetric r.
Tensor qf_to_r(const QuasiFrobenius& q);

// Four finite shadows of one equivalence, kind "quasi-assoc" (zinbiel data)
// or "quasi-poisson" (prepoisson data): the qf conditions on (A, ϖ); the
// Yang-Baxter residual of r = qf_to_r on A; the windowed residual of the
// lifted r̂ on A⊗grperm_window(N); the windowed cocycle conditions of the
// induced 𝓑. All four verdicts must agree.
struct EquivalenceReport {
  bool qf = false;
  bool residual_zero = false;
  bool lifted_residual_zero = false;
  bool form_cocycle = false;
  CheckReport details;

  bool agree() const {
    return qf == residual_zero && qf == lifted_residual_zero && qf == form_cocycle;
  }
};

EquivalenceReport equivalence_harness(const std::string& kind, const AlgebraBundle& a,
                                      const BilinearForm& varpi, int window_radius);

}  // namespace affalg
