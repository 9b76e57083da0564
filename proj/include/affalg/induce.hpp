#pragma once

#include <string>

#include "affalg/quadperm.hpp"
#include "affalg/window.hpp"

namespace affalg {

// Pair-space structures on A⊗B. The product ("assoc" from a zinbiel slot,
// "lie" from a prelie slot, "poisson" = both, prepoisson input only):
//   (a1⊗b1)·(a2⊗b2)  = (a1∗a2)⊗(b1⋄b2) + (a2∗a1)⊗(b2⋄b1)
//   [a1⊗b1, a2⊗b2]  = (a1∘a2)⊗(b1⋄b2) − (a2∘a1)⊗(b2⋄b1)
AlgebraBundle induce_product(const std::string& kind, const AlgebraBundle& a,
                             const AlgebraBundle& b_perm);

// Windowed variant: terms whose B-monomial leaves the window are dropped
// from the stored table (the table is a finite shadow, fit for reading off
// single products; identities on it are the business of windowed_check).
AlgebraBundle induce_product(const std::string& kind, const AlgebraBundle& a,
                             const WindowedGradedAlgebra& model);

// Coproducts on A⊗B via ν = nu_from_omega(B):
//   Delta(a⊗b) = (id + τ)(ϑ(a) • ν(b))   (kind "Delta", needs vartheta)
//   delta(a⊗b) = (id − τ)(θ(a) • ν(b))   (kind "delta", needs theta)
// where • interleaves legs: (a'⊗a'') • (b'⊗b'') = (a'⊗b')⊗(a''⊗b'').
Coproduct induce_coproduct(const std::string& kind, const CoalgebraBundle& coalg,
                           const QuadraticPermAlgebra& q);
Coproduct induce_coproduct(const std::string& kind, const CoalgebraBundle& coalg,
                           const WindowedGradedAlgebra& model);

// 𝓑(a1⊗b1, a2⊗b2) = ϖ(a1,a2) ω(b1,b2). Declared symmetry: symmetric when
// the factors agree, antisymmetric when exactly one factor is antisymmetric,
// none otherwise.
BilinearForm induce_form(const BilinearForm& varpi, const BilinearForm& omega);

// Candidate data for a converse probe; only the pieces the kind needs are
// consulted.
struct ConverseCandidate {
  const AlgebraBundle* algebra = nullptr;
  const CoalgebraBundle* coalgebra = nullptr;
  const BilinearForm* form = nullptr;
};

// Runs the direct axiom battery on the candidate and the windowed battery on
// the structure it induces over grperm_window(window_radius), and asserts the
// two agree. Kinds: zinbiel, zinbiel-co, prepoisson, prepoisson-co,
// zinbiel-bi, prepoisson-bi, connes, qf. The returned report merges both
// batteries; a "converse-agreement" violation is appended if their verdicts
// differ.
CheckReport converse_probe(const std::string& kind, const ConverseCandidate& candidate,
                           int window_radius);

}  // namespace affalg
