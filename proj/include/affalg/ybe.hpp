#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "affalg/bialgebra.hpp"
#include "affalg/quadperm.hpp"
#include "affalg/window.hpp"

namespace affalg {

// The Yang-Baxter equations handled here. The compound kinds bundle the
// single ones on the two-product algebras: PYBE = AYBE ∧ CYBE on a Poisson
// algebra, PPYBE = ZYBE ∧ PLYBE on a pre-Poisson algebra.
enum class YbeKind { ZYBE, PLYBE, AYBE, CYBE, PYBE, PPYBE };

std::string ybe_name(YbeKind k);
std::optional<YbeKind> ybe_from_name(std::string_view s);

// Rank-3 residual tensors over A⊗A⊗A; r solves the equation iff every
// returned tensor is zero. Single kinds return one tensor, PYBE returns
// {AYBE, CYBE} and PPYBE returns {ZYBE, PLYBE}, in that order. Writing
// r = Σ_α x_α ⊗ y_α, the placements are (sum over α, β):
//
//   ZYBE   + (x_α∗x_β)⊗y_β⊗y_α + y_β⊗(x_α∗x_β)⊗y_α
//          + x_α⊗x_β⊗(y_α∗y_β) + x_β⊗x_α⊗(y_α∗y_β)
//          − x_α⊗(y_α∗x_β)⊗y_β − x_β⊗(x_α∗y_β)⊗y_α
//          − (x_α∗y_β)⊗x_β⊗y_α − (y_α∗x_β)⊗x_α⊗y_β
//   PLYBE  + (x_α∘x_β)⊗y_β⊗y_α + x_β⊗(x_α∘y_β)⊗y_α
//          + (y_α∘x_β)⊗x_α⊗y_β + x_β⊗x_α⊗(y_α∘y_β)
//          − y_β⊗(x_α∘x_β)⊗y_α − x_α⊗(y_α∘x_β)⊗y_β
//          − (x_α∘y_β)⊗x_β⊗y_α − x_α⊗x_β⊗(y_α∘y_β)
//   AYBE   + (x_α·x_β)⊗y_α⊗y_β + x_α⊗x_β⊗(y_α·y_β) − x_β⊗(x_α·y_β)⊗y_α
//   CYBE   + [x_α,x_β]⊗y_α⊗y_β + x_α⊗[y_α,x_β]⊗y_β + x_α⊗x_β⊗[y_α,y_β]
//
// The products come from the bundle slots: ∗ zinbiel, ∘ prelie, · dot,
// [,] bracket. A kind whose product the bundle lacks is rejected, as is an
// r that is not rank 2 over the bundle's space on both legs.
std::vector<Tensor> residual(YbeKind kind, const AlgebraBundle& a, const Tensor& r);

// Collapsed four-placement forms, valid only for symmetric r (rejected
// otherwise) and equal to the full residual coefficientwise:
//   ZYBE   + x_α⊗x_β⊗(y_α∗y_β) + x_β⊗x_α⊗(y_α∗y_β)
//          − (x_α∗x_β)⊗y_α⊗y_β − x_α⊗(y_α∗x_β)⊗y_β
//   PLYBE  + (x_α∘x_β)⊗y_α⊗y_β + x_β⊗x_α⊗(y_α∘y_β)
//          − x_α⊗(y_α∘x_β)⊗y_β − x_α⊗x_β⊗(y_α∘y_β)
Tensor symmetric_simplified_residual(YbeKind kind, const AlgebraBundle& a, const Tensor& r);

// The coproduct attached to an element r of A⊗A. fl/fr are left/right
// multiplication by the product the kind names:
//   zinbiel  ϑ_r(a) = (id⊗(fl+fr)(a) − fl(a)⊗id)(r)       [zinbiel slot]
//   prelie   θ_r(a) = (fl(a)⊗id + id⊗(fl−fr)(a))(r)       [prelie slot]
//   assoc    Δ_r(a) = (id⊗fl(a) − fl(a)⊗id)(r)            [dot slot]
//   lie      δ_r(a) = (id⊗fl(a) + fl(a)⊗id)(r)            [bracket slot]
Coproduct coboundary_coproduct(const std::string& kind, const AlgebraBundle& a,
                               const Tensor& r);

// Assembles the coboundary bialgebra of a solution r after checking the two
// preconditions: the symmetry of r (symmetric for zinbiel/prelie/prepoisson,
// skew-symmetric for infinitesimal/lie/poisson) and vanishing of the
// matching residual(s). Throws an Error naming the violated precondition.
// Kinds and outputs:
//   zinbiel       ϑ_r         → Zinbiel bialgebra       (ZYBE)
//   prelie        θ_r         → pre-Lie bialgebra       (PLYBE)
//   prepoisson    ϑ_r, θ_r    → pre-Poisson bialgebra   (PPYBE)
//   infinitesimal Δ_r         → infinitesimal bialgebra (AYBE)
//   lie           δ_r         → Lie bialgebra           (CYBE)
//   poisson       Δ_r, δ_r    → Poisson bialgebra       (PYBE)
BialgebraBundle triangular_bialgebra(const std::string& kind, const AlgebraBundle& a,
                                     const Tensor& r);

// r̂ = Σ_α Σ_j (x_α⊗e_j) ⊗ (y_α⊗f_j) over (A⊗B)⊗(A⊗B) with f_j the ω-dual
// basis of B; symmetric r gives skew-symmetric r̂. The windowed overload
// pairs each window monomial with its dual (x^m∂1 ↦ x^{-m}∂2,
// x^m∂2 ↦ −x^{-m}∂1); the window box is symmetric, so no dual clips.
Tensor lift_solution(const Tensor& r, const QuadraticPermAlgebra& b);
Tensor lift_solution(const Tensor& r, const WindowedGradedAlgebra& model);

// For a symmetric solution r on A, the coproducts induced on A⊗B from the
// coboundary coalgebra of r must coincide with the coboundary coproducts of
// the lifted r̂ on the induced algebra. Kinds: "assoc" (induced Delta vs
// Δ_{r̂}, zinbiel input), "lie" (induced delta vs δ_{r̂}, prelie input),
// "poisson" (both, prepoisson input). Throws if r is not symmetric or not a
// solution of the matching equation(s).
CheckReport triangular_coincidence(const std::string& kind, const AlgebraBundle& a,
                                   const QuadraticPermAlgebra& b, const Tensor& r);

// Residual of the lifted r̂ on the induced A⊗window algebra, asserted zero
// on every output triple whose three window legs lie in the margin box.
// Window truncation cannot disturb those coefficients: each placement
// exposes both summation indices of r̂ on output legs, so contributions
// from outside the window always land outside the box and escaped products
// only feed out-of-window outputs. The region is therefore checked exactly
// and nothing is skipped. Kinds: AYBE (induced dot), CYBE (induced
// bracket), PYBE (both).
CheckReport lifted_residual_window(YbeKind kind, const AlgebraBundle& a,
                                   const WindowedGradedAlgebra& model, const Tensor& r,
                                   const AdmissibleRegion& region);

}  // namespace affalg
