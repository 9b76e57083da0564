#pragma once

#include <string>

#include "affalg/algebra.hpp"
#include "affalg/coalgebra.hpp"
#include "affalg/form.hpp"

namespace affalg {

// Basis monomial x1^i1 x2^i2 ∂s, s ∈ {1,2}. Degree i1+i2+1 is additive on
// products.
struct Mono {
  int i1 = 0;
  int i2 = 0;
  int s = 1;

  auto operator<=>(const Mono&) const = default;
  int degree() const { return i1 + i2 + 1; }
  std::string label() const;  // "(i1,i2,s)"
};

// Result of one monomial product: exactly one output monomial, flagged when
// an exponent left the window.
struct MonoProd {
  Mono value;
  bool in_window = true;
};

// Finite window |i1|, |i2| ≤ N of the graded perm algebra on monomials
// x1^i1 x2^i2 ∂s with
//   (x^i ∂1) ⋄ (x^j ∂t) = x1^{i1+j1+1} x2^{i2+j2} ∂t,
//   (x^i ∂2) ⋄ (x^j ∂t) = x1^{i1+j1} x2^{i2+j2+1} ∂t,
// and the pairing ω(x^i ∂2, x^j ∂1) = δ_{i+j,0} = −ω(x^j ∂1, x^i ∂2),
// zero between equal ∂-kinds. The product and ω are total on monomials;
// only the basis enumeration is windowed.
class WindowedGradedAlgebra {
 public:
  explicit WindowedGradedAlgebra(int window_radius);  // throws unless N ≥ 1

  int window_radius() const { return n_; }
  const BasisSpace& space() const { return space_; }

  bool in_window(const Mono& m) const;
  int index(const Mono& m) const;  // throws when out of window
  Mono mono(int index) const;

  MonoProd diamond(const Mono& a, const Mono& b) const;
  Rational omega_eval(const Mono& a, const Mono& b) const;

  BilinearForm omega() const;  // restriction to the window basis
  // ω pairs only degree-i with degree-(m−i) pieces; the single m, found by
  // scanning nonzero pairs.
  int omega_grade() const;

 private:
  int n_ = 0;
  BasisSpace space_;
};

WindowedGradedAlgebra grperm_window(int window_radius);

// Closed-form completed coproduct ν(x^m ∂s) =
//   Σ_i [ x^i ∂1 ⊗ x^{m−i+(0,1)} ∂s − x^i ∂2 ⊗ x^{m−i+(1,0)} ∂s ],
// restricted to terms with both legs inside the window.
Coproduct nu_from_omega(const WindowedGradedAlgebra& model);

// Enumeration box for windowed identity checks: inputs are drawn from
// monomials with |exponents| ≤ N − margin. Negative box radius means no
// admissible tuples at all.
struct AdmissibleRegion {
  int window_radius = 0;
  int margin = 0;

  int box_radius() const { return window_radius - margin; }
  bool empty() const { return box_radius() < 0; }
  bool in_box(const Mono& m) const;
};

// Operands a windowed identity may draw on. The algebra/coalgebra/form live
// on the A side; the model supplies the B side. Identities select what they
// need and reject missing pieces.
struct WindowedOperands {
  const WindowedGradedAlgebra* model = nullptr;
  const AlgebraBundle* algebra = nullptr;
  const CoalgebraBundle* coalgebra = nullptr;
  const BilinearForm* form = nullptr;
};

// Checks one identity of the induced structure on A⊗B over the region.
//
//   model-only:  "grading", "omega-invariance", "omega-derived",
//                "perm-co-1", "perm-co-2"
//   products:    "comm", "assoc" (induced dot; needs a zinbiel slot),
//                "antisym", "jacobi" (induced bracket; needs a prelie slot),
//                "leibniz" (both; prepoisson only)
//   coproducts:  "cocomm", "coassoc" (induced Delta; needs vartheta),
//                "co-antisym", "co-jacobi" (induced delta; needs theta),
//                "poisson-co" (both)
//   compat:      "inf-bialg", "lie-bialg", "poisson-bialg-1",
//                "poisson-bialg-2"
//   forms:       "connes" (induced dot), "qf-lie" (induced bracket)
//
// Product identities evaluate only tuples whose every intermediate product
// stays in-window; the rest count as skipped. Coproduct and compatibility
// identities expand ν far enough beyond the window that every coefficient
// with all legs in-window is exact, and compare only those. Violations are
// never reported for truncated coefficients.
CheckReport windowed_check(const std::string& identity, const WindowedOperands& ops,
                           const AdmissibleRegion& region);

}  // namespace affalg
