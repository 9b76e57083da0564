#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "affalg/algebra.hpp"

namespace affalg {

// One coproduct on a space: Δ(e_i) = Σ d[i,j,k] e_j⊗e_k. Same sparse format
// as StructureConstants with the roles transposed, so dualizing is an index
// permutation.
class Coproduct {
 public:
  using Key = std::array<int, 3>;  // (i, j, k)

  Coproduct() = default;
  explicit Coproduct(BasisSpace space);

  const BasisSpace& space() const { return space_; }
  const std::map<Key, Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  Rational coeff(int i, int j, int k) const;
  void set(int i, int j, int k, const Rational& v);
  void add(int i, int j, int k, const Rational& v);

  Tensor of_basis(int i) const;       // rank-2 value on e_i
  Tensor of(const Tensor& x) const;   // linear extension, rank-1 input

  // Applies the coproduct to one leg of a rank-2 tensor, giving rank 3:
  // leg 0 → (Δ⊗id), leg 1 → (id⊗Δ).
  Tensor expand(const Tensor& t, int leg) const;

 private:
  BasisSpace space_;
  std::map<Key, Rational> c_;

  void check_index(int i) const;
};

enum class CoalgKind { CocommCoassoc, LieCo, ZinbielCo, PreLieCo, PoissonCo, PrePoissonCo };

std::string cokind_name(CoalgKind k);
std::optional<CoalgKind> cokind_from_name(std::string_view s);

// poisson-co = {Delta, delta}; prepoisson-co = {vartheta, theta}; others one.
const std::vector<std::string>& coproduct_names(CoalgKind k);

struct CoalgebraBundle {
  CoalgKind kind = CoalgKind::CocommCoassoc;
  BasisSpace space;
  std::map<std::string, Coproduct> coproducts;

  const Coproduct& coproduct(const std::string& name) const;
  void validate() const;
};

CoalgebraBundle make_cobundle(CoalgKind kind, const BasisSpace& space);

// Arrow-reversed axioms of the matching algebra kind, one evaluation per
// basis element.
CheckReport verify_costructure(const CoalgebraBundle& bundle);

// Kind correspondence used by dualization (zinbiel-co ↔ zinbiel, ...).
AlgKind algebra_kind_of(CoalgKind k);
CoalgKind coalgebra_kind_of(AlgKind k);

// Coefficient transpose d[i,j,k] ↔ c[j,k,i]. The default target is the dual
// space; passing the target explicitly makes the round trip land on the
// original space, where it is the identity.
AlgebraBundle dualize(const CoalgebraBundle& coalg);
AlgebraBundle dualize(const CoalgebraBundle& coalg, const BasisSpace& target);
CoalgebraBundle dualize_alg(const AlgebraBundle& alg);
CoalgebraBundle dualize_alg(const AlgebraBundle& alg, const BasisSpace& target);

}  // namespace affalg
