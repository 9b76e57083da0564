#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "affalg/report.hpp"
#include "affalg/structure.hpp"

namespace affalg {

enum class AlgKind { CommAssoc, Lie, Perm, Zinbiel, PreLie, Poisson, PrePoisson };

std::string kind_name(AlgKind k);
std::optional<AlgKind> kind_from_name(std::string_view s);

// Product slots a bundle of the given kind must carry, in canonical order.
// poisson = {dot, bracket}; prepoisson = {zinbiel, prelie}; the rest have one.
const std::vector<std::string>& product_names(AlgKind k);

struct AlgebraBundle {
  AlgKind kind = AlgKind::CommAssoc;
  BasisSpace space;
  std::map<std::string, StructureConstants> products;

  const StructureConstants& product(const std::string& name) const;
  void validate() const;  // throws Error on a wrong product set or space drift
};

AlgebraBundle make_bundle(AlgKind kind, const BasisSpace& space);

// Evaluates every axiom of the declared kind on all basis tuples.
CheckReport verify_structure(const AlgebraBundle& bundle);

// Family with rational parameter slots, instantiated per sample.
struct ParametricFamily {
  int arity = 0;
  std::function<AlgebraBundle(const std::vector<Rational>&)> make;
};

CheckReport verify_parametric_family(const ParametricFamily& family,
                                     const std::vector<std::vector<Rational>>& samples);

// zinbiel → comm-assoc (anticommutator); prelie → lie (commutator);
// prepoisson → poisson (both at once).
AlgebraBundle subadjacent(const AlgebraBundle& bundle);

// Both operator identities, on all basis pairs of a poisson bundle:
//   R(p1)·R(p2) = R(R(p1)·p2 + p1·R(p2)) and the same in the bracket.
CheckReport rota_baxter_check(const AlgebraBundle& poisson, const LinearMap& R);

// p1 ∗ p2 = R(p1)·p2, p1 ∘ p2 = [R(p1), p2]; requires the check to pass.
AlgebraBundle rota_baxter_induce(const AlgebraBundle& poisson, const LinearMap& R);

}  // namespace affalg
