#pragma once

#include "affalg/coalgebra.hpp"

namespace affalg {

enum class BialgKind { Infinitesimal, LieBi, PoissonBi, ZinbielBi, PreLieBi, PrePoissonBi };

std::string bikind_name(BialgKind k);
std::optional<BialgKind> bikind_from_name(std::string_view s);

AlgKind bialg_algebra_kind(BialgKind k);    // infinitesimal → comm-assoc, ...
CoalgKind bialg_coalgebra_kind(BialgKind k);

struct BialgebraBundle {
  BialgKind kind = BialgKind::Infinitesimal;
  AlgebraBundle algebra;
  CoalgebraBundle coalgebra;

  void validate() const;  // kinds pair correctly, one shared space
};

// Component axioms first (algebra, then coalgebra), then every compatibility
// display of the kind on all basis pairs.
CheckReport verify_bialgebra(const BialgebraBundle& bundle);

}  // namespace affalg
