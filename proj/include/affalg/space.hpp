#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace affalg {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Finite named basis. Cheap to copy; equality is structural (same labels).
class BasisSpace {
 public:
  BasisSpace() = default;
  BasisSpace(std::string name, std::vector<std::string> labels);

  // Labels stem1..stemN.
  static BasisSpace numbered(std::string name, const std::string& stem, int dim);

  bool valid() const { return impl_ != nullptr; }
  int dim() const;
  const std::string& name() const;
  const std::string& label(int i) const;
  const std::vector<std::string>& labels() const;
  int index_of(std::string_view label) const;  // -1 when absent

  bool operator==(const BasisSpace& o) const;
  bool operator!=(const BasisSpace& o) const { return !(*this == o); }

 private:
  struct Impl {
    std::string name;
    std::vector<std::string> labels;
  };
  std::shared_ptr<const Impl> impl_;
};

// Dual basis is positional: label i becomes εi+1 and ⟨εi, ej⟩ = δij.
BasisSpace dual_space(const BasisSpace& v);

// Ordered product basis with labels "la⊗lb", index ia*dim(b)+ib.
BasisSpace pair_space(const BasisSpace& a, const BasisSpace& b);

inline int pair_index(int ia, int ib, int dim_b) { return ia * dim_b + ib; }
inline int pair_first(int idx, int dim_b) { return idx / dim_b; }
inline int pair_second(int idx, int dim_b) { return idx % dim_b; }

}  // namespace affalg
