#include "affalg/space.hpp"

#include <unordered_set>

namespace affalg {

BasisSpace::BasisSpace(std::string name, std::vector<std::string> labels) {
  if (labels.empty()) throw Error("space '" + name + "': dimension must be >= 1");
  std::unordered_set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second)
      throw Error("space '" + name + "': duplicate basis label '" + l + "'");
  impl_ = std::make_shared<const Impl>(Impl{std::move(name), std::move(labels)});
}

BasisSpace BasisSpace::numbered(std::string name, const std::string& stem, int dim) {
  std::vector<std::string> labels;
  labels.reserve(dim);
  for (int i = 1; i <= dim; ++i) labels.push_back(stem + std::to_string(i));
  return BasisSpace(std::move(name), std::move(labels));
}

int BasisSpace::dim() const {
  if (!impl_) throw Error("use of empty BasisSpace");
  return static_cast<int>(impl_->labels.size());
}

const std::string& BasisSpace::name() const {
  if (!impl_) throw Error("use of empty BasisSpace");
  return impl_->name;
}

const std::string& BasisSpace::label(int i) const {
  if (!impl_) throw Error("use of empty BasisSpace");
  if (i < 0 || i >= dim()) throw Error("basis index out of range in '" + impl_->name + "'");
  return impl_->labels[i];
}

const std::vector<std::string>& BasisSpace::labels() const {
  if (!impl_) throw Error("use of empty BasisSpace");
  return impl_->labels;
}

int BasisSpace::index_of(std::string_view label) const {
  if (!impl_) throw Error("use of empty BasisSpace");
  for (size_t i = 0; i < impl_->labels.size(); ++i)
    if (impl_->labels[i] == label) return static_cast<int>(i);
  return -1;
}

bool BasisSpace::operator==(const BasisSpace& o) const {
  if (impl_ == o.impl_) return true;
  if (!impl_ || !o.impl_) return false;
  return impl_->labels == o.impl_->labels;
}

BasisSpace dual_space(const BasisSpace& v) {
  std::vector<std::string> labels;
  labels.reserve(v.dim());
  for (int i = 1; i <= v.dim(); ++i) labels.push_back("ε" + std::to_string(i));
  return BasisSpace(v.name() + "*", std::move(labels));
}

BasisSpace pair_space(const BasisSpace& a, const BasisSpace& b) {
  std::vector<std::string> labels;
  labels.reserve(static_cast<size_t>(a.dim()) * b.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < b.dim(); ++j) labels.push_back(a.label(i) + "⊗" + b.label(j));
  return BasisSpace(a.name() + "⊗" + b.name(), std::move(labels));
}

}  // namespace affalg
