#include "affalg/report.hpp"

#include <sstream>

namespace affalg {

void CheckReport::fail(Violation v) {
  ++violation_count;
  if (static_cast<int>(violations.size()) < kMaxStored) violations.push_back(std::move(v));
}

void CheckReport::merge(const CheckReport& o) {
  for (const auto& v : o.violations)
    if (static_cast<int>(violations.size()) < kMaxStored) violations.push_back(v);
  violation_count += o.violation_count;
  checked += o.checked;
  skipped += o.skipped;
  if (o.window) window = o.window;
  if (o.margin >= 0) margin = o.margin;
}

std::string CheckReport::summary() const {
  std::ostringstream out;
  out << (passed() ? "pass" : "FAIL") << " (" << checked << " checked";
  if (skipped) out << ", " << skipped << " skipped";
  if (violation_count) out << ", " << violation_count << " violations";
  out << ")";
  if (!violations.empty()) {
    const auto& v = violations.front();
    out << " first: " << v.identity;
    if (!v.where.empty()) {
      out << " at (";
      for (size_t i = 0; i < v.where.size(); ++i) out << (i ? ", " : "") << v.where[i];
      out << ")";
    }
    if (!v.detail.empty()) out << ": " << v.detail;
  }
  return out.str();
}

}  // namespace affalg
