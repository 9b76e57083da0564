#pragma once

#include <string>
#include <vector>

namespace affalg {

struct Violation {
  std::string identity;             // which law failed
  std::vector<std::string> where;   // basis labels of the probed tuple
  std::string detail;               // e.g. first nonzero residual coefficient
};

// Result of an axiom/identity battery. Windowed checks also carry skip
// accounting: skipped tuples are never failures.
struct CheckReport {
  std::vector<Violation> violations;  // capped at kMaxStored
  long long violation_count = 0;
  long long checked = 0;
  long long skipped = 0;
  int window = 0;   // 0 = not windowed
  int margin = -1;  // -1 = not applicable

  static constexpr int kMaxStored = 64;

  bool passed() const { return violation_count == 0; }
  void fail(Violation v);
  void merge(const CheckReport& o);
  std::string summary() const;
};

}  // namespace affalg
