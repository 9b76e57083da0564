#include "affalg/rational.hpp"

namespace affalg {

Rational rat(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::optional<Rational> rat_parse(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::string num = text, den = "1";
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  auto integer_ok = [](const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  if (!integer_ok(num) || !integer_ok(den)) return std::nullopt;
  if (num[0] == '+') num.erase(0, 1);  // mpz_set_str rejects a leading '+'
  if (den[0] == '+') den.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0) return std::nullopt;
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string rat_str(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace affalg
