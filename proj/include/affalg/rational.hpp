#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace affalg {

// Exact rational scalar. mpq_class keeps lowest terms / positive denominator
// once canonicalized; every constructor path below canonicalizes.
using Rational = mpq_class;

Rational rat(long num, long den = 1);

// Accepts "p" or "p/q" with optional sign; q must be nonzero.
std::optional<Rational> rat_parse(const std::string& text);

// "p" when the denominator is 1, otherwise "p/q".
std::string rat_str(const Rational& q);

}  // namespace affalg
