#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace projcone {

// All arithmetic on the decision path is exact. Rat is always kept in
// canonical form (gcd(p,q) = 1, q > 0).
using Rat = mpq_class;
using Int = mpz_class;

// Parses "p" or "p/q" with optional leading '-'. Rejects q = 0, empty
// fields and any other character. Result is canonicalized.
std::optional<Rat> parse_rational(const std::string& text);

// Canonical display form: "p" when q = 1, else "p/q".
std::string rational_str(const Rat& value);

// base^exp for integer exp (negative allowed; base must be nonzero then).
Rat pow_rational(const Rat& base, long exp);

// Smallest positive integer m such that m * v is integral for every v.
Int common_denominator(const std::vector<Rat>& values);

}  // namespace projcone
