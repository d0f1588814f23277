#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vmrt {

/// Arbitrary-precision rational, always kept in canonical (reduced) form.
using Rat = mpq_class;
using Int = mpz_class;

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rat& r);

/// Accepts an optional sign followed by "p" or "p/q"; surrounding whitespace
/// is ignored. Throws Error(Parse) on anything else or a zero denominator.
Rat parse_rational(std::string_view text);

/// Comma separated list of rationals, e.g. "1/3, 2, -5".
std::vector<Rat> parse_rational_list(std::string_view text);

/// Exact square root in Q, if there is one.
std::optional<Rat> rational_sqrt(const Rat& r);

}  // namespace vmrt
