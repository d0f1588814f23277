#pragma once

#include <string>
#include <string_view>

#include "vmrt/sparse_poly.hpp"

namespace vmrt {

/// Canonical text form, terms in grevlex order:
///   t0^4 + 2*t1^2*t2^2 - 1/3*t3^4
/// The zero polynomial prints as "0".
std::string format(const SparsePoly& p);

/// Parses the text form against a fixed variable list. Accepts '+'/'-'
/// separated terms, each a '*'-product of rational numbers ("p" or "p/q")
/// and variables with an optional '^' exponent. Whitespace is ignored.
/// Throws Error(Parse) on malformed input or a symbol outside `vars`.
SparsePoly parse_polynomial(std::string_view text, const VarList& vars);

/// Largest k such that prefix+k occurs as a symbol in the text, or -1.
int max_symbol_index(std::string_view text, char prefix);

}  // namespace vmrt
