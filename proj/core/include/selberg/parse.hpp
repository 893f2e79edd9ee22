#pragma once

#include <string>

#include "selberg/poly.hpp"

namespace selberg {

// Grammar: terms separated by +/-; term = [coeff *] factor (* factor)*;
// factor = xK[^E], K in 1..N, E an integer (negative allowed); coeff a
// decimal or rational p/q. Whitespace ignored.
LaurentPoly parse_poly(const std::string& text, int nvars);

// Canonical text form; parse(emit(p)) == p.
std::string emit_poly(const LaurentPoly& p);

} // namespace selberg
