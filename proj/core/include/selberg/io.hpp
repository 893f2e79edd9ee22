#pragma once

#include <string>

#include "selberg/continuation.hpp"
#include "selberg/identities.hpp"

namespace selberg {

// {const, alpha: [...], beta: [...], gamma: {"j,k": c}}
std::string to_json(const AffineFunctional& f);

// [{functional: {...}, shift: s}, ...]
std::string to_json(const GammaFactorization& gf);

// one JSON line: {tag, point, lhs, rhs, residual, passed, skipped_reason?}
std::string to_json_line(const IdentityReport& r, const std::string& point = "");

// face dump for the CLI: [{j, k, codim}, ...]
std::string k_faces_to_json(const RegionShape& shape);
std::string a_faces_to_json(const RegionShape& shape);

} // namespace selberg
