#pragma once

#include "catwb/exactmath.hpp"

#include <json.hpp>

#include <string>

namespace catwb {

using json = nlohmann::json;

// [{"dx":..,"dy":..,"coeff":["p/q", ...]}] sorted by (dx, dy); coefficients ascending in m.
json mpoly_to_json(const MPoly& p);
MPoly mpoly_from_json(const json& j);
json upoly_to_json(const UPoly& p);
UPoly upoly_from_json(const json& j);

// Terms by descending total degree, then descending x-degree.
std::string mpoly_to_latex(const MPoly& p);
std::string upoly_to_latex(const UPoly& p, char var = 'm');
// Rows "k,l,coefficient".
std::string mpoly_to_csv(const MPoly& p);

std::string sha256_hex(const std::string& data);
// Digest of the canonical JSON text.
std::string mpoly_hash(const MPoly& p);

} // namespace catwb
