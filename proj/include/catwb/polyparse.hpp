#pragma once

#include "catwb/exactmath.hpp"

#include <map>
#include <string>
#include <string_view>

namespace catwb {

// Reads polynomial displays in the usual TeX style: juxtaposition, ^, \frac{}{}, \binom{}{},
// \left( \right), \cdot, line breaks "\\". Free variables are x, y, m; any other single
// letter must appear in `bindings`.
MPoly parse_mpoly(std::string_view text, const std::map<char, Rational>& bindings = {});

} // namespace catwb
