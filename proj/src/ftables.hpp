#pragma once

#include "catwb/rootdata.hpp"

#include <vector>

namespace catwb::detail {

struct TableEntry {
    int k, l;
    long num, den;
    std::vector<std::vector<long>> factors;
};

// Stored F-triangle coefficients for H3, H4, F4, E6, E7, E8; nullptr otherwise.
const std::vector<TableEntry>* exceptional_table(Family f, int n);

} // namespace catwb::detail
