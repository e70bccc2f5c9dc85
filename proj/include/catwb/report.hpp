#pragma once

#include "catwb/exactmath.hpp"
#include "catwb/serialize.hpp"

#include <optional>
#include <string>
#include <utility>

namespace catwb {

struct VerificationReport {
    std::string type;
    std::string mode;
    std::optional<long> m;          // empty when m is symbolic
    MPoly lhs, rhs;
    bool equal = false;
    bool empirical = false;         // outcome reported, not asserted
    std::optional<std::pair<int, int>> first_diff;

    json to_json() const;
};

VerificationReport make_report(std::string type, std::string mode, std::optional<long> m, MPoly lhs,
                               MPoly rhs);

} // namespace catwb
