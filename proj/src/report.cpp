#include "catwb/report.hpp"

namespace catwb {

VerificationReport make_report(std::string type, std::string mode, std::optional<long> m, MPoly lhs,
                               MPoly rhs)
{
    VerificationReport r;
    r.type = std::move(type);
    r.mode = std::move(mode);
    r.m = m;
    MPoly diff = lhs - rhs;
    r.equal = diff.is_zero();
    if (!r.equal) r.first_diff = diff.terms().begin()->first;
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    return r;
}

json VerificationReport::to_json() const
{
    json j{{"type", type},
           {"mode", mode},
           {"m", m ? json(*m) : json(nullptr)},
           {"equal", equal},
           {"empirical", empirical},
           {"lhs_hash", mpoly_hash(lhs)},
           {"rhs_hash", mpoly_hash(rhs)}};
    if (first_diff) {
        auto [dx, dy] = *first_diff;
        j["first_diff"] = json{{"dx", dx},
                               {"dy", dy},
                               {"lhs", upoly_to_json(lhs.coeff(dx, dy))},
                               {"rhs", upoly_to_json(rhs.coeff(dx, dy))}};
    } else {
        j["first_diff"] = nullptr;
    }
    return j;
}

} // namespace catwb
