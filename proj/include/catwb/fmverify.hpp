#pragma once

#include "catwb/exactmath.hpp"
#include "catwb/report.hpp"
#include "catwb/rootdata.hpp"
#include "catwb/wgroup.hpp"

#include <optional>
#include <string>

namespace catwb {

// (1 - xy)^n F(x(1+y)/(1-xy), xy/(1-xy)) for the closed F-triangle, symbolic in m.
MPoly fm_lhs(const RootSystemType& t);

// Double-sum closed forms of the transformed F-triangle for irreducible A_n, B_n, D_n.
MPoly fm_lhs_type_a(int n);
MPoly fm_lhs_type_b(int n);
MPoly fm_lhs_type_d(int n);
MPoly fm_lhs_closed_classical(const RootSystemType& t);

enum class FmMode { Closed, Formula, Brute };

FmMode parse_fm_mode(const std::string& s);
std::string to_string(FmMode mode);

// Brute mode needs a concrete m; the other modes are symbolic and ignore it.
VerificationReport verify_fm(const RootSystemType& t, FmMode mode, std::optional<long> m = std::nullopt,
                             const Limits& limits = {});

// Closed D_n form against brute force on NC^m(D_n); flagged empirical for n >= 4, m >= 2.
VerificationReport verify_fm_dn_general(int n, long m, const Limits& limits = {});

} // namespace catwb
