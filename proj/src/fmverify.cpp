#include "catwb/fmverify.hpp"
#include "catwb/errors.hpp"
#include "catwb/ftriangle.hpp"
#include "catwb/ncposet.hpp"

namespace catwb {

namespace {

// a*m + b
UPoly lin(long a, long b) { return UPoly::var() * Rational(a) + UPoly(b); }

UPoly C(const UPoly& top, long k) { return gen_binomial(top, k); }

} // namespace

MPoly fm_lhs(const RootSystemType& t) { return substitute_fm(f_closed(t).poly, t.rank()); }

MPoly fm_lhs_type_a(int n)
{
    MPoly p;
    for (int s = 0; s <= n; ++s)
        for (int r = 0; r <= s; ++r)
            p.add_term(s, r, rat(1, s + 1) * binom(n, s) * C(lin(n + 1, 0), r) * C(lin(n + 1, s - r - 1), s - r));
    return p;
}

MPoly fm_lhs_type_b(int n)
{
    MPoly p;
    for (int s = 0; s <= n; ++s)
        for (int r = 0; r <= s; ++r)
            p.add_term(s, r, binom(n, s) * C(lin(n, 0), r) * C(lin(n, s - r - 1), s - r));
    return p;
}

MPoly fm_lhs_type_d(int n)
{
    if (n < 2) throw UnsupportedType("D_n needs n >= 2");
    const UPoly m = UPoly::var();
    MPoly p;
    for (int s = 0; s <= n; ++s)
        for (int r = 0; r <= s; ++r) {
            UPoly tail = C(lin(n - 1, s - r - 1), s - r);
            UPoly c = 2 * binom(n - 1, s - 1) * C(lin(n - 1, 0), r) * tail;
            c += binom(n - 2, s) * C(lin(n - 1, 0), r) * tail;
            c += m * binom(n - 1, s - 1) * C(lin(n - 1, -1), r - 2) * tail;
            c -= m * binom(n - 1, s - 1) * C(lin(n - 1, 0), r) * C(lin(n - 1, s - r - 2), s - r - 2);
            p.add_term(s, r, c);
        }
    return p;
}

MPoly fm_lhs_closed_classical(const RootSystemType& t)
{
    if (!t.irreducible()) throw UnsupportedType("closed classical form needs an irreducible type");
    const Irreducible& f = t.single();
    switch (f.family) {
    case Family::A: return fm_lhs_type_a(f.n);
    case Family::B: return fm_lhs_type_b(f.n);
    case Family::D: return fm_lhs_type_d(f.n);
    default: throw UnsupportedType("no closed classical form for " + t.to_string());
    }
}

FmMode parse_fm_mode(const std::string& s)
{
    if (s == "closed") return FmMode::Closed;
    if (s == "formula") return FmMode::Formula;
    if (s == "brute") return FmMode::Brute;
    throw ParseError("unknown mode '" + s + "' (expected closed, formula or brute)");
}

std::string to_string(FmMode mode)
{
    switch (mode) {
    case FmMode::Closed: return "closed";
    case FmMode::Formula: return "formula";
    case FmMode::Brute: return "brute";
    }
    return "";
}

VerificationReport verify_fm(const RootSystemType& t, FmMode mode, std::optional<long> m, const Limits& limits)
{
    std::string name = t.to_string();
    switch (mode) {
    case FmMode::Closed: return make_report(name, "closed", std::nullopt, fm_lhs(t), fm_lhs_closed_classical(t));
    case FmMode::Formula: return make_report(name, "formula", std::nullopt, fm_lhs(t), fm_rhs_formula(t, limits));
    case FmMode::Brute: {
        if (!m) throw Error("brute mode needs a concrete m");
        MPoly rhs = dual_rank_transform(m_triangle_bruteforce(t, *m, limits), t.rank());
        return make_report(name, "brute", m, poly_eval_m(fm_lhs(t), *m), rhs);
    }
    }
    throw Error("unreachable");
}

VerificationReport verify_fm_dn_general(int n, long m, const Limits& limits)
{
    RootSystemType t(Family::D, n);
    MPoly rhs = dual_rank_transform(m_triangle_bruteforce(t, m, limits), n);
    VerificationReport r = make_report("D" + std::to_string(n), "brute", m, poly_eval_m(fm_lhs_type_d(n), m), rhs);
    r.empirical = n >= 4 && m >= 2;
    return r;
}

} // namespace catwb
