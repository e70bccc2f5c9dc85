#include "catwb/ftriangle.hpp"
#include "catwb/errors.hpp"
#include "ftables.hpp"

namespace catwb {

namespace {

// a*m + b
UPoly lin(long a, long b) { return UPoly::var() * Rational(a) + UPoly(b); }

MPoly from_table(const std::vector<detail::TableEntry>& rows)
{
    MPoly p;
    for (const auto& e : rows) {
        UPoly c(rat(e.num, e.den));
        for (const auto& f : e.factors) {
            std::vector<Rational> cs;
            for (long v : f) cs.emplace_back(v);
            c *= UPoly(std::move(cs));
        }
        p.add_term(e.k, e.l, c);
    }
    return p;
}

MPoly f_irreducible(const Irreducible& t)
{
    switch (t.family) {
    case Family::A: return f_type_a(t.n);
    case Family::B: return f_type_b(t.n);
    case Family::D: return f_type_d(t.n);
    case Family::I: return f_dihedral(t.a);
    default: break;
    }
    const auto* rows = detail::exceptional_table(t.family, t.n);
    if (!rows) throw UnsupportedType("no F-triangle for " + t.to_string());
    return from_table(*rows);
}

} // namespace

MPoly f_type_a(int n)
{
    MPoly p;
    for (int k = 0; k <= n; ++k)
        for (int l = 0; k + l <= n; ++l)
            p.add_term(k, l,
                       rat(l + 1, k + l + 1) * binom(n, k + l) * gen_binomial(lin(n + 1, k - 1), k));
    return p;
}

MPoly f_type_b(int n)
{
    MPoly p;
    for (int k = 0; k <= n; ++k)
        for (int l = 0; k + l <= n; ++l)
            p.add_term(k, l, binom(n, k + l) * gen_binomial(lin(n, k - 1), k));
    return p;
}

MPoly f_type_d(int n)
{
    if (n < 2) throw UnsupportedType("D_n needs n >= 2");
    MPoly p;
    for (int k = 0; k <= n; ++k)
        for (int l = 0; k + l <= n; ++l) {
            UPoly c = binom(n, k + l) * gen_binomial(lin(n - 1, k - 1), k);
            c += UPoly::var() * binom(n - 1, k + l - 1) * gen_binomial(lin(n - 1, k - 2), k - 1);
            if (l == 0)
                c -= rat(1, n - 1) * binom(n - 1, k - 1) * gen_binomial(lin(n - 1, k - 1), k);
            p.add_term(k, l, c);
        }
    return p;
}

MPoly f_dihedral(int a)
{
    if (a < 2) throw UnsupportedType("I2(a) needs a >= 2");
    MPoly p;
    // m(ma + a - 2)/2
    p.add_term(2, 0, UPoly(std::vector<Rational>{0, rat(a - 2, 2), rat(a, 2)}));
    p.add_term(1, 1, lin(2, 0));
    p.add_term(1, 0, lin(a, 0));
    p.add_term(0, 2, 1);
    p.add_term(0, 1, 2);
    p.add_term(0, 0, 1);
    return p;
}

FTriangle f_closed(const RootSystemType& t)
{
    MPoly p(1);
    for (const auto& f : t.factors()) p *= f_irreducible(f);
    return {t, p};
}

UPoly refined_face_number(const RootSystemType& t, int k, int l)
{
    if (k < 0 || l < 0 || k + l > t.rank()) return UPoly();
    return f_closed(t).poly.coeff(k, l);
}

VerificationReport check_recurrence(const RootSystemType& t)
{
    if (!t.irreducible()) throw UnsupportedType("recurrence check needs an irreducible type");
    MPoly lhs = f_closed(t).poly.deriv_y();
    MPoly rhs;
    for (const auto& d : deletion_types(t)) rhs += f_closed(d).poly;
    return make_report(t.to_string(), "recurrence", std::nullopt, lhs, rhs);
}

UPoly row_sum(const RootSystemType& t, int k)
{
    MPoly F = f_closed(t).poly;
    UPoly s;
    for (int k1 = 0; k1 <= k; ++k1) s += F.coeff(k1, k - k1);
    return s;
}

UPoly row_sum_closed(const RootSystemType& t, int k)
{
    if (!t.irreducible()) throw UnsupportedType("closed row sums need an irreducible type");
    const Irreducible& f = t.single();
    int n = f.n;
    switch (f.family) {
    case Family::A: return rat(1, k + 1) * binom(n, k) * gen_binomial(lin(n + 1, k + 1), k);
    case Family::B: return binom(n, k) * gen_binomial(lin(n, k), k);
    case Family::D:
        return binom(n, k) * gen_binomial(lin(n - 1, k), k) +
               binom(n - 2, k - 2) * gen_binomial(lin(n - 1, k - 1), k);
    default: throw UnsupportedType("no closed row sum for " + t.to_string());
    }
}

MPoly dual_f_triangle(const RootSystemType& t)
{
    MPoly d = affine_substitute(f_closed(t).poly, -1, -1, -1, -1);
    return t.rank() % 2 ? -d : d;
}

std::vector<UPoly> narayana_closed(const RootSystemType& t)
{
    if (!t.irreducible()) throw UnsupportedType("closed Narayana numbers need an irreducible type");
    const Irreducible& f = t.single();
    int n = f.n;
    std::vector<UPoly> out;
    for (int i = 0; i <= n; ++i) {
        if (f.family == Family::A)
            out.push_back(rat(1, n + 1) * binom(n + 1, i) * gen_binomial(lin(n + 1, 0), n - i));
        else if (f.family == Family::B)
            out.push_back(binom(n, i) * gen_binomial(lin(n, 0), n - i));
        else
            throw UnsupportedType("no closed Narayana numbers for " + t.to_string());
    }
    return out;
}

MPoly dual_rhs(const MPoly& F, const std::vector<UPoly>& nar_m, const std::vector<Rational>& nar_1)
{
    MPoly r;
    for (const auto& [key, c] : F.terms()) {
        size_t i = key.first + key.second;
        if (i >= nar_m.size() || i >= nar_1.size() || sgn(nar_1[i]) == 0)
            throw Error("Narayana vector too short or zero at rank " + std::to_string(i));
        r.add_term(key.first, key.second, c * nar_m[i] * Rational(1 / nar_1[i]));
    }
    return r;
}

VerificationReport verify_dual(const RootSystemType& t)
{
    std::vector<UPoly> nm = narayana_closed(t);
    std::vector<Rational> n1;
    for (const auto& p : nm) n1.push_back(p.eval(1));
    MPoly rhs = dual_rhs(f_closed(t).poly, nm, n1);
    return make_report(t.to_string(), "dual-closed", std::nullopt, dual_f_triangle(t), rhs);
}

} // namespace catwb
