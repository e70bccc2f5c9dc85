#include "catwb/ncposet.hpp"
#include "catwb/errors.hpp"
#include "catwb/ftriangle.hpp"

#include <bit>
#include <map>
#include <mutex>

namespace catwb {

namespace {

std::mutex g_ncm_mutex;
std::map<std::pair<std::string, long>, NCmPtr> g_ncm;

const Irreducible& require_irreducible(const RootSystemType& t)
{
    if (!t.irreducible()) throw UnsupportedType("expected an irreducible type, got " + t.to_string());
    return t.single();
}

std::vector<Integer> convolve(const std::vector<Integer>& a, const std::vector<Integer>& b)
{
    std::vector<Integer> out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

Rational to_rational(const Integer& z) { return Rational(z); }

} // namespace

NCmPtr build_ncm(const RootSystemType& t, long m, const Limits& limits)
{
    require_irreducible(t);
    if (m < 1) throw Error("NC^m needs m >= 1");
    auto key = std::make_pair(t.to_string(), m);
    {
        std::lock_guard<std::mutex> lock(g_ncm_mutex);
        auto it = g_ncm.find(key);
        if (it != g_ncm.end()) return it->second;
    }
    NCPtr nc = build_nc(t, limits);
    const Poset& P = nc->poset;
    const ReflectionGroup& g = *nc->group;

    Integer expected = P.multichains(nc->bottom(), nc->top(), static_cast<int>(m + 1));
    if (expected > Integer(static_cast<unsigned long>(kDensePosetLimit)))
        throw BudgetExceeded("NC^" + std::to_string(m) + " poset " + t.to_string(),
                             expected.fits_ulong_p() ? expected.get_ui() : ~0ULL, kDensePosetLimit);

    auto ncm = std::make_shared<NCmPoset>();
    ncm->type = t;
    ncm->m = m;
    ncm->nc = nc;

    std::vector<int> y;
    auto extend = [&](auto&& self, size_t from) -> void {
        if (static_cast<long>(y.size()) == m) {
            ncm->chain.push_back(y);
            return;
        }
        const Bits& up = P.up(from);
        for (size_t v = from; v < P.size(); ++v) {
            if (!up.test(v)) continue;
            y.push_back(static_cast<int>(v));
            self(self, v);
            y.pop_back();
        }
    };
    extend(extend, nc->bottom());
    if (Integer(static_cast<unsigned long>(ncm->chain.size())) != expected)
        throw Error("NC^m enumeration disagrees with the zeta polynomial count");

    std::stable_sort(ncm->chain.begin(), ncm->chain.end(),
                     [&](const auto& a, const auto& b) { return P.rank(a[0]) < P.rank(b[0]); });

    std::vector<int> ranks;
    for (const auto& ch : ncm->chain) {
        std::vector<int> w{ch[0]};
        for (long i = 0; i < m; ++i) {
            ElemId lo = nc->elems[ch[i]];
            ElemId hi = i + 1 < m ? nc->elems[ch[i + 1]] : nc->elems[nc->top()];
            int idx = nc->index(g.multiply(g.inverse(lo), hi));
            if (idx < 0) throw Error("NC^m factor outside NC");
            w.push_back(idx);
        }
        int total = 0;
        for (int v : w) total += P.rank(v);
        if (total != t.rank()) throw Error("NC^m factorization is not length additive");
        ranks.push_back(P.rank(ch[0]));
        ncm->factor.push_back(std::move(w));
    }

    const auto& fac = ncm->factor;
    ncm->poset = Poset(ranks, [&](size_t a, size_t b) {
        for (long i = 1; i <= m; ++i)
            if (!P.leq(fac[b][i], fac[a][i])) return false;
        return true;
    });
    auto maxima = ncm->poset.maximal();
    if (maxima.size() != 1 || maxima[0] != ncm->top() || fac[ncm->top()][0] != static_cast<int>(nc->top()))
        throw Error("NC^m has no unique maximum (c; e, ..., e)");
    if (ncm->poset.comparable_pairs() > limits.pair_cap)
        throw BudgetExceeded("NC^m poset " + t.to_string() + " comparable pairs", ncm->poset.comparable_pairs(),
                             limits.pair_cap);

    std::lock_guard<std::mutex> lock(g_ncm_mutex);
    return g_ncm.emplace(key, ncm).first->second;
}

std::vector<Integer> rank_census(const NCmPoset& p)
{
    std::vector<Integer> out(p.rank() + 1, 0);
    for (size_t i = 0; i < p.size(); ++i) out[p.poset.rank(i)] += 1;
    return out;
}

std::vector<Integer> rank_census(const RootSystemType& t, long m, const Limits& limits)
{
    std::vector<Integer> out{1};
    for (const auto& f : t.factors()) out = convolve(out, rank_census(*build_ncm(RootSystemType({f}), m, limits)));
    return out;
}

MPoly m_triangle_of(const NCmPoset& p)
{
    int n = p.rank();
    std::vector<std::vector<long long>> sum(n + 1, std::vector<long long>(n + 1, 0));
    for (size_t u = 0; u < p.size(); ++u) {
        std::vector<long long> mu = p.poset.mobius_from(u);
        int ru = p.poset.rank(u);
        for (size_t w = u; w < p.size(); ++w)
            if (mu[w] && __builtin_add_overflow(sum[ru][p.poset.rank(w)], mu[w], &sum[ru][p.poset.rank(w)]))
                throw Error("M-triangle coefficient overflow");
    }
    MPoly M;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            if (sum[i][j]) M.add_term(i, j, UPoly(Rational(static_cast<long>(sum[i][j]))));
    return M;
}

MPoly m_triangle_bruteforce(const RootSystemType& t, long m, const Limits& limits)
{
    MPoly M(1);
    for (const auto& f : t.factors()) M *= m_triangle_of(*build_ncm(RootSystemType({f}), m, limits));
    return M;
}

MPoly dual_rank_transform(const MPoly& p, int n)
{
    MPoly out;
    for (const auto& [k, c] : p.terms()) {
        if (k.first > n || k.second > n) throw DegreeError("dual_rank_transform: degree exceeds rank");
        out.add_term(n - k.first, n - k.second, (k.first + k.second) % 2 ? -c : c);
    }
    return out;
}

MPoly fm_rhs_formula(const RootSystemType& t, const Limits& limits)
{
    if (!t.irreducible()) {
        MPoly r(1);
        for (const auto& f : t.factors()) r *= fm_rhs_formula(RootSystemType({f}), limits);
        return r;
    }
    DecompositionTable tab;
    try {
        tab = decomposition_numbers(t, t.rank(), limits);
    } catch (const BudgetExceeded& e) {
        throw MissingTable("no decomposition table for " + t.to_string() + " (" + e.what() + ")");
    }
    const UPoly minus_y = -UPoly::var();
    std::map<RootSystemType, UPoly> chi;
    MPoly r;
    for (const auto& [tuple, count] : tab.counts) {
        int R = 0;
        UPoly prod(1);
        for (const auto& T : tuple) {
            R += T.rank();
            auto it = chi.find(T);
            if (it == chi.end()) it = chi.emplace(T, char_poly(T, limits).compose(minus_y)).first;
            prod *= it->second;
        }
        UPoly weight = gen_binomial(UPoly::var(), static_cast<long>(tuple.size()));
        weight *= Rational(static_cast<unsigned long>(count)) * Rational(R % 2 ? -1 : 1);
        for (int j = 0; j <= prod.degree(); ++j)
            if (sgn(prod.coeff(j)) != 0) r.add_term(R, j, weight * prod.coeff(j));
    }
    return r;
}

MPoly m_triangle_formula(const RootSystemType& t, const Limits& limits)
{
    return dual_rank_transform(fm_rhs_formula(t, limits), t.rank());
}

Integer count_dual_chains(const RootSystemType& t, long m, const std::vector<int>& jumps, const Limits& limits)
{
    NCmPtr p = build_ncm(t, m, limits);
    const Poset& P = p->poset;
    int n = p->rank();
    if (jumps.empty()) throw Error("count_dual_chains: empty jump vector");
    // dual rank r is rank n - r here; dual chains descend
    std::vector<Integer> f;
    int level = 0;
    for (size_t i = 0; i + 1 < jumps.size(); ++i) {
        if (jumps[i] < 0) throw Error("count_dual_chains: negative jump");
        level += jumps[i];
        std::vector<Integer> g(P.size(), 0);
        for (size_t v = 0; v < P.size(); ++v) {
            if (P.rank(v) != n - level) continue;
            if (f.empty()) {
                g[v] = 1;
                continue;
            }
            const auto& w = P.up(v).words();
            for (size_t k = 0; k < w.size(); ++k)
                for (uint64_t x = w[k]; x; x &= x - 1) {
                    size_t u = (k << 6) + std::countr_zero(x);
                    if (sgn(f[u]) != 0) g[v] += f[u];
                }
        }
        f = std::move(g);
    }
    if (f.empty()) return 1;
    Integer total = 0;
    for (const auto& x : f) total += x;
    return total;
}

json export_poset(const NCmPoset& p)
{
    json nodes = json::array();
    const auto& elems = p.nc->elems;
    for (size_t i = 0; i < p.size(); ++i) {
        json fac = json::array();
        for (int v : p.factor[i]) fac.push_back(elems[v]);
        nodes.push_back({{"id", i}, {"rank", p.poset.rank(i)}, {"factors", fac}});
    }
    json edges = json::array();
    for (const auto& [u, w] : p.poset.hasse_edges()) edges.push_back({u, w});
    return {{"type", p.type.to_string()},
            {"m", p.m},
            {"size", p.size()},
            {"minimal", p.poset.minimal().size()},
            {"nodes", nodes},
            {"edges", edges}};
}

VerificationReport verify_dual(const RootSystemType& t, long m_value, const Limits& limits)
{
    std::vector<Integer> cm = rank_census(t, m_value, limits);
    std::vector<Integer> c1 = rank_census(t, 1, limits);
    std::vector<UPoly> nm;
    std::vector<Rational> n1;
    for (const auto& z : cm) nm.emplace_back(to_rational(z));
    for (const auto& z : c1) n1.push_back(to_rational(z));
    MPoly F = poly_eval_m(f_closed(t).poly, m_value);
    MPoly lhs = poly_eval_m(dual_f_triangle(t), m_value);
    return make_report(t.to_string(), "dual-census", m_value, lhs, dual_rhs(F, nm, n1));
}

} // namespace catwb
