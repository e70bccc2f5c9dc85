#include "catwb/poset.hpp"
#include "catwb/errors.hpp"

#include <bit>

namespace catwb {

size_t Bits::count() const
{
    size_t c = 0;
    for (uint64_t w : w_) c += std::popcount(w);
    return c;
}

namespace {

template <class F>
void for_each_bit(const Bits& b, F f)
{
    const auto& w = b.words();
    for (size_t i = 0; i < w.size(); ++i) {
        uint64_t x = w[i];
        while (x) {
            size_t j = (i << 6) + std::countr_zero(x);
            x &= x - 1;
            f(j);
        }
    }
}

// Elements v with u <= v <= w, in index order.
std::vector<size_t> interval(const Bits& up, const Bits& down)
{
    std::vector<size_t> out;
    const auto& a = up.words();
    const auto& b = down.words();
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t x = a[i] & b[i];
        while (x) {
            out.push_back((i << 6) + std::countr_zero(x));
            x &= x - 1;
        }
    }
    return out;
}

long long checked_add(long long a, long long b)
{
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw Error("Moebius value overflow");
    return r;
}

} // namespace

void Poset::check_sorted() const
{
    for (size_t i = 1; i < rank_.size(); ++i)
        if (rank_[i] < rank_[i - 1]) throw Error("poset elements must be sorted by rank");
}

int Poset::max_rank() const
{
    int r = 0;
    for (int x : rank_) r = std::max(r, x);
    return r;
}

std::vector<size_t> Poset::minimal() const
{
    std::vector<size_t> out;
    for (size_t i = 0; i < size(); ++i)
        if (down_[i].count() == 1) out.push_back(i);
    return out;
}

std::vector<size_t> Poset::maximal() const
{
    std::vector<size_t> out;
    for (size_t i = 0; i < size(); ++i)
        if (up_[i].count() == 1) out.push_back(i);
    return out;
}

std::vector<std::pair<size_t, size_t>> Poset::hasse_edges() const
{
    std::vector<std::pair<size_t, size_t>> out;
    for (size_t u = 0; u < size(); ++u)
        for_each_bit(up_[u], [&](size_t w) {
            if (w == u) return;
            // covering iff the open interval is empty
            if (interval(up_[u], down_[w]).size() == 2) out.emplace_back(u, w);
        });
    return out;
}

size_t Poset::comparable_pairs() const
{
    size_t c = 0;
    for (const auto& b : up_) c += b.count();
    return c;
}

std::vector<long long> Poset::mobius_from(size_t u) const
{
    std::vector<long long> mu(size(), 0);
    mu[u] = 1;
    const auto& a = up_[u].words();
    for_each_bit(up_[u], [&](size_t w) {
        if (w == u) return;
        long long s = 0;
        const auto& b = down_[w].words();
        for (size_t i = 0; i < a.size(); ++i) {
            uint64_t x = a[i] & b[i];
            while (x) {
                size_t v = (i << 6) + std::countr_zero(x);
                x &= x - 1;
                if (v != w) s = checked_add(s, mu[v]);
            }
        }
        mu[w] = -s;
    });
    return mu;
}

const std::vector<long long>& Poset::mobius_row(size_t u) const
{
    std::lock_guard<std::mutex> lock(mu_);
    auto& slot = rows_[u];
    if (!slot) slot = mobius_from(u);
    return *slot;
}

long long Poset::mobius(size_t u, size_t w) const
{
    if (!leq(u, w)) throw NotComparable("mobius: elements not comparable");
    return mobius_row(u)[w];
}

std::vector<long long> Poset::mobius_to(size_t w) const
{
    std::vector<long long> mu(size(), 0);
    mu[w] = 1;
    std::vector<size_t> below;
    for_each_bit(down_[w], [&](size_t v) { below.push_back(v); });
    for (auto it = below.rbegin(); it != below.rend(); ++it) {
        size_t u = *it;
        if (u == w) continue;
        long long s = 0;
        for (size_t v : interval(up_[u], down_[w]))
            if (v != u) s = checked_add(s, mu[v]);
        mu[u] = -s;
    }
    return mu;
}

Integer Poset::multichains(size_t u, size_t w, int z) const
{
    if (z < 0) throw Error("multichains: negative length");
    if (!leq(u, w)) return 0;
    std::vector<size_t> iv = interval(up_[u], down_[w]);
    std::vector<Integer> f(size(), 0);
    f[u] = 1;
    for (int step = 0; step < z; ++step) {
        std::vector<Integer> g(size(), 0);
        for (size_t v : iv) {
            if (sgn(f[v]) == 0) continue;
            for (size_t x : iv)
                if (x >= v && leq(v, x)) g[x] += f[v];
        }
        f = std::move(g);
    }
    return f[w];
}

UPoly Poset::zeta_poly(size_t u, size_t w) const
{
    if (!leq(u, w)) throw NotComparable("zeta_poly: elements not comparable");
    int d = rank_[w] - rank_[u];
    std::vector<Rational> xs, ys;
    // one sample beyond the degree bound as a consistency check
    for (int z = 0; z <= d + 1; ++z) {
        xs.emplace_back(z);
        ys.emplace_back(multichains(u, w, z));
    }
    std::vector<Rational> fx(xs.begin(), xs.end() - 1), fy(ys.begin(), ys.end() - 1);
    UPoly Z = interpolate(fx, fy);
    if (Z.eval(xs.back()) != ys.back()) throw Error("zeta polynomial degree exceeds rank difference");
    if (Z.eval(-1) != Rational(static_cast<long>(mobius(u, w)))) throw Error("zeta polynomial at -1 disagrees with Moebius value");
    return Z;
}

Poset Poset::dual() const
{
    size_t n = size();
    int top = max_rank();
    std::vector<int> r(n);
    for (size_t i = 0; i < n; ++i) r[i] = top - rank_[n - 1 - i];
    return Poset(r, [&](size_t a, size_t b) { return leq(n - 1 - b, n - 1 - a); });
}

} // namespace catwb
