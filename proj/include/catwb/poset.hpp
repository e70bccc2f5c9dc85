#pragma once

#include "catwb/exactmath.hpp"

#include <cstdint>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

namespace catwb {

class Bits {
public:
    Bits() = default;
    explicit Bits(size_t n) : n_(n), w_((n + 63) / 64, 0) {}
    void set(size_t i) { w_[i >> 6] |= uint64_t{1} << (i & 63); }
    bool test(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    size_t size() const { return n_; }
    size_t count() const;
    const std::vector<uint64_t>& words() const { return w_; }
    friend bool operator==(const Bits&, const Bits&) = default;

private:
    size_t n_ = 0;
    std::vector<uint64_t> w_;
};

// Finite graded poset on 0..N-1 whose indices are sorted by rank (a linear extension).
// Order relation kept as dense bit rows in both directions.
class Poset {
public:
    Poset() = default;
    template <class Leq>
    Poset(std::vector<int> ranks, Leq leq) : rank_(std::move(ranks))
    {
        size_t n = rank_.size();
        check_sorted();
        up_.assign(n, Bits(n));
        down_.assign(n, Bits(n));
        for (size_t u = 0; u < n; ++u)
            for (size_t w = u; w < n; ++w)
                if (w == u || (rank_[w] > rank_[u] && leq(u, w))) {
                    up_[u].set(w);
                    down_[w].set(u);
                }
        rows_.resize(n);
    }
    Poset(const Poset& o) : rank_(o.rank_), up_(o.up_), down_(o.down_), rows_(o.rank_.size()) {}
    Poset& operator=(const Poset& o)
    {
        rank_ = o.rank_;
        up_ = o.up_;
        down_ = o.down_;
        rows_.assign(rank_.size(), std::nullopt);
        return *this;
    }

    size_t size() const { return rank_.size(); }
    int rank(size_t i) const { return rank_[i]; }
    const std::vector<int>& ranks() const { return rank_; }
    int max_rank() const;
    bool leq(size_t u, size_t w) const { return up_[u].test(w); }
    const Bits& up(size_t u) const { return up_[u]; }
    const Bits& down(size_t w) const { return down_[w]; }

    std::vector<size_t> minimal() const;
    std::vector<size_t> maximal() const;
    std::vector<std::pair<size_t, size_t>> hasse_edges() const;
    size_t comparable_pairs() const;

    // mu(u, w); NotComparable if u is not below w.
    long long mobius(size_t u, size_t w) const;
    // mu(u, .) over all elements, zero off the up-set; memoized per bottom element.
    const std::vector<long long>& mobius_row(size_t u) const;
    // Same values without memoization.
    std::vector<long long> mobius_from(size_t u) const;
    // mu(., w) over all elements, zero off the down-set.
    std::vector<long long> mobius_to(size_t w) const;
    // Z(u, w; z) from multichain counts at z = 0..rk(w)-rk(u); asserts Z(-1) = mu(u, w).
    UPoly zeta_poly(size_t u, size_t w) const;
    // Number of multichains u = x_0 <= ... <= x_z = w.
    Integer multichains(size_t u, size_t w, int z) const;

    // Order dual; index i maps to N-1-i so ranks stay sorted (rank becomes max_rank - rank).
    Poset dual() const;

private:
    void check_sorted() const;
    std::vector<int> rank_;
    std::vector<Bits> up_, down_;
    mutable std::vector<std::optional<std::vector<long long>>> rows_;
    mutable std::mutex mu_;
};

} // namespace catwb
