#pragma once

#include "catwb/exactmath.hpp"
#include "catwb/poset.hpp"
#include "catwb/report.hpp"
#include "catwb/serialize.hpp"
#include "catwb/wgroup.hpp"

#include <memory>
#include <vector>

namespace catwb {

// NC^m of an irreducible type. An element (w_0; w_1, ..., w_m) is stored through the
// multichain y_1 <= ... <= y_m in NC with y_i = w_0 ... w_{i-1}, so w_0 = y_1 and
// w_i = y_i^{-1} y_{i+1} with y_{m+1} = c.
struct NCmPoset {
    RootSystemType type;
    long m = 1;
    NCPtr nc;
    std::vector<std::vector<int>> chain;     // NC indices of y_1..y_m
    std::vector<std::vector<int>> factor;    // NC indices of w_0..w_m
    Poset poset;

    size_t size() const { return chain.size(); }
    int rank() const { return type.rank(); }
    size_t top() const { return size() - 1; }
};

using NCmPtr = std::shared_ptr<const NCmPoset>;

// Memoized per (type, m).
NCmPtr build_ncm(const RootSystemType& t, long m, const Limits& limits = {});

// Number of elements of each rank 0..n.
std::vector<Integer> rank_census(const NCmPoset& p);
std::vector<Integer> rank_census(const RootSystemType& t, long m, const Limits& limits = {});

// Sum of mu(u, w) x^rk(u) y^rk(w); coefficients are constants. Reducible types multiply.
MPoly m_triangle_bruteforce(const RootSystemType& t, long m, const Limits& limits = {});
MPoly m_triangle_of(const NCmPoset& p);

// Coefficient at (i, j) moves to (n - i, n - j) with sign (-1)^(i+j). Maps an M-triangle to
// the dual-poset sum on the right of the F=M identity, and back.
MPoly dual_rank_transform(const MPoly& p, int n);

// Dual-poset sum from decomposition numbers and characteristic polynomials, symbolic in m.
MPoly fm_rhs_formula(const RootSystemType& t, const Limits& limits = {});
// The same data turned back into an M-triangle.
MPoly m_triangle_formula(const RootSystemType& t, const Limits& limits = {});

// Multichains in the dual of NC^m with the given rank jumps (see count_rank_chains).
Integer count_dual_chains(const RootSystemType& t, long m, const std::vector<int>& jumps,
                          const Limits& limits = {});

// Ranks, factor tuples as group element ids, and Hasse edges.
json export_poset(const NCmPoset& p);

} // namespace catwb
