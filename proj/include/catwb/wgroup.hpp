#pragma once

#include "catwb/exactmath.hpp"
#include "catwb/poset.hpp"
#include "catwb/rootdata.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace catwb {

// Dense bit relations are used throughout, so posets are capped by element count as well.
constexpr size_t kDensePosetLimit = 5000;

struct Limits {
    unsigned long long group_cap = 100000;
    unsigned long long pair_cap = 2000000;   // comparable pairs swept by Moebius computations
    std::string cache_dir;                   // empty disables the disk cache
};

using ElemId = uint32_t;

// Finite reflection group of an irreducible type. Every element is stored as the
// permutation it induces on the roots; dihedral groups act on 2a abstract root labels.
class ReflectionGroup {
public:
    static std::shared_ptr<const ReflectionGroup> build(const RootSystemType& t, const Limits& limits);

    const RootSystemType& type() const { return type_; }
    int rank() const { return rank_; }
    bool dihedral() const { return dihedral_; }
    size_t order() const { return order_; }
    int root_count() const { return roots_; }
    bool positive(int root) const { return positive_[root]; }
    int negative(int root) const { return negative_[root]; }
    const std::vector<int>& simple_roots() const { return simple_; }
    const RootSystem* root_system() const { return rs_.get(); }

    ElemId identity() const { return 0; }
    const uint8_t* perm(ElemId w) const { return &perms_[size_t(w) * roots_]; }
    ElemId multiply(ElemId u, ElemId w) const;     // u after w
    ElemId inverse(ElemId w) const { return inverse_[w]; }
    ElemId find(const std::vector<uint8_t>& images) const;  // images of all roots

    const std::vector<ElemId>& simple_reflections() const { return simple_refl_; }
    const std::vector<ElemId>& reflections() const { return reflections_; }
    ElemId reflection(int root) const;              // t_root for any root
    ElemId coxeter_element() const { return coxeter_; }

    int abs_length(ElemId w) const { return length_[w]; }
    int abs_length_fixed_space(ElemId w) const;     // recomputed, uncached
    std::vector<int> abs_length_bfs() const;        // Cayley graph on all reflections
    bool abs_leq(ElemId u, ElemId w) const;

    // Positive roots whose reflections lie below w in absolute order.
    std::vector<int> reflection_roots_below(ElemId w) const;
    // Parabolic type read from the reflections below w (Coxeter diagram of their simple system).
    RootSystemType parabolic_type(ElemId w) const;
    // Parabolic type from the roots in the moved space, via classify_subsystem; not for dihedral.
    RootSystemType parabolic_type_geometric(ElemId w) const;

    // Disk cache payload; loading rebuilds every derived table.
    std::string serialize() const;
    static std::shared_ptr<const ReflectionGroup> deserialize(const std::string& data, const RootSystemType& t);

private:
    ReflectionGroup() = default;
    void setup_roots();
    void enumerate(unsigned long long cap);
    void finish();
    uint64_t key(const uint8_t* p) const;
    int compute_length(ElemId w) const;

    RootSystemType type_;
    Irreducible irr_{Family::A, 1};
    int rank_ = 0;
    bool dihedral_ = false;
    int roots_ = 0;
    size_t order_ = 0;
    std::shared_ptr<const RootSystem> rs_;
    std::vector<std::vector<long long>> icoords_;   // crystallographic types only
    std::vector<bool> positive_;
    std::vector<int> negative_;
    std::vector<int> simple_;
    std::vector<std::vector<uint8_t>> simple_perm_;
    std::vector<uint8_t> perms_;
    std::unordered_map<uint64_t, ElemId> index_;
    std::vector<ElemId> inverse_;
    std::vector<uint8_t> length_;
    std::vector<ElemId> simple_refl_;
    std::vector<ElemId> reflections_;          // one per positive root, by root index order
    std::vector<ElemId> refl_of_root_;
    ElemId coxeter_ = 0;
};

using GroupPtr = std::shared_ptr<const ReflectionGroup>;

// Cached on disk when limits.cache_dir is set.
GroupPtr enumerate_group(const RootSystemType& t, const Limits& limits = {});

// The interval [e, c] in absolute order.
struct NCPoset {
    GroupPtr group;
    std::vector<ElemId> elems;          // sorted by rank, then by element id
    std::vector<int> index_of;          // group element -> position, or -1
    Poset poset;

    size_t size() const { return elems.size(); }
    size_t bottom() const { return 0; }
    size_t top() const { return elems.size() - 1; }
    int index(ElemId w) const { return index_of[w]; }
};

using NCPtr = std::shared_ptr<const NCPoset>;

NCPtr build_nc(const RootSystemType& t, const Limits& limits = {});

// chi*(y) = sum over u of mu(u, c) y^rk(u); products multiply; empty type gives 1.
UPoly char_poly(const RootSystemType& t, const Limits& limits = {});
UPoly char_poly_of(const NCPoset& nc);

// Keys are ordered type tuples; the empty tuple (d = 0) counts 1.
struct DecompositionTable {
    RootSystemType type;
    int max_d = 0;
    std::map<std::vector<RootSystemType>, unsigned long long> counts;

    unsigned long long get(const std::vector<RootSystemType>& tuple) const;
    // Same counts keyed by the sorted tuple; throws if two orderings disagree.
    std::map<std::vector<RootSystemType>, unsigned long long> symmetric() const;
    bool symmetric_under_permutation() const;
    // Every tuple's count equals the sum over its full-rank completions by one more factor.
    bool closed_under_completion() const;
};

DecompositionTable decomposition_numbers(const RootSystemType& t, int max_d, const Limits& limits = {});

// Multichains x_1 <= ... <= x_{l-1} with rk(x_i) = s_1 + ... + s_i. The rank-0 start and
// the rank-n end are implicit, so a single jump counts 1.
Integer count_rank_chains(const Poset& p, const std::vector<int>& jumps);

// Closed chain counts. s holds the successive rank jumps summing to n.
Integer chains_type_a(int n, long m, const std::vector<int>& s);
Integer chains_type_b(int n, long m, const std::vector<int>& s);
Integer chains_type_d(int n, const std::vector<int>& s);

} // namespace catwb
