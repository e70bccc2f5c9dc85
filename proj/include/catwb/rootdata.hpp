#pragma once

#include "catwb/exactmath.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace catwb {

enum class Family { A, B, D, E, F, H, I };

struct Irreducible {
    Family family;
    int n;      // rank
    int a = 0;  // dihedral order parameter, only for family I (n == 2)

    int rank() const { return n; }
    bool crystallographic() const;
    std::string to_string() const;
    auto operator<=>(const Irreducible&) const = default;
};

// Canonical multiset of irreducible factors; the empty type has rank 0.
class RootSystemType {
public:
    RootSystemType() = default;
    explicit RootSystemType(const std::vector<Irreducible>& factors);
    RootSystemType(Family f, int n, int a = 0);

    static RootSystemType parse(std::string_view text);
    static RootSystemType dihedral(int a) { return RootSystemType(Family::I, 2, a); }

    const std::vector<Irreducible>& factors() const { return f_; }
    int rank() const;
    bool empty() const { return f_.empty(); }
    bool irreducible() const { return f_.size() == 1; }
    const Irreducible& single() const;
    std::string to_string() const;   // "" for the empty type

    friend RootSystemType operator*(const RootSystemType& l, const RootSystemType& r);
    auto operator<=>(const RootSystemType&) const = default;

private:
    std::vector<Irreducible> f_;
};

// Coxeter matrix: m[i][i] = 1, m[i][j] = order of s_i s_j.
using CoxeterMatrix = std::vector<std::vector<int>>;

CoxeterMatrix coxeter_matrix(const Irreducible& t);
RootSystemType classify_coxeter_matrix(const CoxeterMatrix& m);

std::vector<RootSystemType> deletion_types(const RootSystemType& t);

unsigned long long group_order(const RootSystemType& t);
int positive_root_count(const RootSystemType& t);

using Vec = std::vector<QuadExt>;
QuadExt dot(const Vec& u, const Vec& v);
Vec reflect(const Vec& v, const Vec& alpha);
bool lex_positive(const Vec& v);

// Simple roots in the catalog coordinates; not available for dihedral types.
std::vector<Vec> simple_roots(const Irreducible& t);

// Full root system of an irreducible non-dihedral type, generated from the simple roots.
struct RootSystem {
    Irreducible type;
    int rank = 0;
    std::vector<Vec> roots;                 // ambient coordinates
    std::vector<Vec> coords;                // coordinates in the basis of simple roots
    std::vector<int> simple;                // indices of simple roots
    std::vector<bool> positive;
    std::vector<int> negative;              // index of -root
    std::vector<std::vector<int>> simple_action;  // simple_action[i][r] = index of s_i(root r)
};

RootSystem build_root_system(const Irreducible& t);

// Type of a closed root subsystem given by its roots (both signs).
RootSystemType classify_subsystem(const std::vector<Vec>& roots);

} // namespace catwb
