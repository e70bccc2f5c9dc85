#include "catwb/rootdata.hpp"
#include "catwb/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

namespace catwb {

// ---------------------------------------------------------------- types

bool Irreducible::crystallographic() const
{
    if (family == Family::H) return false;
    if (family == Family::I) return a == 6;
    return true;
}

std::string Irreducible::to_string() const
{
    switch (family) {
    case Family::A: return "A" + std::to_string(n);
    case Family::B: return "B" + std::to_string(n);
    case Family::D: return "D" + std::to_string(n);
    case Family::E: return "E" + std::to_string(n);
    case Family::F: return "F" + std::to_string(n);
    case Family::H: return "H" + std::to_string(n);
    case Family::I: return "I2(" + std::to_string(a) + ")";
    }
    return "?";
}

namespace {

void canonical_push(std::vector<Irreducible>& out, Irreducible t)
{
    auto bad = [&](const std::string& why) { return UnsupportedType(t.to_string() + ": " + why); };
    switch (t.family) {
    case Family::A:
        if (t.n < 1) throw bad("rank must be at least 1");
        break;
    case Family::B:
        if (t.n < 1) throw bad("rank must be at least 1");
        if (t.n == 1) t = {Family::A, 1};
        break;
    case Family::D:
        if (t.n < 2) throw bad("rank must be at least 2");
        if (t.n == 2) {
            out.push_back({Family::A, 1});
            out.push_back({Family::A, 1});
            return;
        }
        if (t.n == 3) t = {Family::A, 3};
        break;
    case Family::E:
        if (t.n < 6 || t.n > 8) throw bad("only E6, E7, E8");
        break;
    case Family::F:
        if (t.n != 4) throw bad("only F4");
        break;
    case Family::H:
        if (t.n != 3 && t.n != 4) throw bad("only H3, H4");
        break;
    case Family::I:
        if (t.a < 2) throw bad("dihedral order must be at least 2");
        if (t.a == 2) {
            out.push_back({Family::A, 1});
            out.push_back({Family::A, 1});
            return;
        }
        if (t.a == 3) t = {Family::A, 2};
        else if (t.a == 4) t = {Family::B, 2};
        else t.n = 2;
        break;
    }
    if (t.family != Family::I) t.a = 0;
    out.push_back(t);
}

} // namespace

RootSystemType::RootSystemType(const std::vector<Irreducible>& factors)
{
    for (const auto& f : factors) canonical_push(f_, f);
    std::sort(f_.begin(), f_.end());
}

RootSystemType::RootSystemType(Family f, int n, int a) : RootSystemType(std::vector<Irreducible>{{f, n, a}}) {}

int RootSystemType::rank() const
{
    int r = 0;
    for (const auto& f : f_) r += f.n;
    return r;
}

const Irreducible& RootSystemType::single() const
{
    if (f_.size() != 1) throw UnsupportedType("type '" + to_string() + "' is not irreducible");
    return f_.front();
}

std::string RootSystemType::to_string() const
{
    std::string s;
    for (const auto& f : f_) {
        if (!s.empty()) s += "x";
        s += f.to_string();
    }
    return s;
}

RootSystemType operator*(const RootSystemType& l, const RootSystemType& r)
{
    RootSystemType t;
    t.f_ = l.f_;
    t.f_.insert(t.f_.end(), r.f_.begin(), r.f_.end());
    std::sort(t.f_.begin(), t.f_.end());
    return t;
}

RootSystemType RootSystemType::parse(std::string_view text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty type string");
    std::vector<Irreducible> factors;
    size_t pos = 0;
    auto fail = [&](const std::string& why) {
        return ParseError("cannot parse type '" + std::string(text) + "': " + why);
    };
    auto read_int = [&]() {
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos || pos - start > 6) throw fail("expected a number");
        return std::stoi(s.substr(start, pos - start));
    };
    for (;;) {
        if (pos >= s.size()) throw fail("missing factor");
        char letter = s[pos++];
        Irreducible t{Family::A, 0};
        switch (letter) {
        case 'A': t.family = Family::A; break;
        case 'B': case 'C': t.family = Family::B; break;
        case 'D': t.family = Family::D; break;
        case 'E': t.family = Family::E; break;
        case 'F': t.family = Family::F; break;
        case 'H': t.family = Family::H; break;
        case 'G': t.family = Family::I; break;
        case 'I': t.family = Family::I; break;
        default: throw fail(std::string("unknown family '") + letter + "'");
        }
        t.n = read_int();
        if (letter == 'G') {
            if (t.n != 2) throw fail("only G2");
            t.a = 6;
        } else if (letter == 'I') {
            if (t.n != 2 || pos >= s.size() || s[pos] != '(') throw fail("dihedral types are written I2(a)");
            ++pos;
            t.a = read_int();
            if (pos >= s.size() || s[pos] != ')') throw fail("missing ')'");
            ++pos;
        }
        int repeat = 1;
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            repeat = read_int();
            if (repeat < 1) throw fail("bad exponent");
        }
        try {
            for (int i = 0; i < repeat; ++i) factors.push_back(t);
            RootSystemType probe(std::vector<Irreducible>{t});
        } catch (const UnsupportedType& e) {
            throw ParseError(e.what());
        }
        if (pos == s.size()) break;
        if (s[pos] != 'x' && s[pos] != '*') throw fail("expected 'x' between factors");
        ++pos;
    }
    return RootSystemType(factors);
}

// ---------------------------------------------------------------- diagrams

CoxeterMatrix coxeter_matrix(const Irreducible& t)
{
    int n = t.n;
    CoxeterMatrix m(n, std::vector<int>(n, 2));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    auto edge = [&](int i, int j, int label) { m[i][j] = m[j][i] = label; };
    switch (t.family) {
    case Family::A:
        for (int i = 0; i + 1 < n; ++i) edge(i, i + 1, 3);
        break;
    case Family::B:
        for (int i = 0; i + 1 < n; ++i) edge(i, i + 1, 3);
        edge(n - 2, n - 1, 4);
        break;
    case Family::D:
        for (int i = 0; i + 2 < n; ++i) edge(i, i + 1, 3);
        edge(n - 3, n - 1, 3);
        break;
    case Family::E:
        edge(0, 2, 3);
        edge(1, 3, 3);
        for (int i = 2; i + 1 < n; ++i) edge(i, i + 1, 3);
        break;
    case Family::F:
        edge(0, 1, 3);
        edge(1, 2, 4);
        edge(2, 3, 3);
        break;
    case Family::H:
        edge(0, 1, 5);
        for (int i = 1; i + 1 < n; ++i) edge(i, i + 1, 3);
        break;
    case Family::I:
        edge(0, 1, t.a);
        break;
    }
    return m;
}

namespace {

Irreducible classify_component(const CoxeterMatrix& m, const std::vector<int>& nodes)
{
    int n = static_cast<int>(nodes.size());
    auto fail = [&](const std::string& why) { return ClassificationError("Coxeter diagram: " + why); };
    if (n == 1) return {Family::A, 1};
    if (n == 2) {
        int a = m[nodes[0]][nodes[1]];
        return {Family::I, 2, a};
    }
    std::vector<std::vector<int>> adj(n);
    int edges = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int l = m[nodes[i]][nodes[j]];
            if (l == 2) continue;
            if (l != 3 && l != 4 && l != 5) throw fail("unexpected label " + std::to_string(l));
            adj[i].push_back(j);
            adj[j].push_back(i);
            ++edges;
        }
    if (edges != n - 1) throw fail("not a tree");
    auto label = [&](int i, int j) { return m[nodes[i]][nodes[j]]; };
    int branch = -1;
    for (int i = 0; i < n; ++i) {
        if (adj[i].size() > 3) throw fail("node of degree > 3");
        if (adj[i].size() == 3) {
            if (branch >= 0) throw fail("two branch nodes");
            branch = i;
        }
    }
    if (branch < 0) {
        int start = 0;
        while (adj[start].size() != 1) ++start;
        std::vector<int> labels;
        int prev = -1, cur = start;
        for (int k = 0; k + 1 < n; ++k) {
            int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            if (adj[cur].size() == 1) next = adj[cur][0];
            labels.push_back(label(cur, next));
            prev = cur;
            cur = next;
        }
        int big = 0, where = -1;
        for (int k = 0; k < n - 1; ++k)
            if (labels[k] > 3) {
                ++big;
                where = k;
            }
        if (big == 0) return {Family::A, n};
        if (big > 1) throw fail("several labels above 3 on a path");
        bool at_end = where == 0 || where == n - 2;
        int l = labels[where];
        if (l == 4 && at_end) return {Family::B, n};
        if (l == 4 && n == 4) return {Family::F, 4};
        if (l == 5 && at_end && (n == 3 || n == 4)) return {Family::H, n};
        throw fail("path diagram not in the catalog");
    }
    std::vector<int> arms;
    for (int start : adj[branch]) {
        if (label(branch, start) != 3) throw fail("branched diagram with label above 3");
        int len = 1, prev = branch, cur = start;
        while (adj[cur].size() == 2) {
            int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            if (label(cur, next) != 3) throw fail("branched diagram with label above 3");
            prev = cur;
            cur = next;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return {Family::D, n};
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return {Family::E, n};
    throw fail("branched diagram not in the catalog");
}

} // namespace

RootSystemType classify_coxeter_matrix(const CoxeterMatrix& m)
{
    int n = static_cast<int>(m.size());
    std::vector<int> comp(n, -1);
    std::vector<Irreducible> factors;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> nodes{s};
        comp[s] = s;
        for (size_t k = 0; k < nodes.size(); ++k)
            for (int j = 0; j < n; ++j)
                if (comp[j] < 0 && m[nodes[k]][j] != 2) {
                    comp[j] = s;
                    nodes.push_back(j);
                }
        std::sort(nodes.begin(), nodes.end());
        factors.push_back(classify_component(m, nodes));
    }
    return RootSystemType(factors);
}

std::vector<RootSystemType> deletion_types(const RootSystemType& t)
{
    const Irreducible& irr = t.single();
    CoxeterMatrix m = coxeter_matrix(irr);
    int n = irr.n;
    std::vector<RootSystemType> out;
    for (int del = 0; del < n; ++del) {
        CoxeterMatrix sub;
        for (int i = 0; i < n; ++i) {
            if (i == del) continue;
            std::vector<int> row;
            for (int j = 0; j < n; ++j)
                if (j != del) row.push_back(m[i][j]);
            sub.push_back(row);
        }
        out.push_back(classify_coxeter_matrix(sub));
    }
    return out;
}

unsigned long long group_order(const RootSystemType& t)
{
    unsigned long long total = 1;
    auto fact = [](int k) {
        unsigned long long f = 1;
        for (int i = 2; i <= k; ++i) f *= i;
        return f;
    };
    for (const auto& f : t.factors()) {
        unsigned long long o = 0;
        switch (f.family) {
        case Family::A: o = fact(f.n + 1); break;
        case Family::B: o = (1ULL << f.n) * fact(f.n); break;
        case Family::D: o = (1ULL << (f.n - 1)) * fact(f.n); break;
        case Family::E: o = f.n == 6 ? 51840ULL : f.n == 7 ? 2903040ULL : 696729600ULL; break;
        case Family::F: o = 1152; break;
        case Family::H: o = f.n == 3 ? 120 : 14400; break;
        case Family::I: o = 2ULL * f.a; break;
        }
        total *= o;
    }
    return total;
}

int positive_root_count(const RootSystemType& t)
{
    int total = 0;
    for (const auto& f : t.factors()) {
        switch (f.family) {
        case Family::A: total += f.n * (f.n + 1) / 2; break;
        case Family::B: total += f.n * f.n; break;
        case Family::D: total += f.n * (f.n - 1); break;
        case Family::E: total += f.n == 6 ? 36 : f.n == 7 ? 63 : 120; break;
        case Family::F: total += 24; break;
        case Family::H: total += f.n == 3 ? 15 : 60; break;
        case Family::I: total += f.a; break;
        }
    }
    return total;
}

// ---------------------------------------------------------------- vectors

QuadExt dot(const Vec& u, const Vec& v)
{
    QuadExt s;
    for (size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
    return s;
}

Vec reflect(const Vec& v, const Vec& alpha)
{
    QuadExt f = QuadExt(2) * dot(v, alpha) / dot(alpha, alpha);
    Vec r = v;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= f * alpha[i];
    return r;
}

bool lex_positive(const Vec& v)
{
    for (const auto& c : v) {
        int s = c.sign();
        if (s != 0) return s > 0;
    }
    return false;
}

namespace {

struct VecLess {
    bool operator()(const Vec& l, const Vec& r) const
    {
        for (size_t i = 0; i < l.size(); ++i) {
            int c = cmp(l[i].a, r[i].a);
            if (c) return c < 0;
            c = cmp(l[i].b, r[i].b);
            if (c) return c < 0;
        }
        return false;
    }
};

Vec unit(int dim, int i, const QuadExt& v = QuadExt(1))
{
    Vec e(dim, QuadExt(0));
    e[i] = v;
    return e;
}

} // namespace

std::vector<Vec> simple_roots(const Irreducible& t)
{
    int n = t.n;
    std::vector<Vec> s;
    QuadExt half(rat(1, 2));
    QuadExt tau = QuadExt::golden();
    QuadExt tau_inv = tau - QuadExt(1);
    auto diff = [](int dim, int i, int j) {
        Vec v(dim, QuadExt(0));
        v[i] = 1;
        v[j] = -1;
        return v;
    };
    switch (t.family) {
    case Family::A:
        for (int i = 0; i < n; ++i) s.push_back(diff(n + 1, i, i + 1));
        break;
    case Family::B:
        for (int i = 0; i + 1 < n; ++i) s.push_back(diff(n, i, i + 1));
        s.push_back(unit(n, n - 1));
        break;
    case Family::D: {
        for (int i = 0; i + 1 < n; ++i) s.push_back(diff(n, i, i + 1));
        Vec v(n, QuadExt(0));
        v[n - 2] = 1;
        v[n - 1] = 1;
        s.push_back(v);
        break;
    }
    case Family::E: {
        Vec a1(8, -half);
        a1[0] = half;
        a1[7] = half;
        s.push_back(a1);
        Vec a2(8, QuadExt(0));
        a2[0] = 1;
        a2[1] = 1;
        s.push_back(a2);
        for (int i = 3; i <= n; ++i) s.push_back(diff(8, i - 2, i - 3));
        break;
    }
    case Family::F: {
        s.push_back(diff(4, 1, 2));
        s.push_back(diff(4, 2, 3));
        s.push_back(unit(4, 3));
        s.push_back(Vec{half, -half, -half, -half});
        break;
    }
    case Family::H:
        if (n == 3) {
            s.push_back(Vec{QuadExt(2), QuadExt(0), QuadExt(0)});
            s.push_back(Vec{-tau, tau_inv, QuadExt(1)});
            s.push_back(Vec{QuadExt(0), QuadExt(0), QuadExt(-2)});
        } else {
            s.push_back(Vec{QuadExt(2), QuadExt(0), QuadExt(0), QuadExt(0)});
            s.push_back(Vec{-tau, tau_inv, QuadExt(0), QuadExt(1)});
            s.push_back(Vec{QuadExt(0), QuadExt(0), QuadExt(0), QuadExt(-2)});
            s.push_back(Vec{QuadExt(0), -tau, tau_inv, QuadExt(1)});
        }
        break;
    case Family::I:
        throw UnsupportedType("dihedral types have no coordinate realization");
    }
    return s;
}

RootSystem build_root_system(const Irreducible& t)
{
    RootSystem rs;
    rs.type = t;
    rs.rank = t.n;
    std::vector<Vec> simple = simple_roots(t);
    int n = t.n;
    std::vector<QuadExt> norms;
    for (const auto& a : simple) norms.push_back(dot(a, a));
    std::map<Vec, int, VecLess> index;
    auto add = [&](const Vec& v, const Vec& c) {
        auto [it, inserted] = index.try_emplace(v, static_cast<int>(rs.roots.size()));
        if (inserted) {
            rs.roots.push_back(v);
            rs.coords.push_back(c);
        }
        return it->second;
    };
    for (int i = 0; i < n; ++i) rs.simple.push_back(add(simple[i], unit(n, i)));
    rs.simple_action.assign(n, {});
    for (size_t k = 0; k < rs.roots.size(); ++k) {
        for (int i = 0; i < n; ++i) {
            // s_i(v) = v - <v, alpha_i^vee> alpha_i
            QuadExt f = QuadExt(2) * dot(rs.roots[k], simple[i]) / norms[i];
            Vec v = rs.roots[k];
            for (size_t j = 0; j < v.size(); ++j) v[j] -= f * simple[i][j];
            Vec c = rs.coords[k];
            c[i] -= f;
            int idx = add(v, c);
            if (rs.simple_action[i].size() <= k) rs.simple_action[i].resize(k + 1, -1);
            rs.simple_action[i][k] = idx;
        }
    }
    size_t N = rs.roots.size();
    for (auto& row : rs.simple_action) row.resize(N, -1);
    rs.positive.resize(N);
    rs.negative.resize(N);
    for (size_t k = 0; k < N; ++k) {
        bool pos = true, neg = true;
        for (const auto& c : rs.coords[k]) {
            int s = c.sign();
            if (s < 0) pos = false;
            if (s > 0) neg = false;
        }
        if (pos == neg) throw Error("root with mixed-sign simple coordinates in " + t.to_string());
        rs.positive[k] = pos;
        Vec minus = rs.roots[k];
        for (auto& c : minus) c = -c;
        auto it = index.find(minus);
        if (it == index.end()) throw Error("root system not closed under negation");
        rs.negative[k] = it->second;
    }
    if (static_cast<int>(N) != 2 * positive_root_count(RootSystemType(std::vector<Irreducible>{t})))
        throw Error("root count mismatch for " + t.to_string());
    return rs;
}

RootSystemType classify_subsystem(const std::vector<Vec>& roots)
{
    std::vector<Vec> pos;
    std::set<Vec, VecLess> seen;
    for (const auto& r : roots)
        if (lex_positive(r) && seen.insert(r).second) pos.push_back(r);
    std::vector<Vec> simple;
    for (size_t i = 0; i < pos.size(); ++i) {
        bool is_simple = true;
        for (size_t j = 0; j < pos.size() && is_simple; ++j)
            if (j != i && !lex_positive(reflect(pos[j], pos[i]))) is_simple = false;
        if (is_simple) simple.push_back(pos[i]);
    }
    int n = static_cast<int>(simple.size());
    CoxeterMatrix m(n, std::vector<int>(n, 1));
    // cos^2 of the angle between simple roots determines the label.
    const QuadExt cos2_five(rat(3, 8), rat(1, 8));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            QuadExt d = dot(simple[i], simple[j]);
            QuadExt c2 = d * d / (dot(simple[i], simple[i]) * dot(simple[j], simple[j]));
            int label;
            if (c2.is_zero()) label = 2;
            else if (c2 == QuadExt(rat(1, 4))) label = 3;
            else if (c2 == QuadExt(rat(1, 2))) label = 4;
            else if (c2 == QuadExt(rat(3, 4))) label = 6;
            else if (c2 == cos2_five) label = 5;
            else throw ClassificationError("angle between simple roots not in the catalog");
            m[i][j] = m[j][i] = label;
        }
    return classify_coxeter_matrix(m);
}

} // namespace catwb
