#include "catwb/wgroup.hpp"
#include "catwb/errors.hpp"
#include "catwb/serialize.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <deque>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>

namespace catwb {

namespace {

constexpr char kMagic[8] = {'C', 'A', 'T', 'W', 'B', 'G', 'R', 'P'};
constexpr uint32_t kVersion = 1;

int rank_int(std::vector<std::vector<long long>> m)
{
    // fraction-free elimination
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    int r = 0;
    __int128 prev = 1;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j) {
                __int128 v = (__int128)m[r][c] * m[i][j] - (__int128)m[i][c] * m[r][j];
                m[i][j] = static_cast<long long>(v / prev);
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

// Row-reduced basis over Q(sqrt5).
class Span {
public:
    bool add(Vec v)
    {
        reduce(v);
        auto it = std::find_if(v.begin(), v.end(), [](const QuadExt& q) { return !q.is_zero(); });
        if (it == v.end()) return false;
        size_t p = it - v.begin();
        QuadExt inv = QuadExt(1) / v[p];
        for (auto& q : v) q *= inv;
        for (size_t i = 0; i < rows_.size(); ++i) {
            QuadExt f = rows_[i][p];
            if (f.is_zero()) continue;
            for (size_t j = 0; j < v.size(); ++j) rows_[i][j] -= f * v[j];
        }
        rows_.push_back(std::move(v));
        piv_.push_back(p);
        return true;
    }
    bool contains(Vec v) const
    {
        reduce(v);
        return std::all_of(v.begin(), v.end(), [](const QuadExt& q) { return q.is_zero(); });
    }
    size_t dim() const { return rows_.size(); }

private:
    void reduce(Vec& v) const
    {
        for (size_t i = 0; i < rows_.size(); ++i) {
            QuadExt f = v[piv_[i]];
            if (f.is_zero()) continue;
            for (size_t j = 0; j < v.size(); ++j) v[j] -= f * rows_[i][j];
        }
    }
    std::vector<Vec> rows_;
    std::vector<size_t> piv_;
};

std::mutex g_cache_mutex;
std::map<std::string, GroupPtr> g_groups;
std::map<std::string, NCPtr> g_nc;

void write_u32(std::string& out, uint32_t v)
{
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

uint32_t read_u32(const std::string& in, size_t& pos)
{
    if (pos + 4 > in.size()) throw Error("group cache truncated");
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= uint32_t(static_cast<unsigned char>(in[pos + i])) << (8 * i);
    pos += 4;
    return v;
}

} // namespace

// ---------------------------------------------------------------- construction

void ReflectionGroup::setup_roots()
{
    if (!type_.irreducible()) throw UnsupportedType("reflection groups are built per irreducible factor");
    irr_ = type_.single();
    rank_ = irr_.n;
    dihedral_ = irr_.family == Family::I;
    if (dihedral_) {
        int a = irr_.a;
        if (2 * a > 255) throw UnsupportedType("I2(a) supported for a <= 127");
        roots_ = 2 * a;
        positive_.assign(roots_, false);
        negative_.assign(roots_, 0);
        for (int k = 0; k < roots_; ++k) {
            positive_[k] = k < a;
            negative_[k] = (k + a) % roots_;
        }
        simple_ = {0, a - 1};
        simple_perm_.assign(2, std::vector<uint8_t>(roots_));
        for (int i = 0; i < 2; ++i)
            for (int k = 0; k < roots_; ++k)
                simple_perm_[i][k] = static_cast<uint8_t>(((2 * simple_[i] + a - k) % roots_ + roots_) % roots_);
        return;
    }
    rs_ = std::make_shared<const RootSystem>(build_root_system(irr_));
    roots_ = static_cast<int>(rs_->roots.size());
    if (roots_ > 255) throw UnsupportedType("root system too large for the permutation encoding");
    positive_ = rs_->positive;
    negative_ = rs_->negative;
    simple_ = rs_->simple;
    simple_perm_.assign(rank_, std::vector<uint8_t>(roots_));
    for (int i = 0; i < rank_; ++i)
        for (int k = 0; k < roots_; ++k) simple_perm_[i][k] = static_cast<uint8_t>(rs_->simple_action[i][k]);
    if (irr_.crystallographic()) {
        icoords_.resize(roots_);
        for (int k = 0; k < roots_; ++k)
            for (const auto& q : rs_->coords[k]) icoords_[k].push_back(to_long(q.a));
    }
}

uint64_t ReflectionGroup::key(const uint8_t* p) const
{
    uint64_t k = 0;
    for (int i = 0; i < rank_; ++i) k |= uint64_t(p[simple_[i]]) << (8 * i);
    return k;
}

void ReflectionGroup::enumerate(unsigned long long cap)
{
    std::vector<uint8_t> id(roots_);
    std::iota(id.begin(), id.end(), 0);
    perms_ = id;
    index_.clear();
    index_[key(id.data())] = 0;
    std::vector<uint8_t> next(roots_);
    for (size_t head = 0; head < perms_.size() / roots_; ++head) {
        for (int i = 0; i < rank_; ++i) {
            const uint8_t* w = &perms_[head * roots_];
            for (int r = 0; r < roots_; ++r) next[r] = simple_perm_[i][w[r]];
            uint64_t k = key(next.data());
            if (index_.count(k)) continue;
            size_t n = perms_.size() / roots_;
            if (n >= cap) throw BudgetExceeded("group " + type_.to_string(), n + 1, cap);
            index_[k] = static_cast<ElemId>(n);
            perms_.insert(perms_.end(), next.begin(), next.end());
        }
    }
    order_ = perms_.size() / roots_;
    if (order_ != group_order(type_)) throw Error("group enumeration size mismatch for " + type_.to_string());
}

void ReflectionGroup::finish()
{
    inverse_.assign(order_, 0);
    std::vector<uint8_t> inv(roots_);
    for (size_t w = 0; w < order_; ++w) {
        const uint8_t* p = perm(static_cast<ElemId>(w));
        for (int r = 0; r < roots_; ++r) inv[p[r]] = static_cast<uint8_t>(r);
        inverse_[w] = index_.at(key(inv.data()));
    }
    simple_refl_.clear();
    for (int i = 0; i < rank_; ++i) simple_refl_.push_back(index_.at(key(simple_perm_[i].data())));

    refl_of_root_.assign(roots_, UINT32_MAX);
    int found = 0;
    for (size_t w = 0; w < order_ && found < roots_; ++w) {
        const uint8_t* p = perm(static_cast<ElemId>(w));
        for (int i = 0; i < rank_; ++i) {
            int r = p[simple_[i]];
            if (refl_of_root_[r] != UINT32_MAX) continue;
            ElemId t = multiply(multiply(static_cast<ElemId>(w), simple_refl_[i]), inverse_[w]);
            refl_of_root_[r] = t;
            refl_of_root_[negative_[r]] = t;
            found += 2;
        }
    }
    reflections_.clear();
    for (int r = 0; r < roots_; ++r)
        if (positive_[r]) reflections_.push_back(refl_of_root_[r]);

    coxeter_ = identity();
    for (ElemId s : simple_refl_) coxeter_ = multiply(coxeter_, s);
}

std::shared_ptr<const ReflectionGroup> ReflectionGroup::build(const RootSystemType& t, const Limits& limits)
{
    unsigned long long est = group_order(t);
    if (est > limits.group_cap) throw BudgetExceeded("group " + t.to_string(), est, limits.group_cap);
    std::shared_ptr<ReflectionGroup> g(new ReflectionGroup());
    g->type_ = t;
    g->setup_roots();
    g->enumerate(limits.group_cap);
    g->finish();
    g->length_.resize(g->order_);
    for (size_t w = 0; w < g->order_; ++w) g->length_[w] = static_cast<uint8_t>(g->compute_length(static_cast<ElemId>(w)));
    return g;
}

// ---------------------------------------------------------------- element operations

ElemId ReflectionGroup::multiply(ElemId u, ElemId w) const
{
    const uint8_t* pu = perm(u);
    const uint8_t* pw = perm(w);
    uint64_t k = 0;
    for (int i = 0; i < rank_; ++i) k |= uint64_t(pu[pw[simple_[i]]]) << (8 * i);
    return index_.at(k);
}

ElemId ReflectionGroup::find(const std::vector<uint8_t>& images) const
{
    if (static_cast<int>(images.size()) != roots_) throw Error("find: wrong permutation size");
    auto it = index_.find(key(images.data()));
    if (it == index_.end() || std::memcmp(perm(it->second), images.data(), roots_) != 0)
        throw Error("find: not a group element");
    return it->second;
}

ElemId ReflectionGroup::reflection(int root) const { return refl_of_root_.at(root); }

int ReflectionGroup::compute_length(ElemId w) const
{
    const uint8_t* p = perm(w);
    if (dihedral_) {
        if (w == identity()) return 0;
        int d = ((p[1] - p[0]) % roots_ + roots_) % roots_;
        return d == 1 ? 2 : 1;
    }
    if (!icoords_.empty()) {
        std::vector<std::vector<long long>> m(rank_, std::vector<long long>(rank_));
        for (int j = 0; j < rank_; ++j)
            for (int i = 0; i < rank_; ++i) m[i][j] = icoords_[p[simple_[j]]][i] - (i == j ? 1 : 0);
        return rank_int(std::move(m));
    }
    Span s;
    for (int j = 0; j < rank_; ++j) {
        Vec col = rs_->coords[p[simple_[j]]];
        col[j] -= QuadExt(1);
        s.add(std::move(col));
    }
    return static_cast<int>(s.dim());
}

int ReflectionGroup::abs_length_fixed_space(ElemId w) const { return compute_length(w); }

std::vector<int> ReflectionGroup::abs_length_bfs() const
{
    std::vector<int> dist(order_, -1);
    std::deque<ElemId> q{identity()};
    dist[identity()] = 0;
    while (!q.empty()) {
        ElemId w = q.front();
        q.pop_front();
        for (ElemId t : reflections_) {
            ElemId v = multiply(w, t);
            if (dist[v] < 0) {
                dist[v] = dist[w] + 1;
                q.push_back(v);
            }
        }
    }
    return dist;
}

bool ReflectionGroup::abs_leq(ElemId u, ElemId w) const
{
    return length_[w] == length_[u] + length_[multiply(inverse_[u], w)];
}

std::vector<int> ReflectionGroup::reflection_roots_below(ElemId w) const
{
    std::vector<int> out;
    int lw = length_[w];
    for (int r = 0; r < roots_; ++r)
        if (positive_[r] && length_[multiply(refl_of_root_[r], w)] == lw - 1) out.push_back(r);
    return out;
}

RootSystemType ReflectionGroup::parabolic_type(ElemId w) const
{
    std::vector<int> pos = reflection_roots_below(w);
    if (pos.empty()) return RootSystemType();
    std::vector<char> in(roots_, 0);
    for (int r : pos) in[r] = 1;
    std::vector<int> simple;
    for (int a : pos) {
        const uint8_t* t = perm(refl_of_root_[a]);
        bool ok = true;
        for (int b : pos)
            if (b != a && !positive_[t[b]]) {
                ok = false;
                break;
            }
        if (ok) simple.push_back(a);
    }
    size_t k = simple.size();
    CoxeterMatrix m(k, std::vector<int>(k, 1));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i + 1; j < k; ++j) {
            ElemId p = multiply(refl_of_root_[simple[i]], refl_of_root_[simple[j]]);
            int order = 1;
            for (ElemId q = p; q != identity(); q = multiply(q, p)) ++order;
            m[i][j] = m[j][i] = order;
        }
    RootSystemType t = classify_coxeter_matrix(m);
    if (t.rank() != length_[w])
        throw ClassificationError("parabolic rank differs from absolute length in " + type_.to_string());
    return t;
}

RootSystemType ReflectionGroup::parabolic_type_geometric(ElemId w) const
{
    if (dihedral_) throw UnsupportedType("geometric classification needs root coordinates");
    const uint8_t* p = perm(w);
    Span moved;
    for (int j = 0; j < rank_; ++j) {
        Vec col = rs_->coords[p[simple_[j]]];
        col[j] -= QuadExt(1);
        moved.add(std::move(col));
    }
    std::vector<Vec> roots;
    for (int r = 0; r < roots_; ++r)
        if (moved.contains(rs_->coords[r])) roots.push_back(rs_->roots[r]);
    if (roots.empty()) return RootSystemType();
    return classify_subsystem(roots);
}

// ---------------------------------------------------------------- cache

std::string ReflectionGroup::serialize() const
{
    std::string body;
    std::string ts = type_.to_string();
    write_u32(body, kVersion);
    write_u32(body, static_cast<uint32_t>(ts.size()));
    body += ts;
    write_u32(body, static_cast<uint32_t>(roots_));
    write_u32(body, static_cast<uint32_t>(order_));
    body.append(reinterpret_cast<const char*>(perms_.data()), perms_.size());
    body.append(reinterpret_cast<const char*>(length_.data()), length_.size());
    std::string out(kMagic, sizeof kMagic);
    out += body;
    out += sha256_hex(body);
    return out;
}

std::shared_ptr<const ReflectionGroup> ReflectionGroup::deserialize(const std::string& data, const RootSystemType& t)
{
    if (data.size() < sizeof kMagic + 64 || std::memcmp(data.data(), kMagic, sizeof kMagic) != 0)
        throw Error("group cache: bad header");
    std::string body = data.substr(sizeof kMagic, data.size() - sizeof kMagic - 64);
    if (sha256_hex(body) != data.substr(data.size() - 64)) throw Error("group cache: checksum mismatch");
    size_t pos = 0;
    if (read_u32(body, pos) != kVersion) throw Error("group cache: version mismatch");
    uint32_t len = read_u32(body, pos);
    if (pos + len > body.size()) throw Error("group cache truncated");
    if (body.substr(pos, len) != t.to_string()) throw Error("group cache: type mismatch");
    pos += len;
    std::shared_ptr<ReflectionGroup> g(new ReflectionGroup());
    g->type_ = t;
    g->setup_roots();
    uint32_t roots = read_u32(body, pos), order = read_u32(body, pos);
    if (static_cast<int>(roots) != g->roots_ || order != group_order(t)) throw Error("group cache: size mismatch");
    size_t need = size_t(roots) * order + order;
    if (body.size() - pos != need) throw Error("group cache: payload size mismatch");
    g->order_ = order;
    g->perms_.assign(body.begin() + pos, body.begin() + pos + size_t(roots) * order);
    pos += size_t(roots) * order;
    g->length_.assign(body.begin() + pos, body.end());
    for (size_t w = 0; w < order; ++w) g->index_[g->key(g->perm(static_cast<ElemId>(w)))] = static_cast<ElemId>(w);
    if (g->index_.size() != order) throw Error("group cache: duplicate elements");
    g->finish();
    return g;
}

GroupPtr enumerate_group(const RootSystemType& t, const Limits& limits)
{
    unsigned long long est = group_order(t);
    if (est > limits.group_cap) throw BudgetExceeded("group " + t.to_string(), est, limits.group_cap);
    std::string name = t.to_string();
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = g_groups.find(name);
        if (it != g_groups.end()) return it->second;
    }
    GroupPtr g;
    std::filesystem::path file;
    if (!limits.cache_dir.empty()) {
        file = std::filesystem::path(limits.cache_dir) / ("group-" + name + "-v" + std::to_string(kVersion) + ".bin");
        std::ifstream in(file, std::ios::binary);
        if (in) {
            std::stringstream ss;
            ss << in.rdbuf();
            try {
                g = ReflectionGroup::deserialize(ss.str(), t);
            } catch (const Error&) {
                g.reset();   // stale or damaged file: rebuild and overwrite
            }
        }
    }
    if (!g) {
        g = ReflectionGroup::build(t, limits);
        if (!file.empty()) {
            std::filesystem::create_directories(file.parent_path());
            std::filesystem::path tmp = file;
            tmp += ".tmp";
            {
                std::ofstream out(tmp, std::ios::binary);
                std::string data = g->serialize();
                out.write(data.data(), static_cast<std::streamsize>(data.size()));
            }
            std::filesystem::rename(tmp, file);
        }
    }
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    return g_groups.emplace(name, g).first->second;
}

// ---------------------------------------------------------------- NC(W)

NCPtr build_nc(const RootSystemType& t, const Limits& limits)
{
    std::string name = t.to_string();
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = g_nc.find(name);
        if (it != g_nc.end()) return it->second;
    }
    GroupPtr g = enumerate_group(t, limits);
    auto nc = std::make_shared<NCPoset>();
    nc->group = g;
    ElemId c = g->coxeter_element();
    for (size_t w = 0; w < g->order(); ++w)
        if (g->abs_leq(static_cast<ElemId>(w), c)) nc->elems.push_back(static_cast<ElemId>(w));
    std::stable_sort(nc->elems.begin(), nc->elems.end(),
                     [&](ElemId a, ElemId b) { return g->abs_length(a) < g->abs_length(b); });
    unsigned long long n = nc->elems.size();
    if (n > kDensePosetLimit) throw BudgetExceeded("NC poset " + name, n, kDensePosetLimit);
    nc->index_of.assign(g->order(), -1);
    std::vector<int> ranks;
    for (size_t i = 0; i < n; ++i) {
        nc->index_of[nc->elems[i]] = static_cast<int>(i);
        ranks.push_back(g->abs_length(nc->elems[i]));
    }
    const auto& el = nc->elems;
    nc->poset = Poset(ranks, [&](size_t a, size_t b) { return g->abs_leq(el[a], el[b]); });
    if (nc->elems.front() != g->identity() || nc->elems.back() != c) throw Error("NC poset is not bounded");
    if (nc->poset.comparable_pairs() > limits.pair_cap)
        throw BudgetExceeded("NC poset " + name + " comparable pairs", nc->poset.comparable_pairs(), limits.pair_cap);
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    return g_nc.emplace(name, nc).first->second;
}

UPoly char_poly_of(const NCPoset& nc)
{
    std::vector<long long> mu = nc.poset.mobius_to(nc.top());
    UPoly p;
    for (size_t u = 0; u < nc.size(); ++u)
        if (mu[u]) p += UPoly::monomial(Rational(static_cast<long>(mu[u])), nc.poset.rank(u));
    return p;
}

UPoly char_poly(const RootSystemType& t, const Limits& limits)
{
    UPoly p(1);
    for (const auto& f : t.factors()) p *= char_poly_of(*build_nc(RootSystemType({f}), limits));
    return p;
}

// ---------------------------------------------------------------- decomposition numbers

unsigned long long DecompositionTable::get(const std::vector<RootSystemType>& tuple) const
{
    auto it = counts.find(tuple);
    return it == counts.end() ? 0 : it->second;
}

std::map<std::vector<RootSystemType>, unsigned long long> DecompositionTable::symmetric() const
{
    std::map<std::vector<RootSystemType>, unsigned long long> out;
    for (const auto& [k, v] : counts) {
        auto s = k;
        std::sort(s.begin(), s.end());
        auto [it, inserted] = out.emplace(s, v);
        if (!inserted && it->second != v) throw Error("decomposition numbers not symmetric");
    }
    return out;
}

bool DecompositionTable::symmetric_under_permutation() const
{
    for (const auto& [k, v] : counts) {
        auto p = k;
        std::sort(p.begin(), p.end());
        do {
            if (get(p) != v) return false;
        } while (std::next_permutation(p.begin(), p.end()));
    }
    return true;
}

bool DecompositionTable::closed_under_completion() const
{
    int n = type.rank();
    std::map<std::vector<RootSystemType>, unsigned long long> completed;
    for (const auto& [k, v] : counts) {
        if (k.empty()) continue;
        int total = 0;
        for (const auto& t : k) total += t.rank();
        if (total != n) continue;
        std::vector<RootSystemType> prefix(k.begin(), k.end() - 1);
        completed[prefix] += v;
    }
    for (const auto& [k, v] : counts) {
        int total = 0;
        for (const auto& t : k) total += t.rank();
        if (total >= n || static_cast<int>(k.size()) >= max_d) continue;
        auto it = completed.find(k);
        if ((it == completed.end() ? 0 : it->second) != v) return false;
    }
    for (const auto& [k, v] : completed)
        if (get(k) != v) return false;
    return true;
}

DecompositionTable decomposition_numbers(const RootSystemType& t, int max_d, const Limits& limits)
{
    if (max_d > t.rank()) throw Error("decomposition_numbers: max_d exceeds rank");
    NCPtr nc = build_nc(t, limits);
    const ReflectionGroup& g = *nc->group;
    const Poset& P = nc->poset;

    std::vector<RootSystemType> interned;
    std::map<RootSystemType, int> ids;
    std::unordered_map<ElemId, int> type_id;
    auto type_of = [&](ElemId w) {
        auto it = type_id.find(w);
        if (it != type_id.end()) return it->second;
        RootSystemType pt = g.parabolic_type(w);
        auto [jt, inserted] = ids.emplace(pt, static_cast<int>(interned.size()));
        if (inserted) interned.push_back(pt);
        type_id[w] = jt->second;
        return jt->second;
    };

    std::map<std::vector<int>, unsigned long long> raw;
    std::vector<int> path;
    std::function<void(size_t)> walk = [&](size_t u) {
        ++raw[path];
        if (static_cast<int>(path.size()) == max_d) return;
        ElemId ue = nc->elems[u];
        const Bits& up = P.up(u);
        for (size_t v = u + 1; v < P.size(); ++v) {
            if (!up.test(v)) continue;
            ElemId ci = g.multiply(g.inverse(ue), nc->elems[v]);
            path.push_back(type_of(ci));
            walk(v);
            path.pop_back();
        }
    };
    walk(nc->bottom());

    DecompositionTable table;
    table.type = t;
    table.max_d = max_d;
    for (const auto& [k, v] : raw) {
        std::vector<RootSystemType> key;
        for (int id : k) key.push_back(interned[id]);
        table.counts[key] = v;
    }
    return table;
}

// ---------------------------------------------------------------- chains

Integer count_rank_chains(const Poset& p, const std::vector<int>& jumps)
{
    if (jumps.empty()) throw Error("count_rank_chains: empty jump vector");
    for (int s : jumps)
        if (s < 0) throw Error("count_rank_chains: negative jump");
    std::vector<Integer> f;
    int level = 0;
    for (size_t i = 0; i + 1 < jumps.size(); ++i) {
        level += jumps[i];
        std::vector<Integer> g(p.size(), 0);
        for (size_t v = 0; v < p.size(); ++v) {
            if (p.rank(v) != level) continue;
            if (f.empty()) {
                g[v] = 1;
                continue;
            }
            const auto& w = p.down(v).words();
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

namespace {

Integer as_integer(const Rational& q)
{
    if (!is_integer(q)) throw Error("chain formula produced a non-integer");
    return q.get_num();
}

void check_jumps(int n, const std::vector<int>& s)
{
    int total = 0;
    for (int x : s) {
        if (x < 0) throw Error("negative rank jump");
        total += x;
    }
    if (s.empty() || total != n) throw Error("rank jumps must sum to the rank");
}

} // namespace

Integer chains_type_a(int n, long m, const std::vector<int>& s)
{
    check_jumps(n, s);
    Rational r = 1;
    for (size_t i = 0; i + 1 < s.size(); ++i) r *= binom(m * (n + 1), s[i]);
    r *= rat(1, n + 1) * binom(n + 1, s.back());
    return as_integer(r);
}

Integer chains_type_b(int n, long m, const std::vector<int>& s)
{
    check_jumps(n, s);
    Rational r = 1;
    for (size_t i = 0; i + 1 < s.size(); ++i) r *= binom(m * n, s[i]);
    r *= binom(n, s.back());
    return as_integer(r);
}

Integer chains_type_d(int n, const std::vector<int>& s)
{
    check_jumps(n, s);
    Rational prod = 1;
    for (int x : s) prod *= binom(n - 1, x);
    Rational r = 2 * prod;
    for (size_t i = 0; i < s.size(); ++i) {
        Rational term = binom(n - 2, s[i] - 2);
        for (size_t j = 0; j < s.size(); ++j)
            if (j != i) term *= binom(n - 1, s[j]);
        r += term;
    }
    return as_integer(r);
}

} // namespace catwb
