#include "catwb/suites.hpp"
#include "catwb/errors.hpp"
#include "catwb/fmverify.hpp"
#include "catwb/ftriangle.hpp"
#include "catwb/identities.hpp"
#include "catwb/ncposet.hpp"

#include <random>

namespace catwb {

namespace {

RootSystemType T(const std::string& s) { return RootSystemType::parse(s); }

class Collector {
public:
    Collector(std::string suite, const CheckCallback& cb) : suite_(std::move(suite)), cb_(cb) {}

    void add(std::string name, bool passed, std::string detail = {}, json report = nullptr, bool gating = true)
    {
        CheckResult r{suite_, std::move(name), passed, gating, std::move(detail), std::move(report)};
        if (cb_) cb_(r);
        out_.push_back(std::move(r));
    }
    void add(const VerificationReport& r, std::string name = {})
    {
        if (name.empty()) name = r.type + (r.m ? " m=" + std::to_string(*r.m) : "");
        add(std::move(name), r.equal, {}, r.to_json(), !r.empirical);
    }
    // Budget failures count as failed checks with the message kept.
    template <class F>
    void guard(const std::string& name, F f)
    {
        try {
            f();
        } catch (const std::exception& e) {
            add(name, false, e.what());
        }
    }
    std::vector<CheckResult> take() { return std::move(out_); }

private:
    std::string suite_;
    const CheckCallback& cb_;
    std::vector<CheckResult> out_;
};

std::vector<RootSystemType> range(Family f, int lo, int hi)
{
    std::vector<RootSystemType> out;
    for (int n = lo; n <= hi; ++n) out.emplace_back(f, n);
    return out;
}

std::vector<RootSystemType> dihedrals(int lo, int hi)
{
    std::vector<RootSystemType> out;
    for (int a = lo; a <= hi; ++a) out.push_back(RootSystemType::dihedral(a));
    return out;
}

std::vector<RootSystemType> brute_grid()
{
    std::vector<RootSystemType> out;
    for (const char* s : {"A2", "A3", "A4", "B2", "B3", "D4"}) out.push_back(T(s));
    for (auto& t : dihedrals(3, 6)) out.push_back(t);
    out.push_back(T("H3"));
    return out;
}

std::string label(const RootSystemType& t) { return t.to_string(); }

} // namespace

json CheckResult::to_json() const
{
    return {{"suite", suite}, {"name", name}, {"passed", passed}, {"gating", gating}, {"detail", detail},
            {"report", report}};
}

std::vector<std::vector<int>> jump_vectors(int n)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left) -> void {
        if (!cur.empty() && left == 0) out.push_back(cur);
        if (static_cast<int>(cur.size()) == n + 1) return;
        for (int s = 0; s <= left; ++s) {
            cur.push_back(s);
            self(self, left - s);
            cur.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

std::vector<CheckResult> suite_recurrence(const SuiteOptions&, const CheckCallback& cb)
{
    Collector c("recurrence", cb);
    std::vector<RootSystemType> types;
    for (auto& v : {range(Family::A, 1, 8), range(Family::B, 2, 8), range(Family::D, 4, 8), dihedrals(3, 10)})
        types.insert(types.end(), v.begin(), v.end());
    for (const char* s : {"H3", "H4", "F4", "E6", "E7", "E8"}) types.push_back(T(s));
    for (const auto& t : types) c.guard(label(t), [&] { c.add(check_recurrence(t)); });
    return c.take();
}

std::vector<CheckResult> suite_row_sums(const SuiteOptions&, const CheckCallback& cb)
{
    Collector c("rowsums", cb);
    std::vector<RootSystemType> types;
    for (auto& v : {range(Family::A, 1, 8), range(Family::B, 2, 8), range(Family::D, 4, 8)})
        types.insert(types.end(), v.begin(), v.end());
    for (const auto& t : types)
        c.guard(label(t), [&] {
            bool ok = true;
            for (int k = 0; k <= t.rank(); ++k) ok = ok && row_sum(t, k) == row_sum_closed(t, k);
            c.add(label(t), ok, "k = 0.." + std::to_string(t.rank()));
        });
    return c.take();
}

std::vector<CheckResult> suite_fm_closed(const SuiteOptions&, const CheckCallback& cb)
{
    Collector c("fm-closed", cb);
    std::vector<RootSystemType> types;
    for (auto& v : {range(Family::A, 1, 6), range(Family::B, 2, 6), range(Family::D, 4, 6)})
        types.insert(types.end(), v.begin(), v.end());
    for (const auto& t : types) c.guard(label(t), [&] { c.add(verify_fm(t, FmMode::Closed)); });
    return c.take();
}

std::vector<CheckResult> suite_fm_formula(const SuiteOptions& o, const CheckCallback& cb)
{
    Collector c("fm-formula", cb);
    std::vector<RootSystemType> types = dihedrals(3, 8);
    for (const char* s : {"H3", "H4", "F4", "E6"}) types.push_back(T(s));
    for (const auto& t : types) c.guard(label(t), [&] { c.add(verify_fm(t, FmMode::Formula, std::nullopt, o.limits)); });
    return c.take();
}

std::vector<CheckResult> suite_fm_brute(const SuiteOptions& o, const CheckCallback& cb)
{
    Collector c("fm-brute", cb);
    for (const auto& t : brute_grid())
        for (long m = 1; m <= 3; ++m) {
            std::string name = label(t) + " m=" + std::to_string(m);
            c.guard(name, [&] { c.add(verify_fm(t, FmMode::Brute, m, o.limits)); });
        }
    return c.take();
}

std::vector<CheckResult> suite_chains(const SuiteOptions& o, const CheckCallback& cb)
{
    Collector c("chains", cb);
    auto run = [&](const RootSystemType& t, long m, auto closed) {
        std::string name = label(t) + " m=" + std::to_string(m);
        c.guard(name, [&] {
            auto jv = jump_vectors(t.rank());
            long bad = 0;
            json misses = json::array();
            for (const auto& s : jv)
                if (count_dual_chains(t, m, s, o.limits) != closed(s)) {
                    ++bad;
                    misses.push_back(s);
                }
            c.add(name, bad == 0, std::to_string(jv.size() - bad) + "/" + std::to_string(jv.size()) + " jump vectors",
                  bad ? json(misses) : json(nullptr));
        });
    };
    for (int n = 1; n <= 4; ++n)
        for (long m = 1; m <= 3; ++m)
            run(RootSystemType(Family::A, n), m, [&](const std::vector<int>& s) { return chains_type_a(n, m, s); });
    for (int n = 2; n <= 3; ++n)
        for (long m = 1; m <= 3; ++m)
            run(RootSystemType(Family::B, n), m, [&](const std::vector<int>& s) { return chains_type_b(n, m, s); });
    for (int n = 4; n <= 5; ++n)
        run(RootSystemType(Family::D, n), 1, [&](const std::vector<int>& s) { return chains_type_d(n, s); });
    return c.take();
}

std::vector<CheckResult> suite_dual(const SuiteOptions& o, const CheckCallback& cb)
{
    Collector c("dual", cb);
    std::vector<RootSystemType> sym;
    for (auto& v : {range(Family::A, 1, 6), range(Family::B, 2, 5)}) sym.insert(sym.end(), v.begin(), v.end());
    for (const auto& t : sym) c.guard(label(t), [&] { c.add(verify_dual(t)); });
    std::vector<RootSystemType> census{T("D4")};
    for (auto& t : dihedrals(3, 6)) census.push_back(t);
    census.push_back(T("H3"));
    for (const auto& t : census)
        for (long m = 1; m <= 3; ++m) {
            std::string name = label(t) + " m=" + std::to_string(m);
            c.guard(name, [&] { c.add(verify_dual(t, m, o.limits)); });
        }
    return c.take();
}

std::vector<CheckResult> suite_carlitz(const SuiteOptions& o, const CheckCallback& cb)
{
    Collector c("carlitz", cb);
    auto add = [&](const std::string& name, const SuiteResult& r) {
        c.add(name, r.ok(),
              std::to_string(r.passed) + "/" + std::to_string(r.total) + " equal, " + std::to_string(r.skipped) +
                  " singular",
              r.failures.empty() ? json(nullptr) : json(r.failures));
    };
    for (long m = 1; m <= 3; ++m) add("named m=" + std::to_string(m), run_carlitz_cases(named_carlitz_cases(m)));
    add("random seed=" + std::to_string(o.seed), carlitz_random_suite(o.seed, 200));
    return c.take();
}

std::vector<CheckResult> suite_oracles(const SuiteOptions& o, const CheckCallback& cb)
{
    Collector c("oracles", cb);
    std::vector<RootSystemType> groups;
    for (auto& v : {range(Family::A, 1, 6), range(Family::B, 2, 5), range(Family::D, 4, 5), dihedrals(3, 10)})
        groups.insert(groups.end(), v.begin(), v.end());
    for (const char* s : {"H3", "F4", "H4", "E6"}) groups.push_back(T(s));
    std::mt19937_64 rng(o.seed);
    for (const auto& t : groups) {
        std::string name = "abs_length " + label(t);
        c.guard(name, [&] {
            GroupPtr g = enumerate_group(t, o.limits);
            std::vector<int> bfs = g->abs_length_bfs();
            bool full = g->order() <= 2000;
            size_t samples = full ? g->order() : 500;
            bool ok = true;
            for (size_t i = 0; i < samples; ++i) {
                ElemId w = full ? static_cast<ElemId>(i) : static_cast<ElemId>(rng() % g->order());
                ok = ok && bfs[w] == g->abs_length_fixed_space(w) && bfs[w] == g->abs_length(w);
            }
            c.add(name, ok, full ? "full sweep of " + std::to_string(samples) : "500 random elements");
        });
    }
    for (const auto& t : brute_grid())
        for (long m = 1; m <= 3; ++m) {
            std::string name = "census " + label(t) + " m=" + std::to_string(m);
            c.guard(name, [&] {
                size_t size = build_ncm(t, m, o.limits)->size();
                Rational top = row_sum(t, t.rank()).eval(m);
                c.add(name, top == Rational(static_cast<unsigned long>(size)),
                      std::to_string(size) + " elements, row sum " + to_display(top));
            });
        }
    return c.take();
}

std::vector<CheckResult> suite_open_dn(const SuiteOptions& o, const CheckCallback& cb)
{
    Collector c("open-dn", cb);
    for (long m = 2; m <= 3; ++m) {
        std::string name = "D4 m=" + std::to_string(m);
        try {
            VerificationReport r = verify_fm_dn_general(4, m, o.limits);
            c.add(name, r.equal, r.equal ? "empirically equal" : "empirically unequal", r.to_json(), false);
        } catch (const std::exception& e) {
            c.add(name, false, e.what(), nullptr, false);
        }
    }
    return c.take();
}

std::vector<CheckResult> run_suite(const std::string& name, const SuiteOptions& o, const CheckCallback& cb)
{
    std::vector<CheckResult> out;
    auto append = [&](std::vector<CheckResult> v) { out.insert(out.end(), v.begin(), v.end()); };
    bool all = name == "all";
    if (all || name == "recurrence") append(suite_recurrence(o, cb));
    if (all) append(suite_row_sums(o, cb));
    if (all || name == "fm") {
        append(suite_fm_closed(o, cb));
        append(suite_fm_formula(o, cb));
        append(suite_fm_brute(o, cb));
    }
    if (all || name == "chains") append(suite_chains(o, cb));
    if (all || name == "dual") append(suite_dual(o, cb));
    if (all || name == "carlitz") append(suite_carlitz(o, cb));
    if (all) {
        append(suite_oracles(o, cb));
        append(suite_open_dn(o, cb));
    }
    if (out.empty() && !all) throw ParseError("unknown suite '" + name + "'");
    return out;
}

} // namespace catwb
