// Acceptance run: one line per criterion with wall time.
#include "catwb/errors.hpp"
#include "catwb/fmverify.hpp"
#include "catwb/ftriangle.hpp"
#include "catwb/suites.hpp"
#include "catwb/wgroup.hpp"
#include "golden.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace catwb;

namespace {

struct Outcome {
    bool passed = true;
    std::string summary;
    std::vector<std::string> failures;
};

Outcome from_checks(const std::vector<CheckResult>& rs)
{
    Outcome o;
    long ok = 0, gating = 0;
    for (const auto& r : rs) {
        if (!r.gating) continue;
        ++gating;
        if (r.passed)
            ++ok;
        else
            o.failures.push_back(r.suite + " " + r.name + (r.detail.empty() ? "" : " (" + r.detail + ")"));
    }
    o.passed = ok == gating;
    o.summary = std::to_string(ok) + "/" + std::to_string(gating) + " checks";
    return o;
}

// Tally of named boolean checks; exceptions count as failures.
class Tally {
public:
    void check(const std::string& name, const std::function<bool()>& f)
    {
        ++total_;
        try {
            if (f()) {
                ++ok_;
                return;
            }
            o_.failures.push_back(name);
        } catch (const std::exception& e) {
            o_.failures.push_back(name + " (" + e.what() + ")");
        }
    }
    Outcome done()
    {
        o_.passed = ok_ == total_;
        o_.summary = std::to_string(ok_) + "/" + std::to_string(total_) + " checks";
        return o_;
    }

private:
    long ok_ = 0, total_ = 0;
    Outcome o_;
};

RootSystemType T(const std::string& s) { return RootSystemType::parse(s); }

UPoly as_upoly_y(const MPoly& p)
{
    UPoly r;
    for (const auto& [k, c] : p.terms()) {
        if (k.first != 0 || !c.is_constant()) throw Error("golden characteristic polynomial is not in y alone");
        r += UPoly::monomial(c.coeff(0), k.second);
    }
    return r;
}

Outcome golden_f_triangles()
{
    Tally t;
    for (auto [type, file] : std::vector<std::pair<std::string, std::string>>{{"H3", "f_h3.tex"},
                                                                               {"H4", "f_h4.tex"},
                                                                               {"F4", "f_f4.tex"},
                                                                               {"E6", "f_e6.tex"},
                                                                               {"E7", "f_e7.tex"},
                                                                               {"E8", "f_e8.tex"}})
        t.check(type, [&] { return f_closed(T(type)).poly == golden_poly(file); });
    for (int a = 3; a <= 10; ++a)
        t.check("I2(" + std::to_string(a) + ")",
                [&] { return f_closed(RootSystemType::dihedral(a)).poly == golden_poly("f_i2a.tex", {{'a', a}}); });
    return t.done();
}

Outcome char_polys(const Limits& limits)
{
    Tally t;
    for (const auto& row : golden_rows("charpoly.txt")) {
        if (row[0] == "I2(a)") {
            for (int a = 2; a <= 10; ++a)
                t.check("I2(" + std::to_string(a) + ")", [&] {
                    return char_poly(RootSystemType::dihedral(a), limits) == as_upoly_y(parse_mpoly(row[1], {{'a', a}}));
                });
            continue;
        }
        t.check(row[0], [&] {
            UPoly p = char_poly(T(row[0]), limits);
            return p == as_upoly_y(parse_mpoly(row[1])) && p.eval(1) == 0;
        });
    }
    return t.done();
}

Outcome decomposition_tables(const Limits& limits)
{
    Tally t;
    auto run = [&](const RootSystemType& type, const std::string& label, int a) {
        DecompositionTable tab = decomposition_numbers(type, type.rank(), limits);
        std::string name = type.to_string();
        t.check(name + " symmetry", [&] { return tab.symmetric_under_permutation(); });
        t.check(name + " closure", [&] { return tab.closed_under_completion(); });
        std::set<std::vector<RootSystemType>> listed;
        for (const auto& row : golden_rows("decomposition.txt")) {
            if (row[0] != label) continue;
            auto key = golden_tuple(golden_subst_a(row[1], a));
            unsigned long long expect = row[2] == "a" ? static_cast<unsigned long long>(a) : std::stoull(row[2]);
            t.check(name + " " + row[1], [&] { return tab.get(key) == expect; });
            std::sort(key.begin(), key.end());
            listed.insert(key);
        }
        t.check(name + " no unlisted full-rank tuples", [&] {
            for (const auto& [k, v] : tab.symmetric()) {
                int total = 0;
                for (const auto& f : k) total += f.rank();
                if (!k.empty() && total == type.rank() && v != 0 && !listed.count(k)) return false;
            }
            return true;
        });
    };
    for (int a = 3; a <= 10; ++a) run(RootSystemType::dihedral(a), "I2(a)", a);
    for (const char* s : {"H3", "H4", "F4", "E6"}) run(T(s), s, 0);
    return t.done();
}

Outcome fm_formula(const Limits& limits)
{
    SuiteOptions so;
    so.limits = limits;
    Outcome o = from_checks(suite_fm_formula(so));
    Tally t;
    for (auto [type, file] : std::vector<std::pair<std::string, std::string>>{
             {"H3", "fm_h3.tex"}, {"H4", "fm_h4.tex"}, {"F4", "fm_f4.tex"}, {"E6", "fm_e6.tex"}})
        t.check("golden " + type, [&] { return fm_lhs(T(type)) == golden_poly(file); });
    for (int a = 3; a <= 10; ++a)
        t.check("golden I2(" + std::to_string(a) + ")",
                [&] { return fm_lhs(RootSystemType::dihedral(a)) == golden_poly("fm_i2a.tex", {{'a', a}}); });
    Outcome g = t.done();
    o.passed = o.passed && g.passed;
    o.summary += " + golden " + g.summary;
    o.failures.insert(o.failures.end(), g.failures.begin(), g.failures.end());
    return o;
}

Outcome open_dn(const SuiteOptions& so)
{
    Outcome o;
    std::string s;
    for (const auto& r : suite_open_dn(so)) s += (s.empty() ? "" : "; ") + r.name + ": " + r.detail;
    o.summary = "reported, not gating: " + s;
    return o;
}

} // namespace

int main(int argc, char** argv)
{
    // --expect-fail N[,N...] lists criteria whose failure is recorded as a known discrepancy;
    // the exit status is 0 only when the failing set is exactly that list.
    std::set<int> expected;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--expect-fail") {
            std::stringstream ss(argv[i + 1]);
            std::string item;
            while (std::getline(ss, item, ',')) expected.insert(std::stoi(item));
        }

    SuiteOptions so;
    const Limits& lim = so.limits;
    struct Criterion {
        int id;
        std::string title;
        std::function<Outcome()> run;
        bool gating;
    };
    std::vector<Criterion> criteria{
        {1, "recurrence suite", [&] { return from_checks(suite_recurrence(so)); }, true},
        {2, "golden F-triangles", [&] { return golden_f_triangles(); }, true},
        {3, "row sums", [&] { return from_checks(suite_row_sums(so)); }, true},
        {4, "characteristic polynomials", [&] { return char_polys(lim); }, true},
        {5, "decomposition tables", [&] { return decomposition_tables(lim); }, true},
        {6, "F=M formula mode", [&] { return fm_formula(lim); }, true},
        {7, "F=M closed classical", [&] { return from_checks(suite_fm_closed(so)); }, true},
        {8, "F=M brute grid", [&] { return from_checks(suite_fm_brute(so)); }, true},
        {9, "chain enumeration", [&] { return from_checks(suite_chains(so)); }, true},
        {10, "dual F-triangle", [&] { return from_checks(suite_dual(so)); }, true},
        {11, "Carlitz identities", [&] { return from_checks(suite_carlitz(so)); }, true},
        {12, "oracle cross-checks", [&] { return from_checks(suite_oracles(so)); }, true},
        {13, "open type D case", [&] { return open_dn(so); }, false},
    };

    std::set<int> failed;
    double total = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.passed = false;
            o.summary = std::string("aborted: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        total += secs;
        const char* verdict = !c.gating ? "REPORT" : o.passed ? "PASS" : "FAIL";
        std::printf("criterion %2d %-28s %-6s %8.3f s  %s\n", c.id, c.title.c_str(), verdict, secs, o.summary.c_str());
        for (const auto& f : o.failures) std::printf("    failed: %s\n", f.c_str());
        if (c.gating && !o.passed) failed.insert(c.id);
    }
    std::printf("total %.3f s, %zu of 12 gating criteria failed\n", total, failed.size());
    if (!expected.empty()) {
        bool match = failed == expected;
        std::printf("expected failures %s\n", match ? "match" : "do NOT match");
        return match ? 0 : 1;
    }
    return failed.empty() ? 0 : 1;
}
