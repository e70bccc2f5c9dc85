#include "catwb/errors.hpp"
#include "catwb/fmverify.hpp"
#include "catwb/ftriangle.hpp"
#include "catwb/identities.hpp"
#include "catwb/ncposet.hpp"
#include "catwb/serialize.hpp"
#include "catwb/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

using namespace catwb;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kParse = 2, kBudget = 3, kOther = 4 };

struct Config {
    std::string format = "latex";
    std::string cache_dir;
    unsigned long long group_cap = 100000;
    unsigned long long poset_cap = 2000000;
    uint64_t seed = 7;

    Limits limits() const { return {group_cap, poset_cap, cache_dir}; }
};

std::string render(const MPoly& p, const std::string& format, const std::string& kind, const std::string& type,
                   std::optional<long> m)
{
    if (format == "csv") return mpoly_to_csv(p);
    if (format == "json") {
        json j = {{"kind", kind}, {"type", type}, {"m", m ? json(*m) : json(nullptr)}, {"poly", mpoly_to_json(p)}};
        return j.dump(2) + "\n";
    }
    return mpoly_to_latex(p) + "\n";
}

std::vector<int> parse_jumps(const std::string& s)
{
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size() || v < 0) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw ParseError("bad jump vector '" + s + "'");
        }
    }
    if (out.empty()) throw ParseError("empty jump vector");
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact F-triangles, M-triangles and non-crossing partition posets of finite reflection groups"};
    app.require_subcommand(1);
    Config cfg;
    app.add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "latex"}))
        ->envname("CATWB_FORMAT");
    app.add_option("--cache-dir", cfg.cache_dir, "Directory for cached group tables")->envname("CATWB_CACHE_DIR");
    app.add_option("--group-cap", cfg.group_cap, "Largest group order to enumerate")
        ->check(CLI::PositiveNumber)
        ->envname("CATWB_GROUP_CAP");
    app.add_option("--poset-cap", cfg.poset_cap, "Largest number of comparable pairs in a poset")
        ->check(CLI::PositiveNumber)
        ->envname("CATWB_POSET_CAP");
    app.add_option("--seed", cfg.seed, "Seed for randomized checks")->envname("CATWB_SEED");

    std::string type_str;
    std::optional<long> m;
    std::string mode = "formula";
    std::string suite = "all";
    std::string report_path;
    std::string out_path;
    std::string jumps_str;

    auto* ft = app.add_subcommand("ftriangle", "F-triangle, symbolic in m or evaluated");
    ft->add_option("type", type_str, "Root system type, e.g. A3, B2xA1, I2(7)")->required();
    ft->add_option("--m", m, "Concrete m")->check(CLI::NonNegativeNumber);

    auto* mt = app.add_subcommand("mtriangle", "M-triangle from the decomposition formula or by brute force");
    mt->add_option("type", type_str)->required();
    mt->add_option("--m", m)->check(CLI::PositiveNumber);
    mt->add_option("--mode", mode)->check(CLI::IsMember({"formula", "brute"}));

    auto* vf = app.add_subcommand("verify", "Run a verification suite");
    vf->add_option("--suite", suite)->check(CLI::IsMember({"fm", "recurrence", "chains", "dual", "carlitz", "all"}));
    vf->add_option("--report", report_path, "Write the JSON report here");

    auto* ex = app.add_subcommand("export-poset", "Write NC^m as JSON (ranks, factors, Hasse edges)");
    ex->add_option("type", type_str)->required();
    ex->add_option("--m", m)->check(CLI::PositiveNumber);
    ex->add_option("--out", out_path, "Output file; stdout when omitted");

    auto* ch = app.add_subcommand("chains", "Rank-jump chain counts in the dual of NC^m");
    ch->add_option("type", type_str)->required();
    ch->add_option("--m", m)->check(CLI::PositiveNumber);
    ch->add_option("--jumps", jumps_str, "Comma-separated rank jumps summing to the rank")->required();

    auto* du = app.add_subcommand("dual", "Dual F-triangle check");
    du->add_option("type", type_str)->required();
    du->add_option("--m", m)->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParse;
    }

    try {
        Limits limits = cfg.limits();
        if (*ft) {
            RootSystemType t = RootSystemType::parse(type_str);
            MPoly p = f_closed(t).poly;
            if (m) p = poly_eval_m(p, *m);
            std::cout << render(p, cfg.format, "ftriangle", t.to_string(), m);
        } else if (*mt) {
            RootSystemType t = RootSystemType::parse(type_str);
            MPoly p;
            if (mode == "brute") {
                if (!m) throw ParseError("brute mode needs --m");
                p = m_triangle_bruteforce(t, *m, limits);
            } else {
                p = m_triangle_formula(t, limits);
                if (m) p = poly_eval_m(p, *m);
            }
            std::cout << render(p, cfg.format, "mtriangle", t.to_string(), m);
        } else if (*vf) {
            SuiteOptions opts;
            opts.limits = limits;
            opts.seed = cfg.seed;
            std::vector<CheckResult> results = run_suite(suite, opts, [](const CheckResult& r) {
                std::cout << (!r.gating ? "INFO " : r.passed ? "PASS " : "FAIL ") << r.suite << " " << r.name
                          << (r.detail.empty() ? "" : " (" + r.detail + ")") << std::endl;
            });
            long failed = 0;
            json rep = json::array();
            for (const auto& r : results) {
                if (r.gating && !r.passed) ++failed;
                rep.push_back(r.to_json());
            }
            long gating = 0;
            for (const auto& r : results) gating += r.gating;
            std::cout << gating - failed << "/" << gating << " gating checks passed" << std::endl;
            if (!report_path.empty()) {
                std::ofstream out(report_path);
                if (!out) throw Error("cannot write " + report_path);
                out << rep.dump(2) << "\n";
            }
            return failed ? kVerifyFailed : kOk;
        } else if (*ex) {
            RootSystemType t = RootSystemType::parse(type_str);
            json j = export_poset(*build_ncm(t, m.value_or(1), limits));
            if (out_path.empty()) {
                std::cout << j.dump(2) << "\n";
            } else {
                std::ofstream out(out_path);
                if (!out) throw Error("cannot write " + out_path);
                out << j.dump(2) << "\n";
            }
        } else if (*ch) {
            RootSystemType t = RootSystemType::parse(type_str);
            std::vector<int> jumps = parse_jumps(jumps_str);
            long mv = m.value_or(1);
            int sum = 0;
            for (int s : jumps) sum += s;
            if (sum != t.rank()) throw ParseError("jumps must sum to the rank " + std::to_string(t.rank()));
            json j = {{"type", t.to_string()}, {"m", mv}, {"jumps", jumps}};
            Integer brute = count_dual_chains(t, mv, jumps, limits);
            j["brute"] = brute.get_str();
            std::optional<Integer> closed;
            if (t.irreducible()) {
                const Irreducible& f = t.single();
                if (f.family == Family::A) closed = chains_type_a(f.n, mv, jumps);
                if (f.family == Family::B) closed = chains_type_b(f.n, mv, jumps);
                if (f.family == Family::D && f.n >= 4 && mv == 1) closed = chains_type_d(f.n, jumps);
            }
            j["closed"] = closed ? json(closed->get_str()) : json(nullptr);
            if (cfg.format == "json")
                std::cout << j.dump(2) << "\n";
            else if (cfg.format == "csv")
                std::cout << "brute,closed\n" << brute.get_str() << "," << (closed ? closed->get_str() : "") << "\n";
            else
                std::cout << brute.get_str() << (closed ? " (closed form " + closed->get_str() + ")" : "") << "\n";
            if (closed && *closed != brute) return kVerifyFailed;
        } else if (*du) {
            RootSystemType t = RootSystemType::parse(type_str);
            VerificationReport r = m ? verify_dual(t, *m, limits) : verify_dual(t);
            if (cfg.format == "json")
                std::cout << r.to_json().dump(2) << "\n";
            else
                std::cout << render(r.lhs, cfg.format, "dual", t.to_string(), m)
                          << (r.equal ? "equal\n" : "NOT equal\n");
            return r.equal ? kOk : kVerifyFailed;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kBudget;
    } catch (const MissingTable& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kOther;
    }
    return kOk;
}
