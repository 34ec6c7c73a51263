// Command-line front end: Gelfand-Dickey tables and identity verification,
// the string-equation series oracle, and the (t0,t2) genus-expansion and
// divergence analysis. Exit codes: 0 all requested checks pass, 1 a check
// failed, 2 invalid configuration, 3 an antiderivative obstruction fired.

#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gdpoly/action.hpp"
#include "gdpoly/cache.hpp"
#include "gdpoly/diffpoly.hpp"
#include "gdpoly/gd_table.hpp"
#include "gdpoly/genus.hpp"
#include "gdpoly/series.hpp"
#include "gdpoly/string_oracle.hpp"
#include "gdpoly/verify.hpp"

namespace {

using namespace gdpoly;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadConfig = 2;
constexpr int kExitObstruction = 3;
constexpr int kCostGuardMaxN = 20;

struct Options {
    std::string cache_dir;
    std::string format = "text";
    std::uint64_t seed = 20240913;
    bool allow_large = false;
};

void require_format(const Options& opt, std::initializer_list<const char*> ok) {
    for (const char* f : ok)
        if (opt.format == f) return;
    std::string allowed;
    for (const char* f : ok) allowed += std::string(allowed.empty() ? "" : ", ") + f;
    throw CLI::ValidationError("--format must be one of: " + allowed);
}

// Computing R_n past this point gets combinatorially expensive; make the
// caller say so explicitly.
void cost_guard(const Options& opt, int needed_n) {
    if (needed_n > kCostGuardMaxN && !opt.allow_large)
        throw CLI::ValidationError(
            "computing R_n for n = " + std::to_string(needed_n) +
            " > " + std::to_string(kCostGuardMaxN) +
            " requires --allow-large");
}

GDTable load_table(const Options& opt, int max_n) {
    std::string warning;
    GDTable t = load_or_compute_gd_table(opt.cache_dir, max_n, &warning);
    if (!warning.empty()) std::cerr << "warning: " << warning << "\n";
    return t;
}

std::vector<int> parse_vars(const std::string& spec) {
    std::vector<int> active;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        if (item[0] == 't') item = item.substr(1);
        size_t pos = 0;
        int v;
        try {
            v = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw CLI::ValidationError("bad variable '" + item +
                                       "' in --vars (expected t0,t2,...)");
        }
        if (pos != item.size() || v < 0)
            throw CLI::ValidationError("bad variable '" + item + "' in --vars");
        if (v > 0) active.push_back(v);
    }
    return active;
}

Rational parse_radius(const std::string& s) {
    const auto dot = s.find('.');
    if (dot == std::string::npos) return Rational::parse(s);
    const std::string whole = s.substr(0, dot);
    const std::string frac = s.substr(dot + 1);
    if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos)
        throw CLI::ValidationError("bad radius '" + s + "'");
    Rational value = Rational::parse(whole.empty() ? "0" : whole);
    Rational scale(1);
    for (size_t i = 0; i < frac.size(); ++i) scale *= Rational(1, 10);
    const bool neg = !whole.empty() && whole[0] == '-';
    Rational fpart = Rational::parse(frac) * scale;
    return neg ? value - fpart : value + fpart;
}

int run_gd_table(const Options& opt, int max_n) {
    require_format(opt, {"text", "json", "latex"});
    cost_guard(opt, max_n);
    GDTable t = load_table(opt, max_n);
    if (opt.format == "json") {
        std::cout << t.to_json();
    } else if (opt.format == "latex") {
        std::cout << latex_table(t, max_n);
    } else {
        for (int n = 0; n <= max_n; ++n)
            std::cout << "R_" << n << " = " << t.R(n).to_text() << "\n";
        for (int n = 0; n <= max_n; ++n)
            std::cout << "T_" << n << " = " << t.T(n).to_text() << "\n";
    }
    return kExitPass;
}

int run_gd_verify(const Options& opt, int max_n, int cases) {
    require_format(opt, {"text"});
    cost_guard(opt, max_n + 1);
    GDTable t = load_table(opt, max_n);
    const VerifyReport rep = verify_identities(t, max_n);
    bool ok = rep.all_pass();
    for (const auto& c : rep.checks) {
        std::cout << "identity (" << c.family << ") n=" << c.n << ": "
                  << (c.pass ? "pass" : "FAIL " + c.detail) << "\n";
    }
    const auto suites = run_property_suites(opt.seed, cases);
    for (const auto& s : suites) {
        std::cout << "property " << s.name << ": " << s.cases << " cases, "
                  << s.failures << " failures (seed " << opt.seed << ")";
        if (!s.pass()) {
            std::cout << " first: " << s.first_failure;
            ok = false;
        }
        std::cout << "\n";
    }
    std::cout << (ok ? "all checks passed" : "CHECKS FAILED") << "\n";
    return ok ? kExitPass : kExitCheckFailed;
}

int run_gd_pkl(const Options& opt, int k, int l) {
    require_format(opt, {"text", "json", "latex"});
    cost_guard(opt, std::max(k, l));
    GDTable t = load_table(opt, std::max(k, l));
    const PklEntry e = compute_pkl(t, k, l);
    if (opt.format == "json") {
        nlohmann::json j{{"k", k},
                         {"l", l},
                         {"P", nlohmann::json::parse(e.P.to_json())}};
        std::cout << j.dump(2) << "\n";
    } else if (opt.format == "latex") {
        std::cout << "P_{" << k << "," << l << "} = " << e.P.to_latex() << "\n";
    } else {
        std::cout << "P_{" << k << "," << l << "} = " << e.P.to_text() << "\n";
    }
    return kExitPass;
}

int run_action(const Options& opt, int max_n) {
    require_format(opt, {"text", "latex"});
    cost_guard(opt, max_n);
    GDTable t = load_table(opt, std::max(max_n, 1));
    const ActionDensity d = lagrangian_expansion(t, max_n);
    if (opt.format == "latex")
        std::cout << "L = " << d.to_latex() << "\n";
    else
        std::cout << "L = " << d.to_text() << "\n";
    std::cout << "L0 (genus 0, all t = 0) = "
              << d.at_zero_times().genus_part(0).to_text() << "\n";
    return kExitPass;
}

int max_active(const std::vector<int>& active) {
    int m = 0;
    for (int k : active) m = std::max(m, k);
    return m;
}

int run_string_solve(const Options& opt, const std::string& vars, int degree,
                     int genus) {
    require_format(opt, {"text", "json"});
    const std::vector<int> active = parse_vars(vars);
    cost_guard(opt, max_active(active));
    GDTable t = load_table(opt, max_active(active));
    const StringSolution sol = solve_string(t, active, degree, genus);
    if (opt.format == "json") {
        nlohmann::json j{{"u", nlohmann::json::parse(sol.u.to_json())},
                         {"active", sol.active},
                         {"degree", sol.degree},
                         {"genus", sol.genus},
                         {"iterations", sol.iterations}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "u = " << sol.u.to_text() << "\n";
        std::cout << "iterations to fixed point: " << sol.iterations << "\n";
    }
    return kExitPass;
}

int finish_checks(const std::vector<SeriesCheck>& checks) {
    bool ok = true;
    for (const auto& c : checks) {
        std::cout << c.describe() << "\n";
        ok = ok && c.pass;
    }
    return ok ? kExitPass : kExitCheckFailed;
}

int run_string_check(const Options& opt, const std::string& vars, int degree,
                     int genus, const std::string& which, int kdv_n) {
    require_format(opt, {"text"});
    const std::vector<int> active = parse_vars(vars);
    const int table_n = std::max(max_active(active), kdv_n + 1);
    cost_guard(opt, table_n);
    GDTable t = load_table(opt, table_n);
    const StringSolution sol = solve_string(t, active, degree, genus);
    std::vector<SeriesCheck> checks;
    if (which == "kdv") {
        checks.push_back(check_kdv(t, sol, kdv_n));
    } else if (which == "puncture") {
        checks.push_back(check_puncture(t, sol));
    } else {
        checks.push_back(reconstruct_dF(t, sol).derivative_identity);
    }
    return finish_checks(checks);
}

int run_genus_ug(const Options& opt, int g, int degree) {
    require_format(opt, {"text", "latex", "json"});
    const GenusClosedForm f = closed_form_ug(g);
    if (opt.format == "latex") {
        std::cout << f.to_latex() << "\n";
    } else if (opt.format == "json") {
        nlohmann::json j{{"g", f.g},
                         {"c_g", f.c_g.str()},
                         {"t2_power", f.t2_power},
                         {"s_power_num", f.s_power_num},
                         {"s_power_den", 2},
                         {"extra_t2_inverse", f.extra_t2_inverse}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "u_" << g << " = " << f.to_text() << "\n";
        if (degree > 0)
            std::cout << "expansion to degree " << degree << ": "
                      << f.expand(degree).to_text() << "\n";
    }
    return kExitPass;
}

int run_genus_seq(const Options& opt, int n) {
    require_format(opt, {"text", "bfile", "json"});
    const ASequence seq(n);
    if (opt.format == "bfile") {
        std::cout << bfile(seq, n);
    } else if (opt.format == "json") {
        nlohmann::json a = nlohmann::json::array();
        for (int i = 1; i <= n; ++i) a.push_back(seq.a(i).get_str());
        std::cout << nlohmann::json{{"a0", "-1/2"}, {"a", a}}.dump(2) << "\n";
    } else {
        std::cout << "a_0 = -1/2\n";
        for (int i = 1; i <= n; ++i)
            std::cout << "a_" << i << " = " << seq.a(i).get_str() << "\n";
    }
    return kExitPass;
}

int run_genus_asymptotics(const Options& opt, int n) {
    require_format(opt, {"text", "csv"});
    const ASequence seq(n + 1);
    const AsymptoticsReport rep = asymptotics(seq, n + 1);
    if (opt.format == "csv") {
        std::cout << rep.csv();
        return kExitPass;
    }
    std::cout.precision(10);
    std::cout << "beta = " << rep.beta << ", rho target = " << rep.rho_target
              << "\n";
    std::cout << "r_" << n << " = " << rep.r[n]
              << " (|r/beta - 1| = " << std::abs(rep.r[n] / rep.beta - 1.0)
              << ")\n";
    std::cout << "|r_" << n + 1 << "/r_" << n << " - 1| = " << rep.ratio_gap(n)
              << "\n";
    std::cout << "rho_" << n << " = " << rep.rho[n] << " (ratio to target = "
              << rep.rho[n] / rep.rho_target << ")\n";
    return kExitPass;
}

int run_genus_diverge(const Options& opt, const std::string& radius,
                      int n_max) {
    require_format(opt, {"text", "json"});
    const Rational r = parse_radius(radius);
    try {
        const DivergenceVerdict v = divergence_certificate(r, n_max);
        if (opt.format == "json") {
            nlohmann::json j{{"radius", v.radius.str()},
                             {"witness_n", v.witness_n},
                             {"certificate", v.certificate}};
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "radius " << v.radius.str() << ": |c_n| R^{2n} > 1 at n = "
                      << v.witness_n << "\n"
                      << v.certificate << "\n";
        }
    } catch (const InsufficientDepth& e) {
        std::cerr << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Gelfand-Dickey polynomials, the 2D-gravity string equation, and the "
        "(t0,t2) genus expansion, in exact arithmetic"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--cache-dir", opt.cache_dir,
                   "directory for persistent tables")
        ->envname("GDPOLY_CACHE_DIR");
    app.add_option("--format", opt.format,
                   "output format: text|json|latex|bfile|csv");
    app.add_option("--seed", opt.seed, "seed for the randomized suites");
    app.add_flag("--allow-large", opt.allow_large,
                 "permit R_n computations past n = 20");

    std::function<int()> action;

    // gd
    auto* gd = app.add_subcommand("gd", "Gelfand-Dickey tables and identities");
    gd->require_subcommand(1);
    {
        static int max_n = 8;
        auto* c = gd->add_subcommand("table", "emit R_n and T_n");
        c->add_option("--max-n", max_n, "largest n")->check(CLI::NonNegativeNumber);
        c->callback([&opt, &action] {
            action = [&opt] { return run_gd_table(opt, max_n); };
        });
    }
    {
        static int max_n = 8;
        static int cases = 128;
        auto* c = gd->add_subcommand("verify", "verify the variational identities");
        c->add_option("--max-n", max_n, "largest n")->check(CLI::PositiveNumber);
        c->add_option("--cases", cases, "cases per randomized suite")
            ->check(CLI::PositiveNumber);
        c->callback([&opt, &action] {
            action = [&opt] { return run_gd_verify(opt, max_n, cases); };
        });
    }
    {
        static int k = 0, l = 1;
        auto* c = gd->add_subcommand("pkl", "emit P_{k,l}");
        c->add_option("--k", k, "left index")->check(CLI::NonNegativeNumber);
        c->add_option("--l", l, "right index")->check(CLI::NonNegativeNumber);
        c->callback([&opt, &action] {
            action = [&opt] { return run_gd_pkl(opt, k, l); };
        });
    }

    // action
    {
        static int max_n = 4;
        auto* c = app.add_subcommand("action", "Lagrangian density blocks");
        c->add_option("--max-n", max_n, "largest flow index")
            ->check(CLI::NonNegativeNumber);
        c->callback([&opt, &action] {
            action = [&opt] { return run_action(opt, max_n); };
        });
    }

    // string
    auto* str = app.add_subcommand("string", "string-equation series oracle");
    str->require_subcommand(1);
    static std::string vars = "t0,t2";
    static int degree = 6, genus = 2, kdv_n = 2;
    {
        auto* c = str->add_subcommand("solve", "solve the string equation");
        c->add_option("--vars", vars, "comma-separated variables, e.g. t0,t2");
        c->add_option("--degree", degree, "total t-degree")
            ->check(CLI::NonNegativeNumber);
        c->add_option("--genus", genus, "genus cap")->check(CLI::NonNegativeNumber);
        c->callback([&opt, &action] {
            action = [&opt] { return run_string_solve(opt, vars, degree, genus); };
        });
    }
    for (const auto& [name, which, help] :
         {std::tuple{"check-kdv", "kdv", "check a KdV flow on the solution"},
          std::tuple{"check-puncture", "puncture", "check the puncture equation"},
          std::tuple{"check-dF", "dF", "check the free-energy derivative identity"}}) {
        auto* c = str->add_subcommand(name, help);
        c->add_option("--vars", vars, "comma-separated variables");
        c->add_option("--degree", degree, "total t-degree")
            ->check(CLI::NonNegativeNumber);
        c->add_option("--genus", genus, "genus cap")->check(CLI::NonNegativeNumber);
        if (std::string(which) == "kdv")
            c->add_option("--n", kdv_n, "flow index")->check(CLI::NonNegativeNumber);
        const char* w = which;
        c->callback([&opt, &action, w] {
            action = [&opt, w] {
                return run_string_check(opt, vars, degree, genus, w, kdv_n);
            };
        });
    }

    // genus
    auto* gen = app.add_subcommand("genus", "(t0,t2) genus expansion analysis");
    gen->require_subcommand(1);
    {
        static int g = 2, exp_degree = 0;
        auto* c = gen->add_subcommand("ug", "closed form u_g");
        c->add_option("--g", g, "genus")->check(CLI::NonNegativeNumber);
        c->add_option("--degree", exp_degree, "also expand to this degree")
            ->check(CLI::NonNegativeNumber);
        c->callback([&opt, &action] {
            action = [&opt] { return run_genus_ug(opt, g, exp_degree); };
        });
    }
    {
        static int n = 10;
        auto* c = gen->add_subcommand("seq", "the integer sequence a_n");
        c->add_option("--n", n, "largest index")->check(CLI::PositiveNumber);
        c->add_flag_callback("--bfile", [&opt] { opt.format = "bfile"; },
                             "shorthand for --format bfile");
        c->callback([&opt, &action] {
            action = [&opt] { return run_genus_seq(opt, n); };
        });
    }
    {
        static int n = 50;
        auto* c = gen->add_subcommand("asymptotics", "float diagnostics r_n, rho_n");
        c->add_option("--n", n, "report depth")->check(CLI::PositiveNumber);
        c->callback([&opt, &action] {
            action = [&opt] { return run_genus_asymptotics(opt, n); };
        });
    }
    {
        static std::string radius = "1";
        static int n_max = 2500;
        auto* c = gen->add_subcommand("diverge", "exact divergence certificate");
        c->add_option("--radius", radius, "candidate radius (integer, p/q, or decimal)");
        c->add_option("--max-n", n_max, "search depth")->check(CLI::PositiveNumber);
        c->callback([&opt, &action] {
            action = [&opt] { return run_genus_diverge(opt, radius, n_max); };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadConfig;
    }

    try {
        return action ? action() : kExitBadConfig;
    } catch (const NotATotalDerivative& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cerr << "offending polynomial: " << e.polynomial() << "\n";
        return kExitObstruction;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
}
