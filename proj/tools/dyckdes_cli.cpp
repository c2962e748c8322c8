// Command-line front end: bijection mapping, table export, and the
// verification suites.
//
// Exit codes: 0 success / all checks pass, 1 check failure,
// 2 usage or bounds error, 3 domain error (input contains a 123 pattern).

#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dyckdes/bijection.hpp"
#include "dyckdes/checks.hpp"
#include "dyckdes/dyck.hpp"
#include "dyckdes/export.hpp"
#include "dyckdes/perm.hpp"
#include "dyckdes/series.hpp"
#include "dyckdes/tables.hpp"

namespace {

constexpr int kPathOracleCap = 12;
constexpr int kPermOracleCap = 10;

int run_map(const std::string& text, bool stats) {
    dyckdes::Permutation p;
    try {
        p = dyckdes::parse_permutation(text);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    if (auto w = dyckdes::find_123(p)) {
        std::cerr << "error: contains 123 at positions " << (*w)[0] << " " << (*w)[1]
                  << " " << (*w)[2] << "\n";
        return 3;
    }
    dyckdes::DyckPath d = dyckdes::kappa(p);
    std::cout << d.to_string() << "\n";
    if (stats) {
        auto c = dyckdes::check_descent_translation(p);
        std::cout << "des=" << c.des << " v=" << c.valleys << " tf=" << c.triple_falls
                  << " " << (c.holds ? "OK" : "MISMATCH") << "\n";
    }
    return 0;
}

int run_unmap(const std::string& text, bool stats) {
    dyckdes::DyckPath d;
    try {
        d = dyckdes::parse_path(text);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    dyckdes::Permutation p = dyckdes::kappa_inverse(d);
    std::cout << p.to_string() << "\n";
    if (stats) {
        auto c = dyckdes::check_descent_translation(p);
        std::cout << "des=" << c.des << " v=" << c.valleys << " tf=" << c.triple_falls
                  << " " << (c.holds ? "OK" : "MISMATCH") << "\n";
    }
    return 0;
}

int run_check(const std::string& suite, int max_n, bool unsafe_bounds) {
    using namespace dyckdes;
    std::vector<CheckReport> reports;
    bool wants_oracle = (suite == "oracle" || suite == "all");
    if (wants_oracle && !unsafe_bounds && max_n > kPathOracleCap) {
        std::cerr << "error: --max-n " << max_n << " exceeds the oracle bound "
                  << kPathOracleCap << " (pass --unsafe-bounds to override)\n";
        return 2;
    }
    TableSet t = build_tables(max_n);
    if (wants_oracle) {
        int path_max = unsafe_bounds ? max_n : std::min(max_n, kPathOracleCap);
        int perm_max = unsafe_bounds ? max_n : std::min(max_n, kPermOracleCap);
        int bound = unsafe_bounds ? max_n : kDefaultOracleBound;
        for (auto& r : check_oracles(t, path_max, perm_max, bound))
            reports.push_back(std::move(r));
    }
    if (suite == "equations" || suite == "all")
        for (auto& r : check_functional_equations(t, max_n))
            reports.push_back(std::move(r));
    if (suite == "theorem5" || suite == "all") {
        reports.push_back(check_trivariate_closed_form(t, max_n));
        reports.push_back(check_trivariate_direct_expansion(t, max_n));
    }
    if (suite == "theorem6" || suite == "all")
        for (auto& r : check_eulerian_closed_form(t, max_n))
            reports.push_back(std::move(r));
    if (suite == "specials" || suite == "all")
        for (auto& r : check_specializations(t, max_n))
            reports.push_back(std::move(r));
    for (const auto& r : reports) std::cout << r.line() << "\n";
    return all_pass(reports) ? 0 : 1;
}

int run_specials(int max_n) {
    using namespace dyckdes;
    TableSet t = build_tables(max_n);
    Specializations sp = specializations(t, max_n);
    auto print_seq = [](const std::string& name, const std::vector<Count>& seq) {
        std::cout << name << ":";
        for (const auto& v : seq) std::cout << " " << v.str();
        std::cout << "\n";
    };
    print_seq("catalan A(x,1,1)", sp.catalan);
    print_seq("motzkin A(x,1,0)", sp.motzkin);
    std::cout << "narayana yA(x,y,1):\n";
    for (std::size_t n = 1; n < sp.narayana_triangle.size(); ++n) {
        std::cout << "  n=" << n << ":";
        for (const auto& v : sp.narayana_triangle[n]) std::cout << " " << v.str();
        std::cout << "\n";
    }
    std::cout << "triple-falls A(x,1,z):\n";
    for (std::size_t n = 0; n < sp.triple_fall_triangle.size(); ++n) {
        std::cout << "  n=" << n << ":";
        for (const auto& v : sp.triple_fall_triangle[n]) std::cout << " " << v.str();
        std::cout << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Descent statistics over 123-avoiding permutations via Dyck paths"};
    app.require_subcommand(1);

    std::string perm_text, path_text;
    bool stats = false;
    auto* map_cmd = app.add_subcommand("map", "Map a 123-avoider to its Dyck path");
    map_cmd->add_option("permutation", perm_text, "space/comma-separated values")->required();
    map_cmd->add_flag("--stats", stats, "also print des, valleys, triple falls");

    auto* unmap_cmd = app.add_subcommand("unmap", "Map a Dyck path back to its permutation");
    unmap_cmd->add_option("path", path_text, "U/D string")->required();
    unmap_cmd->add_flag("--stats", stats, "also print des, valleys, triple falls");

    int max_n = 7;
    std::string format = "csv";
    auto* eul_cmd = app.add_subcommand("eulerian", "Emit descent-count rows e_{n,k}");
    eul_cmd->add_option("--max-n", max_n, "largest n")->check(CLI::NonNegativeNumber);
    eul_cmd->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    bool irreducible = false;
    auto* tri_cmd = app.add_subcommand("tristat", "Emit (valleys, triple falls) tables");
    tri_cmd->add_option("--max-n", max_n, "largest n")->check(CLI::NonNegativeNumber);
    tri_cmd->add_flag("--irreducible", irreducible, "irreducible paths instead of all");
    tri_cmd->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    std::string suite = "all";
    bool unsafe_bounds = false;
    int check_max_n = 10;
    auto* check_cmd = app.add_subcommand("check", "Run verification suites");
    check_cmd->add_option("--suite", suite, "oracle|equations|theorem5|theorem6|specials|all")
        ->check(CLI::IsMember({"oracle", "equations", "theorem5", "theorem6", "specials", "all"}));
    check_cmd->add_option("--max-n", check_max_n, "truncation / enumeration order")
        ->check(CLI::NonNegativeNumber);
    check_cmd->add_flag("--unsafe-bounds", unsafe_bounds,
                        "lift the built-in oracle size caps");

    int spec_max_n = 12;
    auto* spec_cmd = app.add_subcommand("specials", "Print the four specializations");
    spec_cmd->add_option("--max-n", spec_max_n, "largest n")->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (map_cmd->parsed()) return run_map(perm_text, stats);
        if (unmap_cmd->parsed()) return run_unmap(path_text, stats);
        if (eul_cmd->parsed()) {
            auto rows = dyckdes::eulerian_rows(max_n);
            std::cout << (format == "json" ? dyckdes::eulerian_json(rows, max_n)
                                           : dyckdes::eulerian_csv(rows));
            return 0;
        }
        if (tri_cmd->parsed()) {
            auto kind = irreducible ? dyckdes::TableKind::irreducible
                                    : dyckdes::TableKind::all_paths;
            auto t = dyckdes::build_tables(max_n);
            const auto& tabs = irreducible ? t.b : t.a;
            std::vector<dyckdes::TriStatTable> view(
                tabs.begin() + (irreducible ? 1 : 0), tabs.end());
            std::cout << (format == "json" ? dyckdes::tristat_json(view, max_n, kind)
                                           : dyckdes::tristat_csv(view));
            return 0;
        }
        if (check_cmd->parsed()) return run_check(suite, check_max_n, unsafe_bounds);
        if (spec_cmd->parsed()) return run_specials(spec_max_n);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
