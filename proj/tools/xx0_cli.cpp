// Copyright 2026 The xx0kit Authors
// SPDX-License-Identifier: Apache-2.0

// xx0: correlators, box counts, verification suites and asymptotic tables.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "xx0/cli/commands.hpp"

namespace {

// "1,2,5" or "0:4" (inclusive) or a mix such as "0:2,7".
template <class T>
std::vector<T> parse_list(const std::string& text, const char* flag) {
    std::vector<T> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            const auto colon = item.find(':', 1);
            if constexpr (std::is_integral_v<T>) {
                if (colon != std::string::npos) {
                    const int lo = std::stoi(item.substr(0, colon));
                    const int hi = std::stoi(item.substr(colon + 1));
                    for (int v = lo; v <= hi; ++v) out.push_back(v);
                    continue;
                }
                std::size_t used = 0;
                out.push_back(static_cast<T>(std::stoi(item, &used)));
                if (used != item.size()) throw std::invalid_argument(item);
            } else {
                std::size_t used = 0;
                out.push_back(std::stod(item, &used));
                if (used != item.size()) throw std::invalid_argument(item);
            }
        } catch (const std::logic_error&) {
            throw CLI::ValidationError(flag, "cannot parse '" + item + "'");
        }
    }
    if (out.empty()) throw CLI::ValidationError(flag, "empty list");
    return out;
}

struct GridFlags {
    std::string M, N, n, l, beta, L, P;
};

void add_grid(CLI::App* sub, GridFlags& g, bool chain, bool box) {
    if (chain) {
        sub->add_option("--M", g.M, "Chain has M+1 sites (list)");
        sub->add_option("--N", g.N, "Number of down spins (list)");
        sub->add_option("--n", g.n, "String length or walker start (list)");
        sub->add_option("--beta", g.beta, "Inverse temperature (list)");
    }
    if (box) {
        sub->add_option("--L", g.L, "Box side L (list)");
        if (!chain) sub->add_option("--N", g.N, "Box side N (list)");
        sub->add_option("--P", g.P, "Box side P (list)");
    }
}

void apply_grid(const GridFlags& g, xx0::cli::RunConfig& cfg) {
    if (!g.M.empty()) cfg.M = parse_list<int>(g.M, "--M");
    if (!g.N.empty()) cfg.N = parse_list<int>(g.N, "--N");
    if (!g.n.empty()) cfg.n = parse_list<int>(g.n, "--n");
    if (!g.l.empty()) cfg.l = parse_list<int>(g.l, "--l");
    if (!g.beta.empty()) cfg.beta = parse_list<double>(g.beta, "--beta");
    if (!g.L.empty()) cfg.L = parse_list<int>(g.L, "--L");
    if (!g.P.empty()) cfg.P = parse_list<int>(g.P, "--P");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Thermal correlators of the XX0 chain and boxed plane partitions"};
    app.require_subcommand(1);

    xx0::cli::RunConfig cfg;
    GridFlags grid;
    std::string out_path;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--out", out_path, "Write the table to FILE instead of stdout");
        sub->add_option("--seed", cfg.seed, "Seed for random point sets");
        sub->add_option("--budget", cfg.budget, "Enumeration budget");
        sub->add_option("--tol", cfg.tol, "Tolerance override")->check(CLI::PositiveNumber);
        sub->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
    };

    auto* corr = app.add_subcommand("correlator", "Persistence correlators, EFP and walker amplitudes");
    corr->add_option("kind", cfg.kind, "ferro | domain_wall | efp | walker")
        ->required()
        ->check(CLI::IsMember({"ferro", "domain_wall", "efp", "walker"}));
    corr->add_option("--method", cfg.method, "determinant | spectral_sum | oracle")
        ->check(CLI::IsMember({"determinant", "spectral_sum", "spectral", "oracle"}));
    corr->add_option("--l", grid.l, "Walker end site (list)");
    add_grid(corr, grid, true, false);
    common(corr);

    auto* count = app.add_subcommand("count", "Plane partition counts and q-enumerations");
    count->add_option("kind", cfg.kind, "macmahon | zq | zq_cspp | a_cspp | qbd | binomial_det | prop3")
        ->required()
        ->check(CLI::IsMember({"macmahon", "zq", "zq_cspp", "a_cspp", "qbd", "binomial_det", "prop3"}));
    add_grid(count, grid, false, true);
    common(count);

    auto* verify = app.add_subcommand("verify", "Run identity and oracle suites");
    verify->add_option("--suite", cfg.suites, "Restrict to these suites");
    verify->add_option("--Lmax", cfg.Lmax, "Largest L in the proposition 3 grid");
    verify->add_option("--Mmax", cfg.Mmax, "Largest M in the chain suites");
    verify->add_option("--inject-fault", cfg.faults, "Negative control: kernel");
    common(verify);

    auto* asym = app.add_subcommand("asym", "Exact versus low-temperature estimates");
    asym->add_option("kind", cfg.kind, "ferro | domain_wall")->required()->check(CLI::IsMember({"ferro", "domain_wall"}));
    add_grid(asym, grid, true, false);
    common(asym);

    try {
        app.parse(argc, argv);
        apply_grid(grid, cfg);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    cfg.subcommand = app.get_subcommands().front()->get_name();

    try {
        const xx0::cli::CommandOutput result = xx0::cli::run_command(cfg);
        if (out_path.empty()) {
            result.table.write(std::cout, cfg.format);
        } else {
            std::ofstream f(out_path, std::ios::binary);
            if (!f) {
                std::cerr << "xx0: cannot open " << out_path << "\n";
                return 2;
            }
            result.table.write(f, cfg.format);
        }
        if (result.status != 0 && cfg.subcommand == "verify") {
            for (const auto& row : result.table.rows())
                if (row.size() == 6 && !row[5].b) std::cerr << "FAIL " << row[0].s << "/" << row[1].s << "\n";
        }
        return result.status;
    } catch (const xx0::DomainError& e) {
        std::cerr << "xx0: " << e.what() << "\n";
        return 2;
    } catch (const xx0::Error& e) {
        std::cerr << "xx0: " << e.what() << "\n";
        return 1;
    }
}
