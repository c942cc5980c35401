// Copyright 2026 The xx0kit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "xx0/cli/table.hpp"
#include "xx0/cli/verify.hpp"
#include "xx0/xx0.hpp"

namespace xx0::cli {

struct RunConfig {
    std::string subcommand;
    /// ferro | domain_wall | efp | walker for correlator and asym;
    /// macmahon | zq | zq_cspp | a_cspp | qbd | binomial_det | prop3 for count.
    std::string kind;
    std::vector<int> M{7};
    std::vector<int> N{2};
    std::vector<int> n{0};
    std::vector<int> l{0};
    std::vector<double> beta{1.0};
    std::vector<int> L{1};
    std::vector<int> P{1};
    std::string method = "determinant";
    std::string format = "json";
    std::uint64_t seed = 0;
    std::size_t budget = kBetheStateBudget;
    /// Tolerance override for verify; 0 keeps the per-check defaults.
    double tol = 0.0;
    std::vector<std::string> suites;
    int Lmax = 4;
    int Mmax = 8;
    std::vector<std::string> faults;
    unsigned threads = 0;

    void validate() const {
        auto nonempty = [](std::size_t s, const char* what) {
            if (s == 0) throw DomainError(std::string("empty grid for ") + what);
        };
        nonempty(M.size(), "M");
        nonempty(N.size(), "N");
        nonempty(n.size(), "n");
        nonempty(l.size(), "l");
        nonempty(beta.size(), "beta");
        nonempty(L.size(), "L");
        nonempty(P.size(), "P");
        if (tol < 0.0) throw DomainError("tolerance must be positive");
        if (format != "json" && format != "csv") throw DomainError("format must be json or csv");
        if (budget == 0) throw DomainError("budget must be positive");
    }
};

struct CommandOutput {
    int status = 0;
    Table table{{}};
};

inline Method parse_method(const std::string& s) {
    if (s == "determinant") return Method::determinant;
    if (s == "spectral_sum" || s == "spectral") return Method::spectral_sum;
    if (s == "oracle") return Method::oracle;
    throw DomainError("unknown method " + s);
}

/// Evaluates f(i) for i in [0, count) on a few threads; results land in order.
template <class Row>
std::vector<Row> parallel_rows(std::size_t count, unsigned threads, const std::function<Row(std::size_t)>& f) {
    std::vector<Row> out(count);
    unsigned t = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    t = static_cast<unsigned>(std::min<std::size_t>(t, count));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < count; i = next++) out[i] = f(i);
    };
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < t; ++k) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    return out;
}

inline CommandOutput run_correlator(const RunConfig& cfg) {
    const std::string& kind = cfg.kind;
    if (kind != "ferro" && kind != "domain_wall" && kind != "efp" && kind != "walker")
        throw DomainError("unknown correlator kind " + kind);
    const Method method = parse_method(cfg.method);

    struct Point {
        int M, N, n, l;
        double beta;
    };
    std::vector<Point> grid;
    const std::vector<int> ls = kind == "walker" ? cfg.l : std::vector<int>{0};
    const std::vector<int> Ns = kind == "walker" ? std::vector<int>{1} : cfg.N;
    for (int M : cfg.M)
        for (int N : Ns)
            for (int n : cfg.n)
                for (int l : ls)
                    for (double b : cfg.beta) grid.push_back({M, N, n, l, b});

    const bool walker = kind == "walker";
    std::vector<std::string> cols = {"kind", "M", "N", "n"};
    if (walker) cols.push_back("l");
    for (const char* c : {"beta", "method", "value_re", "value_im", "status", "warnings"}) cols.emplace_back(c);

    auto row = [&](std::size_t i) {
        const Point& p = grid[i];
        std::vector<Cell> r = {Cell::text(kind), Cell::integer(p.M), Cell::integer(p.N), Cell::integer(p.n)};
        if (walker) r.push_back(Cell::integer(p.l));
        r.push_back(Cell::real(p.beta));
        std::string mname = kind == "efp" ? "closed_form" : to_string(method);
        Complex v = 0.0;
        std::string status = "ok", warnings;
        try {
            if (kind == "efp") {
                v = efp_formfactor(ground_state(p.M, p.N), p.n);
            } else if (walker) {
                if (method == Method::oracle) {
                    v = oracle_correlator(CorrelatorKind::walker,
                                          {p.M, 1, 0, p.beta, StrictPartition({p.n}), StrictPartition({p.l})});
                } else {
                    mname = "determinant";
                    v = walker_amplitude(p.n, p.l, p.beta, p.M);
                }
            } else if (method == Method::oracle) {
                if (binomial(p.M + 1, p.N) > cfg.budget) throw EnumerationLimitError("oracle sector", cfg.budget);
                v = oracle_correlator(kind == "ferro" ? CorrelatorKind::ferro : CorrelatorKind::domain_wall,
                                      {p.M, p.N, p.n, p.beta, {}, {}});
            } else {
                const CorrelatorResult res = kind == "ferro" ? persistence_ferro(p.M, p.N, p.n, p.beta, method, cfg.budget)
                                                             : persistence_domain_wall(p.M, p.N, p.n, p.beta, method, cfg.budget);
                v = res.value;
                for (const auto& w : res.warnings) warnings += (warnings.empty() ? "" : "; ") + w;
            }
        } catch (const EnumerationLimitError&) {
            status = "budget_exceeded";
        } catch (const DomainError& e) {
            status = std::string("domain_error: ") + e.what();
        }
        r.push_back(Cell::text(mname));
        if (status == "ok") {
            r.push_back(Cell::real(v.real()));
            r.push_back(Cell::real(v.imag()));
        } else {
            r.push_back(Cell::null());
            r.push_back(Cell::null());
        }
        r.push_back(Cell::text(status));
        r.push_back(Cell::text(warnings));
        return r;
    };

    CommandOutput out;
    out.table = Table(cols);
    for (auto& r : parallel_rows<std::vector<Cell>>(grid.size(), cfg.threads, row)) out.table.add(std::move(r));
    return out;
}

inline IndexTuples binomial_pattern(int L, int N, int cP) {
    IndexTuples t;
    for (int i = 0; i < cP; ++i) {
        t.a.push_back(L + N + i);
        t.b.push_back(L + i);
    }
    return t;
}

inline CommandOutput run_count(const RunConfig& cfg) {
    const std::string& k = cfg.kind;
    CommandOutput out;
    if (k == "prop3") {
        out.table = Table({"L", "N", "P", "all_equal", "degree", "value_at_1"});
        for (int L : cfg.L)
            for (int N : cfg.N)
                for (int P : cfg.P) {
                    const auto rep = proposition3(L, N, P);
                    out.table.add({Cell::integer(L), Cell::integer(N), Cell::integer(P), Cell::boolean(rep.all_equal),
                                   Cell::integer(rep.zq_value.degree()), Cell::exact(rep.zq_value.eval_at_one())});
                }
        return out;
    }
    const bool two_sided = k == "zq_cspp" || k == "a_cspp";
    if (!two_sided && k != "macmahon" && k != "zq" && k != "qbd" && k != "binomial_det")
        throw DomainError("unknown count kind " + k);
    out.table = two_sided ? Table({"kind", "N", "P", "value"}) : Table({"kind", "L", "N", "P", "value"});
    for (int L : two_sided ? std::vector<int>{0} : cfg.L)
        for (int N : cfg.N)
            for (int P : cfg.P) {
                Cell v;
                if (k == "macmahon") v = Cell::exact(macmahon(L, N, P));
                if (k == "zq") v = Cell::poly(zq(L, N, P));
                if (k == "zq_cspp") v = Cell::poly(zq_cspp(N, P));
                if (k == "a_cspp") v = Cell::exact(a_cspp(N, P));
                if (k == "qbd") v = Cell::poly(q_binomial_determinant(binomial_pattern(L, N, P)));
                if (k == "binomial_det") v = Cell::exact(binomial_determinant(binomial_pattern(L, N, P)));
                if (two_sided)
                    out.table.add({Cell::text(k), Cell::integer(N), Cell::integer(P), v});
                else
                    out.table.add({Cell::text(k), Cell::integer(L), Cell::integer(N), Cell::integer(P), v});
            }
    return out;
}

inline CommandOutput run_asym(const RunConfig& cfg) {
    const std::string& kind = cfg.kind;
    if (kind != "ferro" && kind != "domain_wall") throw DomainError("asym supports ferro and domain_wall");
    struct Point {
        int M, N, n;
        double beta;
    };
    std::vector<Point> grid;
    for (int M : cfg.M)
        for (int N : cfg.N)
            for (int n : cfg.n)
                for (double b : cfg.beta) grid.push_back({M, N, n, b});

    auto row = [&](std::size_t i) {
        const Point& p = grid[i];
        std::vector<Cell> r = {Cell::text(kind), Cell::integer(p.M), Cell::integer(p.N), Cell::integer(p.n),
                               Cell::real(p.beta)};
        try {
            const AsymptoticEstimate e = kind == "ferro" ? ferro_asymptotic(p.M, p.N, p.n, p.beta)
                                                         : domain_wall_asymptotic(p.M, p.N, p.n, p.beta);
            Cell exact = Cell::null();
            std::string status = "ok";
            try {
                const CorrelatorResult res =
                    kind == "ferro" ? persistence_ferro(p.M, p.N, p.n, p.beta, Method::spectral_sum, cfg.budget)
                                    : persistence_domain_wall(p.M, p.N, p.n, p.beta, Method::spectral_sum, cfg.budget);
                if (res.value.real() > 0.0)
                    exact = Cell::real(std::log(res.value.real()));
                else
                    status = "asym-only";
            } catch (const EnumerationLimitError&) {
                status = "asym-only";
            }
            r.push_back(exact);
            r.push_back(Cell::real(e.log_value));
            for (const char* piece : {"amplitude", "lattice", "critical", "mehta"}) r.push_back(Cell::real(e.piece(piece)));
            r.push_back(Cell::text(status));
        } catch (const DomainError& e) {
            for (int c = 0; c < 6; ++c) r.push_back(Cell::null());
            r.push_back(Cell::text(std::string("domain_error: ") + e.what()));
        }
        return r;
    };

    CommandOutput out;
    out.table = Table({"kind", "M", "N", "n", "beta", "exact_log", "asym_log", "amplitude", "lattice", "critical",
                       "mehta", "status"});
    for (auto& r : parallel_rows<std::vector<Cell>>(grid.size(), cfg.threads, row)) out.table.add(std::move(r));
    return out;
}

inline CommandOutput run_verify(const RunConfig& cfg) {
    VerifyOptions opt;
    opt.Lmax = cfg.Lmax;
    opt.Mmax = cfg.Mmax;
    opt.seed = cfg.seed;
    opt.tol = cfg.tol;
    opt.faults = cfg.faults;
    for (const auto& s : cfg.suites) {
        const auto& all = verify_suites();
        if (std::none_of(all.begin(), all.end(), [&](const auto& p) { return p.first == s; }))
            throw DomainError("unknown suite " + s);
    }
    for (const auto& f : cfg.faults)
        if (f != "kernel") throw DomainError("unknown fault " + f);

    CommandOutput out;
    out.table = Table({"suite", "check", "cases", "max_dev", "tol", "pass"});
    for (const auto& [name, fn] : verify_suites()) {
        if (!cfg.suites.empty() && std::find(cfg.suites.begin(), cfg.suites.end(), name) == cfg.suites.end()) continue;
        for (const CheckResult& c : fn(opt)) {
            out.table.add({Cell::text(c.suite), Cell::text(c.check), Cell::integer(c.cases), Cell::real(c.max_deviation),
                           Cell::real(c.tolerance), Cell::boolean(c.pass)});
            if (!c.pass) out.status = 1;
        }
    }
    return out;
}

inline CommandOutput run_command(const RunConfig& cfg) {
    cfg.validate();
    if (cfg.subcommand == "correlator") return run_correlator(cfg);
    if (cfg.subcommand == "count") return run_count(cfg);
    if (cfg.subcommand == "asym") return run_asym(cfg);
    if (cfg.subcommand == "verify") return run_verify(cfg);
    throw DomainError("unknown subcommand " + cfg.subcommand);
}

} // namespace xx0::cli
