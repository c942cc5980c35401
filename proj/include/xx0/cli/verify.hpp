// Copyright 2026 The xx0kit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Identity and oracle suites behind `xx0 verify`. Each suite records, per
// named check, the largest deviation seen and the tolerance it must meet.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "xx0/xx0.hpp"

namespace xx0::cli {

struct VerifyOptions {
    int Lmax = 4;
    int Mmax = 8;
    std::uint64_t seed = 0;
    /// Replaces every floating tolerance when positive.
    double tol = 0.0;
    /// Names of deliberately broken computations (negative controls).
    std::vector<std::string> faults;

    bool fault(const std::string& name) const {
        return std::find(faults.begin(), faults.end(), name) != faults.end();
    }
};

struct CheckResult {
    std::string suite;
    std::string check;
    long cases = 0;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    bool pass = true;
};

class SuiteRecorder {
public:
    SuiteRecorder(std::string suite, const VerifyOptions& opt) : suite_(std::move(suite)), opt_(opt) {}

    /// Deviation check: passes when dev <= tol.
    void deviation(const std::string& check, double dev, double tol) {
        CheckResult& c = slot(check, opt_.tol > 0.0 ? opt_.tol : tol);
        ++c.cases;
        if (!(dev <= c.tolerance)) c.pass = false;
        if (std::isnan(dev) || dev > c.max_deviation) c.max_deviation = std::isnan(dev) ? INFINITY : dev;
    }

    /// Exact check: deviation 0 on success, 1 on failure.
    void exact(const std::string& check, bool ok) {
        CheckResult& c = slot(check, 0.0);
        ++c.cases;
        if (!ok) {
            c.pass = false;
            c.max_deviation = 1.0;
        }
    }

    std::vector<CheckResult> results() const {
        std::vector<CheckResult> out;
        for (const auto& name : order_) out.push_back(checks_.at(name));
        return out;
    }

private:
    CheckResult& slot(const std::string& check, double tol) {
        auto it = checks_.find(check);
        if (it == checks_.end()) {
            order_.push_back(check);
            it = checks_.emplace(check, CheckResult{suite_, check, 0, 0.0, tol, true}).first;
        }
        return it->second;
    }

    std::string suite_;
    const VerifyOptions& opt_;
    std::vector<std::string> order_;
    std::map<std::string, CheckResult> checks_;
};

/// |a - b| / |b|, or |a - b| when b == 0.
inline double relative_deviation(Complex a, Complex b) {
    const double d = std::abs(a - b);
    const double s = std::abs(b);
    return s > 0.0 ? d / s : d;
}

inline std::vector<Complex> random_points(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> radius(0.5, 1.2), angle(0.0, 2.0 * std::numbers::pi);
    std::vector<Complex> p;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = radius(rng);
        p.push_back(std::polar(r, angle(rng)));
    }
    return p;
}

inline std::vector<Complex> q_powers(double q, int from, int count) {
    std::vector<Complex> p;
    for (int i = 0; i < count; ++i) p.emplace_back(std::pow(q, from + i), 0.0);
    return p;
}

/// Trapezoid rule for the Gaussian-weighted squared Vandermonde integral,
/// (1/N!) int exp(-|x|^2/2) prod_{k<l}(x_k - x_l)^2 dx / (2pi)^N, N <= 3.
inline double mehta_quadrature(int N, double half_width = 12.0, double h = 0.1) {
    if (N < 1 || N > 3) throw DomainError("mehta_quadrature: 1 <= N <= 3");
    const int K = static_cast<int>(std::lround(2.0 * half_width / h));
    std::vector<double> x(static_cast<std::size_t>(K + 1)), g(x.size());
    for (int i = 0; i <= K; ++i) {
        x[i] = -half_width + i * h;
        g[i] = std::exp(-0.5 * x[i] * x[i]) * h;
    }
    double s = 0.0;
    if (N == 1) {
        for (int i = 0; i <= K; ++i) s += g[i];
    } else if (N == 2) {
        for (int i = 0; i <= K; ++i)
            for (int j = 0; j <= K; ++j) s += g[i] * g[j] * (x[i] - x[j]) * (x[i] - x[j]);
    } else {
        for (int i = 0; i <= K; ++i)
            for (int j = 0; j <= K; ++j) {
                const double dij = (x[i] - x[j]) * (x[i] - x[j]);
                for (int k = 0; k <= K; ++k) {
                    const double p = (x[i] - x[k]) * (x[j] - x[k]);
                    s += g[i] * g[j] * g[k] * dij * p * p;
                }
            }
    }
    double fact = 1.0;
    for (int k = 2; k <= N; ++k) fact *= k;
    return s / fact / std::pow(2.0 * std::numbers::pi, N);
}

// ---------------------------------------------------------------- suites

inline std::vector<CheckResult> suite_binet_cauchy(const VerifyOptions& opt) {
    SuiteRecorder rec("binet_cauchy", opt);
    std::mt19937_64 rng(opt.seed ^ 0x62696e6574ULL);
    for (int trial = 0; trial < 20; ++trial)
        for (int N = 1; N <= 3; ++N) {
            const auto x = random_points(rng, static_cast<std::size_t>(N));
            const auto y = random_points(rng, static_cast<std::size_t>(N));
            for (int L = 0; L <= 5; ++L)
                for (int n = 0; n <= L; ++n) {
                    Complex k = binet_cauchy_kernel(L, n, y, x);
                    if (opt.fault("kernel")) k *= 1.0 + 1e-6;
                    rec.deviation("kernel_vs_bruteforce", relative_deviation(k, binet_cauchy_bruteforce(L, n, y, x)), 1e-9);
                }
        }
    return rec.results();
}

inline std::vector<CheckResult> suite_prop2(const VerifyOptions& opt) {
    SuiteRecorder rec("prop2", opt);
    std::mt19937_64 rng(opt.seed ^ 0x70726f7032ULL);
    for (int trial = 0; trial < 20; ++trial)
        for (int N = 1; N <= 3; ++N)
            for (int n = 0; n <= N; ++n)
                for (int K = 0; K <= 5 - N + 1 && K <= 4; ++K) {
                    const auto w = random_points(rng, static_cast<std::size_t>(N));
                    const auto z = random_points(rng, static_cast<std::size_t>(N - n));
                    Complex pref = 1.0;
                    for (const auto& v : z) pref *= std::pow(v, n);
                    const Complex sum = prop2_sum_bruteforce(K, n, w, z);
                    rec.deviation("determinant_vs_sum", relative_deviation(prop2_determinant(K, n, w, z), pref * sum), 1e-9);
                    // Mirrored roles: z carries N points, w carries N-n.
                    Complex pref2 = 1.0;
                    for (const auto& v : z) pref2 *= std::pow(v, n);
                    rec.deviation("mirror_vs_sum",
                                  relative_deviation(prop2_mirror_determinant(K, n, z, w), pref2 * sum), 1e-9);
                }
    return rec.results();
}

inline std::vector<CheckResult> suite_prop3(const VerifyOptions& opt) {
    SuiteRecorder rec("prop3", opt);
    for (int L = 1; L <= opt.Lmax; ++L)
        for (int N = L; N <= std::max(4, opt.Lmax); ++N)
            for (int P = N + 1; P <= 7; ++P) {
                if (!(2 * N > P)) continue;
                rec.exact("triple_equality", proposition3(L, N, P).all_equal);
            }
    for (int L = 0; L <= 3; ++L)
        for (int N = std::max(L, 1); N <= 3; ++N)
            for (int P = N - 1; P <= N + 2; ++P) {
                const LaurentPoly z = zq(L, N, P - N + 1);
                rec.exact("sigma_s_bruteforce", sigma_s_bruteforce(L, N, P) == z);
                rec.exact("sigma_s_toeplitz", sigma_s_toeplitz(L, N, P) == z);
                rec.exact("sigma_s_closed", sigma_s_closed(L, N, P) == z);
            }
    return rec.results();
}

inline std::vector<CheckResult> suite_boxcount(const VerifyOptions& opt) {
    SuiteRecorder rec("boxcount", opt);
    for (int L = 0; L <= 4; ++L)
        for (int N = 0; N <= 4; ++N)
            for (int P = 0; P <= 4; ++P) {
                LaurentPoly g;
                const bool weigh = L <= 3 && N <= 3 && P <= 3;
                const auto count = for_each_plane_partition({L, N, P}, [&](const PlanePartition& pp) {
                    if (weigh) g.add_term(pp.volume(), 1);
                });
                rec.exact("macmahon_vs_enumeration", macmahon(L, N, P) == count);
                rec.exact("zq_at_one", zq(L, N, P).eval_at_one() == macmahon(L, N, P));
                if (weigh) rec.exact("zq_vs_weighted_enumeration", g == zq(L, N, P));
            }
    for (int N = 1; N <= 3; ++N)
        for (int P = N - 1; P <= 5; ++P) {
            LaurentPoly g;
            const auto count =
                for_each_column_strict_pp({N, N, P}, [&](const PlanePartition& pp) { g.add_term(pp.volume(), 1); });
            rec.exact("a_cspp_vs_enumeration", a_cspp(N, P) == count);
            if (P <= 3) rec.exact("zq_cspp_vs_weighted_enumeration", g == zq_cspp(N, P));
        }
    return rec.results();
}

inline std::vector<CheckResult> suite_gessel_viennot(const VerifyOptions& opt) {
    SuiteRecorder rec("gessel_viennot", opt);
    for (int L = 0; L <= 3; ++L)
        for (int N = 0; N <= 3; ++N)
            for (int cP = 1; cP <= 3; ++cP) {
                IndexTuples t;
                for (int i = 0; i < cP; ++i) {
                    t.a.push_back(L + N + i);
                    t.b.push_back(L + i);
                }
                const BigInt d = binomial_determinant(t);
                rec.exact("determinant_vs_paths", d == count_lattice_path_families(t.a, t.b));
                rec.exact("determinant_vs_macmahon", d == macmahon(L, N, cP));
            }
    return rec.results();
}

inline std::vector<CheckResult> suite_bethe(const VerifyOptions& opt) {
    SuiteRecorder rec("bethe", opt);
    for (int M = 1; M <= opt.Mmax; ++M)
        for (int N = 1; N <= std::min(3, M + 1); ++N) {
            const SectorBasis basis(M, N);
            const Eigen::MatrixXd H = build_hamiltonian(basis);
            const auto states = enumerate_bethe_states(M, N);
            std::vector<Eigen::VectorXcd> vecs;
            Eigen::MatrixXcd resolution = Eigen::MatrixXcd::Zero(H.rows(), H.cols());
            for (const auto& s : states) {
                const Eigen::VectorXcd psi = build_state_vector(basis, s.exp_roots());
                const double nrm = std::sqrt(norm_squared(s));
                rec.deviation("bethe_equations", bethe_equation_residual(s), 1e-12);
                rec.deviation("eigen_residual", (H.cast<Complex>() * psi - energy(s) * psi).norm() / psi.norm(), 1e-9);
                rec.deviation("norm_vs_inner_product", std::abs(psi.squaredNorm() - norm_squared(s)) / norm_squared(s), 1e-9);
                rec.deviation("norm_vs_scalar_product",
                              relative_deviation(scalar_product(s.exp_neg_roots(), s.exp_roots(), M), norm_squared(s)), 1e-9);
                resolution += psi * psi.adjoint() / (nrm * nrm);
                vecs.push_back(psi / nrm);
            }
            for (std::size_t a = 0; a < states.size(); ++a)
                for (std::size_t b = a + 1; b < states.size(); ++b) {
                    rec.deviation("orthogonality", std::abs(vecs[a].dot(vecs[b])), 1e-9);
                    const double na = std::sqrt(norm_squared(states[a])), nb = std::sqrt(norm_squared(states[b]));
                    rec.deviation("orthogonality_scalar_product",
                                  std::abs(scalar_product(states[a].exp_neg_roots(), states[b].exp_roots(), M)) / (na * nb),
                                  1e-9);
                }
            const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(H.rows(), H.cols());
            rec.deviation("resolution_of_identity", (resolution - I).cwiseAbs().maxCoeff(), 1e-9);
        }
    return rec.results();
}

inline std::vector<CheckResult> suite_correlators(const VerifyOptions& opt) {
    SuiteRecorder rec("correlators", opt);
    for (int M = 1; M <= opt.Mmax; ++M)
        for (int N = 1; N <= std::min(3, M + 1); ++N)
            for (int n = 0; n <= N; ++n)
                for (double beta : {0.0, 0.5, 1.0, 2.0}) {
                    const Complex o = oracle_correlator(CorrelatorKind::ferro, {M, N, n, beta, {}, {}});
                    const Complex d = persistence_ferro(M, N, n, beta).value;
                    const Complex s = persistence_ferro(M, N, n, beta, Method::spectral_sum).value;
                    if (N > M + 1 - n) {
                        rec.deviation("ferro_structural_zero", std::max({std::abs(o), std::abs(d), std::abs(s)}), 1e-12);
                    } else {
                        rec.deviation("ferro_determinant_vs_oracle", relative_deviation(d, o), 1e-9);
                        rec.deviation("ferro_spectral_vs_oracle", relative_deviation(s, o), 1e-9);
                        rec.deviation("ferro_determinant_vs_spectral", relative_deviation(d, s), 1e-9);
                    }
                    const Complex od = oracle_correlator(CorrelatorKind::domain_wall, {M, N, n, beta, {}, {}});
                    const Complex dd = persistence_domain_wall(M, N, n, beta).value;
                    const Complex sd = persistence_domain_wall(M, N, n, beta, Method::spectral_sum).value;
                    rec.deviation("domain_wall_block_vs_oracle", relative_deviation(dd, od), 1e-9);
                    rec.deviation("domain_wall_spectral_vs_oracle", relative_deviation(sd, od), 1e-9);
                    rec.deviation("domain_wall_block_vs_spectral", relative_deviation(dd, sd), 1e-9);
                    if (n == 0) {
                        rec.exact("unit_at_n0", d == Complex(1.0) && s == Complex(1.0) && dd == Complex(1.0) &&
                                                     sd == Complex(1.0));
                    }
                    if (beta == 0.0)
                        rec.deviation("ferro_beta0_is_efp", std::abs(d.real() - efp_formfactor(ground_state(M, N), n)), 1e-9);
                }
    return rec.results();
}

inline std::vector<CheckResult> suite_bridge(const VerifyOptions& opt) {
    SuiteRecorder rec("bridge", opt);
    for (const BigRational& qr : {BigRational(1, 2), BigRational(2, 3)}) {
        const double q = qr.convert_to<double>();
        auto exact_value = [&](const LaurentPoly& p) { return p.eval(qr).convert_to<double>(); };
        for (int M = 1; M <= std::max(opt.Mmax, 8); ++M)
            for (int N = 1; N <= std::min(3, M + 1); ++N) {
                const int K = M + 1 - N;
                const auto w = q_powers(q, 1, N);
                const auto z = q_powers(q, 0, N);
                const LaurentPoly sp = zq_cspp(N, M).shifted(static_cast<int>(-exact_half(static_cast<long>(N) * N * (N - 1))));
                rec.deviation("scalar_product", relative_deviation(scalar_product(w, z, M), exact_value(sp)), 1e-9);
                for (int n = 0; n <= K; ++n) {
                    const LaurentPoly ff =
                        zq_cspp(N, M - n).shifted(static_cast<int>(exact_half(static_cast<long>(N) * N * (2 * n + 1 - N))));
                    rec.deviation("ferro_formfactor", relative_deviation(ferro_formfactor(w, z, n, M), exact_value(ff)), 1e-9);
                }
                for (int n = 0; n <= N; ++n) {
                    const auto zs = q_powers(q, 0, N - n);
                    const LaurentPoly dw =
                        zq(N - n, N, K).shifted(static_cast<int>(exact_half(static_cast<long>(n) * (N - n) * (N - n - 1))));
                    rec.deviation("domain_wall_formfactor",
                                  relative_deviation(domain_wall_formfactor(w, zs, n, M), exact_value(dw)), 1e-9);
                }
            }
    }
    return rec.results();
}

inline std::vector<CheckResult> suite_asym(const VerifyOptions& opt) {
    SuiteRecorder rec("asym", opt);
    for (int N = 1; N <= 3; ++N) rec.deviation("mehta_vs_quadrature", std::abs(mehta_integral(N) - mehta_quadrature(N)), 1e-6);
    for (int n = 0; n <= 38; ++n) {
        BigInt gamma = 1;
        for (int k = 2; k <= n; ++k) gamma *= k;
        rec.exact("barnes_g_recursion", barnes_g_integer(n + 1) == barnes_g_integer(n) * gamma);
    }
    for (int M : {200, 400})
        for (int N = 1; N <= 4; ++N) {
            const double exact = 1.0 / norm_squared(ground_state(M, N));
            const double approx = std::exp(log_inverse_norm_squared_asymptotic(M, N));
            rec.deviation("norm_asymptotics", std::abs(approx - exact) / exact, 0.02);
        }
    {
        const int N = 100;
        const double law = 0.5 * N * N * std::log(N) - 0.75 * N * N;
        rec.deviation("phi_large_n_law", std::abs(phi_n(N) - law) / std::abs(phi_n(N)), 0.05);
    }
    for (int N = 1; N <= 4; ++N)
        for (double beta : {4.0, 8.0, 16.0}) {
            const double h = 1e-3;
            const double up = ferro_asymptotic(20, N, 1, beta * std::exp(h)).log_value;
            const double dn = ferro_asymptotic(20, N, 1, beta * std::exp(-h)).log_value;
            rec.deviation("critical_exponent", std::abs((up - dn) / (2 * h) + 0.5 * N * N), 1e-9);
        }
    return rec.results();
}

using SuiteFn = std::function<std::vector<CheckResult>(const VerifyOptions&)>;

inline const std::vector<std::pair<std::string, SuiteFn>>& verify_suites() {
    static const std::vector<std::pair<std::string, SuiteFn>> suites = {
        {"binet_cauchy", suite_binet_cauchy}, {"prop2", suite_prop2},         {"prop3", suite_prop3},
        {"boxcount", suite_boxcount},         {"gessel_viennot", suite_gessel_viennot},
        {"bethe", suite_bethe},               {"correlators", suite_correlators}, {"bridge", suite_bridge},
        {"asym", suite_asym},
    };
    return suites;
}

} // namespace xx0::cli
