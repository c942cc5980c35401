// Copyright 2026 The xx0kit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Dense exact diagonalization of the chain in a fixed magnetization sector.
// Reference values for every closed formula in the library.

#include <Eigen/Dense>

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "xx0/bigint.hpp"
#include "xx0/combinat.hpp"
#include "xx0/core/bethe.hpp"
#include "xx0/errors.hpp"
#include "xx0/matrix.hpp"
#include "xx0/schur.hpp"

namespace xx0 {

/// Largest sector dimension the oracle will build.
inline constexpr std::size_t kSectorBudget = 5000;

/// Basis of the sector with N down spins on sites 0..M. Configurations are
/// strictly decreasing position tuples in colexicographic order, which is
/// ascending order of the occupation bitmask.
class SectorBasis {
public:
    SectorBasis(int M, int N, std::size_t budget = kSectorBudget) : M_(M), N_(N) {
        ChainParams{M, N}.validate();
        if (M > 62) throw DomainError("SectorBasis: at most 63 sites");
        if (binomial(M + 1, N) > budget) throw EnumerationLimitError("SectorBasis", budget);
        // Gosper's hack walks N-bit masks in ascending order.
        const std::uint64_t limit = std::uint64_t{1} << (M + 1);
        if (N == 0) {
            add(0);
        } else {
            std::uint64_t x = (std::uint64_t{1} << N) - 1;
            while (x < limit) {
                add(x);
                const std::uint64_t c = x & (~x + 1);
                const std::uint64_t r = x + c;
                x = (((r ^ x) >> 2) / c) | r;
            }
        }
    }

    int M() const noexcept { return M_; }
    int N() const noexcept { return N_; }
    std::size_t size() const noexcept { return masks_.size(); }
    std::uint64_t mask(std::size_t i) const { return masks_.at(i); }

    /// Down-spin positions of configuration i, largest first.
    StrictPartition configuration(std::size_t i) const {
        std::vector<int> mu;
        const std::uint64_t m = masks_.at(i);
        for (int s = M_; s >= 0; --s)
            if (m >> s & 1u) mu.push_back(s);
        return StrictPartition(std::move(mu));
    }

    /// Index of a bitmask, or -1 if it is not in the sector.
    long index_of_mask(std::uint64_t m) const {
        auto it = index_.find(m);
        return it == index_.end() ? -1 : static_cast<long>(it->second);
    }

    long index_of(const StrictPartition& mu) const {
        std::uint64_t m = 0;
        for (int p : mu.parts()) {
            if (p < 0 || p > M_) return -1;
            m |= std::uint64_t{1} << p;
        }
        return static_cast<int>(mu.size()) == N_ ? index_of_mask(m) : -1;
    }

private:
    void add(std::uint64_t m) {
        index_.emplace(m, masks_.size());
        masks_.push_back(m);
    }

    int M_;
    int N_;
    std::vector<std::uint64_t> masks_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
};

/// H = -1/2 sum_k (s^-_{k+1} s^+_k + s^+_{k+1} s^-_k) on the periodic ring,
/// restricted to the sector.
inline Eigen::MatrixXd build_hamiltonian(const SectorBasis& b) {
    const std::size_t D = b.size();
    const int S = b.M() + 1;
    Eigen::MatrixXd H = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(D), static_cast<Eigen::Index>(D));
    for (std::size_t i = 0; i < D; ++i) {
        const std::uint64_t m = b.mask(i);
        for (int k = 0; k < S; ++k) {
            const int k1 = (k + 1) % S;
            const bool a = m >> k & 1u;
            const bool c = m >> k1 & 1u;
            if (a == c) continue;
            const std::uint64_t flipped = m ^ (std::uint64_t{1} << k) ^ (std::uint64_t{1} << k1);
            H(b.index_of_mask(flipped), static_cast<Eigen::Index>(i)) += -0.5;
        }
    }
    return H;
}

inline Eigen::MatrixXd build_hamiltonian(int M, int N) { return build_hamiltonian(SectorBasis(M, N)); }

/// Vector of amplitudes S_lambda(z) with lambda = mu - delta_N, over the basis.
/// Passing z = u^2 gives the state |Psi(u)>; passing w = v^{-2} gives the
/// coefficients of the conjugate state <Psi(v)|.
inline Eigen::VectorXcd build_state_vector(const SectorBasis& b, const PointVector<Complex>& z) {
    if (static_cast<int>(z.size()) != b.N()) throw DomainError("build_state_vector: need N points");
    Eigen::VectorXcd psi(static_cast<Eigen::Index>(b.size()));
    for (std::size_t i = 0; i < b.size(); ++i)
        psi(static_cast<Eigen::Index>(i)) = schur_jacobi_trudi(partition_from_strict(b.configuration(i)), z);
    return psi;
}

inline Eigen::VectorXcd build_state_vector(const PointVector<Complex>& z, int M, int N) {
    return build_state_vector(SectorBasis(M, N), z);
}

/// e^{-beta H} for complex beta from one eigendecomposition of H.
class ThermalPropagator {
public:
    explicit ThermalPropagator(const Eigen::MatrixXd& H) : solver_(H) {
        if (solver_.info() != Eigen::Success) throw Error("eigendecomposition failed");
    }

    const Eigen::VectorXd& eigenvalues() const { return solver_.eigenvalues(); }
    const Eigen::MatrixXd& eigenvectors() const { return solver_.eigenvectors(); }

    Eigen::MatrixXcd operator()(Complex beta) const {
        const Eigen::MatrixXd& U = solver_.eigenvectors();
        Eigen::VectorXcd d(U.cols());
        for (Eigen::Index i = 0; i < d.size(); ++i) d(i) = std::exp(-beta * solver_.eigenvalues()(i));
        return U.cast<Complex>() * d.asDiagonal() * U.transpose().cast<Complex>();
    }

private:
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver_;
};

/// Diagonal of the projector onto configurations with sites 0..n-1 all up.
inline Eigen::VectorXd projector_empty_prefix(const SectorBasis& b, int n) {
    const std::uint64_t prefix = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    Eigen::VectorXd p(static_cast<Eigen::Index>(b.size()));
    for (std::size_t i = 0; i < b.size(); ++i) p(static_cast<Eigen::Index>(i)) = (b.mask(i) & prefix) ? 0.0 : 1.0;
    return p;
}

/// Map from the (N-n)-sector to the N-sector flipping sites 0..n-1 down;
/// configurations with a down spin among those sites are annihilated.
inline Eigen::MatrixXd domain_wall_creation(const SectorBasis& from, const SectorBasis& to, int n) {
    if (from.M() != to.M() || to.N() - from.N() != n) throw DomainError("domain_wall_creation: sector mismatch");
    const std::uint64_t prefix = (std::uint64_t{1} << n) - 1;
    Eigen::MatrixXd F = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(to.size()), static_cast<Eigen::Index>(from.size()));
    for (std::size_t i = 0; i < from.size(); ++i) {
        const std::uint64_t m = from.mask(i);
        if (m & prefix) continue;
        F(to.index_of_mask(m | prefix), static_cast<Eigen::Index>(i)) = 1.0;
    }
    return F;
}

enum class CorrelatorKind { ferro, domain_wall, walker };

struct OracleParams {
    int M = 1;
    int N = 0;
    int n = 0;
    Complex beta = 0.0;
    /// Walker endpoints (kind == walker only).
    StrictPartition left;
    StrictPartition right;
};

/// Evaluates a correlator straight from its definition by dense linear algebra.
///
/// ferro:       <g| Pi_n e^{-bH} Pi_n |g> / <g| e^{-bH} |g>, g the N-particle ground state
/// domain_wall: <g| F_n^T e^{-bH} F_n |g> / <g| e^{-bH} |g>, g the (N-n)-particle ground state
/// walker:      <left| e^{-bH} |right> in the N-sector
inline Complex oracle_correlator(CorrelatorKind kind, const OracleParams& p) {
    switch (kind) {
        case CorrelatorKind::ferro: {
            if (p.n < 0 || p.n > p.M + 1) throw DomainError("oracle ferro: need 0 <= n <= M+1");
            const SectorBasis b(p.M, p.N);
            const ThermalPropagator E(build_hamiltonian(b));
            const Eigen::VectorXcd psi = build_state_vector(b, ground_state(p.M, p.N).exp_roots());
            const Eigen::VectorXcd proj = projector_empty_prefix(b, p.n).cast<Complex>().cwiseProduct(psi);
            const Eigen::MatrixXcd e = E(p.beta);
            return proj.dot(e * proj) / psi.dot(e * psi);
        }
        case CorrelatorKind::domain_wall: {
            if (p.n < 0 || p.n > p.N) throw DomainError("oracle domain_wall: need 0 <= n <= N");
            const SectorBasis small(p.M, p.N - p.n);
            const SectorBasis big(p.M, p.N);
            const Eigen::VectorXcd psi = build_state_vector(small, ground_state(p.M, p.N - p.n).exp_roots());
            const Eigen::VectorXcd lifted = domain_wall_creation(small, big, p.n).cast<Complex>() * psi;
            const Complex num = lifted.dot(ThermalPropagator(build_hamiltonian(big))(p.beta) * lifted);
            const Complex den = psi.dot(ThermalPropagator(build_hamiltonian(small))(p.beta) * psi);
            return num / den;
        }
        case CorrelatorKind::walker: {
            if (p.left.size() != static_cast<std::size_t>(p.N) || p.right.size() != static_cast<std::size_t>(p.N))
                throw DomainError("oracle walker: endpoints must have N entries");
            const SectorBasis b(p.M, p.N);
            const long i = b.index_of(p.left);
            const long j = b.index_of(p.right);
            if (i < 0 || j < 0) throw DomainError("oracle walker: endpoints outside 0..M");
            return ThermalPropagator(build_hamiltonian(b))(p.beta)(i, j);
        }
    }
    throw DomainError("unknown correlator kind");
}

} // namespace xx0
