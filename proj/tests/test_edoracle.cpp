// Copyright 2026 The xx0kit Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>

#include "support.hpp"
#include "xx0/edoracle.hpp"

namespace xx0 {
namespace {

TEST(SectorBasis, SizeOrderAndIndex) {
    const SectorBasis b(4, 2);
    ASSERT_EQ(b.size(), 10u);
    EXPECT_EQ(b.configuration(0), (StrictPartition{1, 0}));
    EXPECT_EQ(b.configuration(1), (StrictPartition{2, 0}));
    EXPECT_EQ(b.configuration(9), (StrictPartition{4, 3}));
    for (std::size_t i = 0; i < b.size(); ++i) {
        EXPECT_EQ(b.index_of(b.configuration(i)), static_cast<long>(i));
        if (i) { EXPECT_LT(b.mask(i - 1), b.mask(i)); }
    }
    EXPECT_EQ(b.index_of(StrictPartition{5, 0}), -1);
    EXPECT_THROW(SectorBasis(20, 10), EnumerationLimitError);
}

TEST(Hamiltonian, TwoSites) {
    const Eigen::MatrixXd H = build_hamiltonian(1, 1);
    Eigen::MatrixXd expected(2, 2);
    expected << 0.0, -1.0, -1.0, 0.0;
    EXPECT_EQ(H, expected);
}

TEST(Hamiltonian, SpectrumIsBetheSpectrum) {
    for (int M = 1; M <= 8; ++M)
        for (int N = 0; N <= std::min(4, M + 1); ++N) {
            const Eigen::MatrixXd H = build_hamiltonian(M, N);
            EXPECT_EQ((H - H.transpose()).cwiseAbs().maxCoeff(), 0.0);
            const ThermalPropagator E(H);
            std::vector<double> bethe;
            for (const auto& s : enumerate_bethe_states(M, N)) bethe.push_back(energy(s));
            std::sort(bethe.begin(), bethe.end());
            ASSERT_EQ(static_cast<Eigen::Index>(bethe.size()), E.eigenvalues().size());
            for (std::size_t i = 0; i < bethe.size(); ++i) EXPECT_NEAR(E.eigenvalues()(static_cast<Eigen::Index>(i)), bethe[i], 1e-12);
        }
}

TEST(StateVector, IsEigenvector) {
    for (int M = 1; M <= 8; ++M)
        for (int N = 1; N <= std::min(3, M + 1); ++N) {
            const SectorBasis b(M, N);
            const Eigen::MatrixXcd H = build_hamiltonian(b).cast<Complex>();
            for (const auto& s : enumerate_bethe_states(M, N)) {
                const Eigen::VectorXcd psi = build_state_vector(b, s.exp_roots());
                EXPECT_LT((H * psi - energy(s) * psi).norm() / psi.norm(), 1e-9);
                EXPECT_NEAR(psi.squaredNorm(), norm_squared(s), 1e-9 * norm_squared(s));
            }
        }
}

TEST(StateVector, OrthogonalityAndResolution) {
    for (int M = 1; M <= 8; ++M)
        for (int N = 1; N <= std::min(3, M + 1); ++N) {
            const SectorBasis b(M, N);
            const auto states = enumerate_bethe_states(M, N);
            Eigen::MatrixXcd U(static_cast<Eigen::Index>(b.size()), static_cast<Eigen::Index>(states.size()));
            for (std::size_t k = 0; k < states.size(); ++k)
                U.col(static_cast<Eigen::Index>(k)) =
                    build_state_vector(b, states[k].exp_roots()) / std::sqrt(norm_squared(states[k]));
            const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(U.cols(), U.cols());
            EXPECT_LT((U.adjoint() * U - I).cwiseAbs().maxCoeff(), 1e-9);
            EXPECT_LT((U * U.adjoint() - I).cwiseAbs().maxCoeff(), 1e-9);
        }
}

TEST(StateVector, GramDeterminantOfNormalizedStates) {
    for (int M = 1; M <= 6; ++M)
        for (int N = 1; N <= 2; ++N) {
            const SectorBasis b(M, N);
            const auto states = enumerate_bethe_states(M, N);
            Eigen::MatrixXcd U(static_cast<Eigen::Index>(b.size()), static_cast<Eigen::Index>(states.size()));
            for (std::size_t k = 0; k < states.size(); ++k) {
                const Eigen::VectorXcd psi = build_state_vector(b, states[k].exp_roots());
                U.col(static_cast<Eigen::Index>(k)) = psi / psi.norm();
            }
            EXPECT_NEAR(std::abs((U.adjoint() * U).determinant()), 1.0, 1e-6);
        }
}

TEST(SectorBasis, BasisStatesAreOrthonormal) {
    const SectorBasis b(6, 3);
    auto g = testing::rng_for(40);
    for (int t = 0; t < 50; ++t) {
        const auto i = static_cast<Eigen::Index>(testing::uniform_int(g, 0, static_cast<int>(b.size()) - 1));
        const auto j = static_cast<Eigen::Index>(testing::uniform_int(g, 0, static_cast<int>(b.size()) - 1));
        const Eigen::VectorXd ei = Eigen::VectorXd::Unit(static_cast<Eigen::Index>(b.size()), i);
        const Eigen::VectorXd ej = Eigen::VectorXd::Unit(static_cast<Eigen::Index>(b.size()), j);
        EXPECT_EQ(ei.dot(ej), i == j ? 1.0 : 0.0);
        EXPECT_EQ(b.mask(static_cast<std::size_t>(i)) == b.mask(static_cast<std::size_t>(j)), i == j);
    }
}

TEST(ThermalPropagator, IdentityAndSemigroup) {
    const ThermalPropagator E(build_hamiltonian(5, 2));
    const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(15, 15);
    EXPECT_LT((E(0.0) - I).cwiseAbs().maxCoeff(), 1e-13);
    EXPECT_LT((E(0.3) * E(Complex(0.5, 0.2)) - E(Complex(0.8, 0.2))).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Operators, ProjectorAndCreation) {
    const SectorBasis small(4, 1), big(4, 3);
    const Eigen::VectorXd p = projector_empty_prefix(big, 2);
    EXPECT_EQ(p.sum(), 1.0);  // only {4,3,2}
    const Eigen::MatrixXd F = domain_wall_creation(small, big, 2);
    EXPECT_EQ(F.sum(), 3.0);  // sites 2, 3, 4
    EXPECT_THROW(domain_wall_creation(small, big, 1), DomainError);
    // F^T F is the projector onto (N-n)-configurations with sites 0..n-1 empty.
    for (int M = 2; M <= 6; ++M)
        for (int N = 1; N <= 3; ++N)
            for (int n = 0; n <= N && N <= M + 1; ++n) {
                const SectorBasis from(M, N - n), to(M, N);
                const Eigen::MatrixXd FF = domain_wall_creation(from, to, n);
                const Eigen::MatrixXd P = projector_empty_prefix(from, n).asDiagonal();
                EXPECT_EQ(FF.transpose() * FF, P);
            }
}

TEST(Oracle, WalkerAtZeroBetaIsIdentity) {
    const Complex v = oracle_correlator(CorrelatorKind::walker, {4, 2, 0, 0.0, {3, 1}, {3, 1}});
    EXPECT_NEAR(std::abs(v - 1.0), 0.0, 1e-13);
    const Complex w = oracle_correlator(CorrelatorKind::walker, {4, 2, 0, 0.0, {3, 1}, {3, 0}});
    EXPECT_NEAR(std::abs(w), 0.0, 1e-13);
    EXPECT_THROW(oracle_correlator(CorrelatorKind::walker, {4, 2, 0, 0.0, {3}, {3, 1}}), DomainError);
}

} // namespace
} // namespace xx0
