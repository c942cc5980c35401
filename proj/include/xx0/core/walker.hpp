// Copyright 2026 The xx0kit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "xx0/combinat.hpp"
#include "xx0/core/bethe.hpp"
#include "xx0/errors.hpp"
#include "xx0/matrix.hpp"

namespace xx0 {

/// Single-walker propagators F_{k;l}(beta) = (1/(M+1)) sum_s e^{beta cos phi_s} e^{i phi_s (k-l)}
/// on the momentum grid phi_s = 2pi/(M+1) (s - (N-1)/2) of the N-walker sector.
///
/// The half-integer shift for even N is the twisted boundary condition the
/// walkers see in that sector.
class AmplitudeTable {
public:
    AmplitudeTable(int M, int sector_N, Complex beta) : M_(M), beta_(beta) {
        ChainParams{M, sector_N}.validate();
        const int S = M + 1;
        const double step = 2.0 * std::numbers::pi / S;
        std::vector<double> phi(static_cast<std::size_t>(S));
        std::vector<Complex> weight(static_cast<std::size_t>(S));
        for (int s = 0; s < S; ++s) {
            phi[s] = step * (2 * s - (sector_N - 1)) / 2.0;
            weight[s] = std::exp(beta * std::cos(phi[s]));
        }
        // F depends on k - l only; d runs over -M..M.
        by_diff_.assign(static_cast<std::size_t>(2 * M + 1), Complex{});
        for (int d = -M; d <= M; ++d) {
            Complex acc = 0.0;
            for (int s = 0; s < S; ++s) acc += weight[s] * std::polar(1.0, phi[s] * d);
            by_diff_[static_cast<std::size_t>(d + M)] = acc / static_cast<double>(S);
        }
    }

    int M() const noexcept { return M_; }
    Complex beta() const noexcept { return beta_; }

    Complex operator()(int k, int l) const {
        if (k < 0 || k > M_ || l < 0 || l > M_) throw DomainError("walker sites must lie in 0..M");
        return by_diff_[static_cast<std::size_t>(k - l + M_)];
    }

private:
    int M_;
    Complex beta_;
    std::vector<Complex> by_diff_;
};

/// <k| e^{-beta H} |l> for a single walker (one down spin).
inline Complex walker_amplitude(int k, int l, Complex beta, int M) { return AmplitudeTable(M, 1, beta)(k, l); }

/// det(F_{muL_k; muR_l}(beta)) for N non-colliding walkers.
inline Complex walker_amplitude_multi(const StrictPartition& muL, const StrictPartition& muR, Complex beta, int M) {
    if (muL.size() != muR.size()) throw DomainError("walker endpoints must have equal length");
    const std::size_t N = muL.size();
    if (N == 0) return 1.0;
    const AmplitudeTable F(M, static_cast<int>(N), beta);
    Matrix<Complex> a(N, N);
    for (std::size_t k = 0; k < N; ++k)
        for (std::size_t l = 0; l < N; ++l) a(k, l) = F(muL[k], muR[l]);
    return lu_determinant(a).value;
}

} // namespace xx0
