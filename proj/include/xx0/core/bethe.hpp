// Copyright 2026 The xx0kit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "xx0/bigint.hpp"
#include "xx0/errors.hpp"
#include "xx0/matrix.hpp"

namespace xx0 {

/// Ring of M+1 sites 0..M carrying N down spins.
struct ChainParams {
    int M = 1;
    int N = 0;

    /// M + 1 - N: the largest part of a partition describing a state.
    int K() const noexcept { return M + 1 - N; }

    void validate() const {
        if (M < 1) throw DomainError("chain needs M >= 1 (at least two sites)");
        if (N < 0 || N > M + 1) throw DomainError("need 0 <= N <= M+1, got N=" + std::to_string(N));
    }
};

/// Largest number of Bethe states a spectral sum may visit.
inline constexpr std::size_t kBetheStateBudget = 1'000'000;

/// Eigenstate of the N-down-spin sector labelled by quantum numbers
/// M >= I_1 > ... > I_N >= 0, with roots theta_j = 2pi/(M+1) (I_j - (N-1)/2).
class BetheState {
public:
    BetheState(int M, std::vector<int> quantum_numbers) : M_(M), I_(std::move(quantum_numbers)) {
        ChainParams{M, static_cast<int>(I_.size())}.validate();
        for (std::size_t j = 0; j < I_.size(); ++j) {
            if (I_[j] < 0 || I_[j] > M) throw DomainError("quantum numbers must lie in 0..M");
            if (j > 0 && I_[j] >= I_[j - 1]) throw DomainError("quantum numbers must be strictly decreasing");
        }
        const double step = 2.0 * std::numbers::pi / (M + 1);
        const int N = static_cast<int>(I_.size());
        theta_.reserve(I_.size());
        for (int i : I_) theta_.push_back(step * (2 * i - (N - 1)) / 2.0);
    }

    int M() const noexcept { return M_; }
    int N() const noexcept { return static_cast<int>(I_.size()); }
    const std::vector<int>& quantum_numbers() const noexcept { return I_; }
    const std::vector<double>& roots() const noexcept { return theta_; }

    /// e^{i theta_j} (the squared spectral parameters u_j^2).
    std::vector<Complex> exp_roots() const {
        std::vector<Complex> z;
        z.reserve(theta_.size());
        for (double t : theta_) z.push_back(std::polar(1.0, t));
        return z;
    }
    /// e^{-i theta_j} (the parameters v_j^{-2} of the conjugate state).
    std::vector<Complex> exp_neg_roots() const {
        std::vector<Complex> z;
        z.reserve(theta_.size());
        for (double t : theta_) z.push_back(std::polar(1.0, -t));
        return z;
    }

    friend bool operator==(const BetheState& a, const BetheState& b) { return a.M_ == b.M_ && a.I_ == b.I_; }

private:
    int M_;
    std::vector<int> I_;
    std::vector<double> theta_;
};

/// I_j = N - j.
inline BetheState ground_state(int M, int N) {
    ChainParams{M, N}.validate();
    std::vector<int> I(static_cast<std::size_t>(N));
    for (int j = 0; j < N; ++j) I[j] = N - 1 - j;
    return BetheState(M, std::move(I));
}

/// -sum_j cos theta_j.
inline double energy(const BetheState& s) {
    double e = 0.0;
    for (double t : s.roots()) e -= std::cos(t);
    return e;
}

/// -sin(pi N/(M+1)) / sin(pi/(M+1)).
inline double ground_state_energy(int M, int N) {
    ChainParams{M, N}.validate();
    const double a = std::numbers::pi / (M + 1);
    return -std::sin(a * N) / std::sin(a);
}

/// All C(M+1, N) states, quantum-number tuples in lexicographically
/// descending order.
inline std::vector<BetheState> enumerate_bethe_states(int M, int N, std::size_t budget = kBetheStateBudget) {
    ChainParams{M, N}.validate();
    if (binomial(M + 1, N) > budget) throw EnumerationLimitError("enumerate_bethe_states", budget);
    std::vector<BetheState> out;
    std::vector<int> I(static_cast<std::size_t>(N));
    for (int j = 0; j < N; ++j) I[j] = M - j;
    while (true) {
        out.emplace_back(M, I);
        // Lexicographic predecessor among strictly decreasing tuples.
        int j = N - 1;
        while (j >= 0 && I[j] == N - 1 - j) --j;
        if (j < 0) break;
        --I[j];
        for (int k = j + 1; k < N; ++k) I[k] = I[k - 1] - 1;
    }
    return out;
}

/// Squared norm (M+1)^N / prod_{m<l} 2(1 - cos(2pi (I_l - I_m)/(M+1))).
inline double norm_squared(const BetheState& s) {
    const int M = s.M();
    const auto& I = s.quantum_numbers();
    double v = std::pow(static_cast<double>(M + 1), s.N());
    const double step = 2.0 * std::numbers::pi / (M + 1);
    for (std::size_t m = 0; m < I.size(); ++m)
        for (std::size_t l = m + 1; l < I.size(); ++l) v /= 2.0 * (1.0 - std::cos(step * (I[l] - I[m])));
    return v;
}

/// max_j |e^{i(M+1) theta_j} - (-1)^{N-1}|.
inline double bethe_equation_residual(const BetheState& s) {
    const double sign = (s.N() % 2 == 1) ? 1.0 : -1.0;
    double r = 0.0;
    for (double t : s.roots()) r = std::max(r, std::abs(std::polar(1.0, (s.M() + 1) * t) - sign));
    return r;
}

} // namespace xx0
