// Copyright 2026 The xx0kit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <numeric>
#include <string>
#include <vector>

#include "xx0/bigint.hpp"
#include "xx0/errors.hpp"

namespace xx0 {

/// Weakly decreasing tuple of non-negative integers. Trailing zeros are not
/// stored, so (2,1,0) and (2,1) are the same partition.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0) throw DomainError("partition parts must be non-negative");
            if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
        }
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    /// Number of nonzero parts.
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    /// i-th part (0-based); zero beyond the length.
    int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }
    int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

    /// Parts padded with zeros to exactly n entries; throws if longer.
    std::vector<int> padded(std::size_t n) const {
        if (parts_.size() > n) throw DomainError("partition longer than requested padding");
        std::vector<int> p(parts_);
        p.resize(n, 0);
        return p;
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
        return s + ")";
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// Strictly decreasing tuple of non-negative integers of fixed length.
class StrictPartition {
public:
    StrictPartition() = default;
    StrictPartition(std::initializer_list<int> parts) : StrictPartition(std::vector<int>(parts)) {}
    explicit StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0) throw DomainError("strict partition parts must be non-negative");
            if (i > 0 && parts_[i] >= parts_[i - 1]) throw DomainError("strict partition parts must be strictly decreasing");
        }
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t size() const noexcept { return parts_.size(); }
    int operator[](std::size_t i) const { return parts_.at(i); }

    friend bool operator==(const StrictPartition&, const StrictPartition&) = default;
    friend auto operator<=>(const StrictPartition&, const StrictPartition&) = default;

private:
    std::vector<int> parts_;
};

/// Transpose of the Young diagram.
inline Partition conjugate(const Partition& p) {
    std::vector<int> c(static_cast<std::size_t>(p.largest()), 0);
    for (int part : p.parts())
        for (int k = 0; k < part; ++k) ++c[k];
    return Partition(std::move(c));
}

/// mu_j = lambda_j + N - j (1-based j), the down-spin coordinates of lambda.
inline StrictPartition strict_from(const Partition& p, int N) {
    if (N < 0 || p.length() > static_cast<std::size_t>(N))
        throw DomainError("strict_from: partition " + p.to_string() + " has more than N parts");
    std::vector<int> mu(static_cast<std::size_t>(N));
    for (int j = 0; j < N; ++j) mu[j] = p[j] + N - 1 - j;
    return StrictPartition(std::move(mu));
}

/// Inverse of strict_from: lambda_j = mu_j - N + j.
inline Partition partition_from_strict(const StrictPartition& mu) {
    const int N = static_cast<int>(mu.size());
    std::vector<int> lam(mu.size());
    for (int j = 0; j < N; ++j) lam[j] = mu[j] - (N - 1 - j);
    return Partition(std::move(lam));
}

/// All partitions with largest part <= max_part and at most max_len parts,
/// in lexicographically descending order of the zero-padded tuples.
class PartitionsInBox {
public:
    PartitionsInBox(int max_part, int max_len) : max_part_(max_part), max_len_(max_len) {
        if (max_part < 0 || max_len < 0) throw DomainError("partition box sides must be non-negative");
    }

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Partition;
        using difference_type = std::ptrdiff_t;
        using pointer = const Partition*;
        using reference = const Partition&;

        iterator() = default;
        iterator(int max_part, int max_len) : parts_(static_cast<std::size_t>(max_len), max_part), current_(parts_) {}

        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }

        iterator& operator++() {
            // Decrement the rightmost positive part and raise everything after
            // it to the new value: the lexicographic predecessor.
            std::size_t i = parts_.size();
            while (i > 0 && parts_[i - 1] == 0) --i;
            if (i == 0) {
                done_ = true;
                return *this;
            }
            const int v = --parts_[i - 1];
            std::fill(parts_.begin() + static_cast<std::ptrdiff_t>(i), parts_.end(), v);
            current_ = Partition(parts_);
            return *this;
        }
        void operator++(int) { ++*this; }

        friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_; }

    private:
        std::vector<int> parts_;
        Partition current_;
        bool done_ = true;
        friend class PartitionsInBox;
    };

    iterator begin() const {
        iterator it(max_part_, max_len_);
        it.done_ = false;
        return it;
    }
    iterator end() const { return iterator(); }

    /// C(max_part + max_len, max_len).
    BigInt size() const { return binomial(max_part_ + max_len_, max_len_); }

private:
    int max_part_;
    int max_len_;
};

inline PartitionsInBox enumerate_partitions_in_box(int max_part, int max_len) { return {max_part, max_len}; }

struct BoxDims {
    int L = 0;
    int N = 0;
    int P = 0;

    void validate() const {
        if (L < 0 || N < 0 || P < 0) throw DomainError("box sides must be non-negative");
    }
    friend bool operator==(const BoxDims&, const BoxDims&) = default;
};

/// Dense rows x cols array of non-negative integers, weakly decreasing along
/// rows and columns.
class PlanePartition {
public:
    PlanePartition() = default;
    PlanePartition(int rows, int cols) : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows * cols), 0) {}
    PlanePartition(int rows, int cols, std::vector<int> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (entries_.size() != static_cast<std::size_t>(rows * cols)) throw DomainError("plane partition shape mismatch");
    }

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    int operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i * cols_ + j)]; }
    int& operator()(int i, int j) { return entries_[static_cast<std::size_t>(i * cols_ + j)]; }
    const std::vector<int>& entries() const noexcept { return entries_; }

    int volume() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

    bool is_plane_partition() const {
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) {
                const int v = (*this)(i, j);
                if (v < 0) return false;
                if (i + 1 < rows_ && (*this)(i + 1, j) > v) return false;
                if (j + 1 < cols_ && (*this)(i, j + 1) > v) return false;
            }
        return true;
    }

    /// Rows weakly decreasing, columns strictly decreasing.
    bool is_column_strict() const {
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) {
                const int v = (*this)(i, j);
                if (v < 0) return false;
                if (i + 1 < rows_ && (*this)(i + 1, j) >= v) return false;
                if (j + 1 < cols_ && (*this)(i, j + 1) > v) return false;
            }
        return true;
    }

    friend bool operator==(const PlanePartition&, const PlanePartition&) = default;
    friend auto operator<=>(const PlanePartition&, const PlanePartition&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<int> entries_;
};

namespace detail {

// Fills cells row-major. Each cell is bounded by P, by its left neighbour,
// and by its upper neighbour (minus one in the column-strict case).
template <class Visit>
std::size_t fill_plane_partitions(const BoxDims& b, bool column_strict, std::size_t budget, Visit&& visit) {
    b.validate();
    PlanePartition pp(b.L, b.N);
    std::size_t count = 0;
    const int cells = b.L * b.N;
    std::function<void(int)> rec = [&](int cell) {
        if (cell == cells) {
            if (++count > budget) throw EnumerationLimitError("plane partition enumeration", budget);
            visit(static_cast<const PlanePartition&>(pp));
            return;
        }
        const int i = cell / b.N;
        const int j = cell % b.N;
        int hi = b.P;
        if (j > 0) hi = std::min(hi, pp(i, j - 1));
        if (i > 0) hi = std::min(hi, pp(i - 1, j) - (column_strict ? 1 : 0));
        for (int v = hi; v >= 0; --v) {
            pp(i, j) = v;
            rec(cell + 1);
        }
        pp(i, j) = 0;
    };
    rec(0);
    return count;
}

} // namespace detail

/// Calls visit(pp) for every plane partition in the L x N x P box; returns the count.
template <class Visit>
std::size_t for_each_plane_partition(const BoxDims& b, Visit&& visit, std::size_t budget = kDefaultEnumerationBudget) {
    return detail::fill_plane_partitions(b, false, budget, std::forward<Visit>(visit));
}

/// Calls visit(pp) for every column-strict plane partition in the box; returns the count.
template <class Visit>
std::size_t for_each_column_strict_pp(const BoxDims& b, Visit&& visit, std::size_t budget = kDefaultEnumerationBudget) {
    return detail::fill_plane_partitions(b, true, budget, std::forward<Visit>(visit));
}

inline std::vector<PlanePartition> enumerate_plane_partitions(const BoxDims& b,
                                                              std::size_t budget = kDefaultEnumerationBudget) {
    std::vector<PlanePartition> out;
    for_each_plane_partition(b, [&](const PlanePartition& pp) { out.push_back(pp); }, budget);
    return out;
}

inline std::vector<PlanePartition> enumerate_column_strict_pp(const BoxDims& b,
                                                              std::size_t budget = kDefaultEnumerationBudget) {
    std::vector<PlanePartition> out;
    for_each_column_strict_pp(b, [&](const PlanePartition& pp) { out.push_back(pp); }, budget);
    return out;
}

/// Adds rows-1-i to every entry of row i, turning a plane partition into a
/// column-strict one.
inline PlanePartition add_staircase(const PlanePartition& pp) {
    PlanePartition r = pp;
    for (int i = 0; i < pp.rows(); ++i)
        for (int j = 0; j < pp.cols(); ++j) r(i, j) += pp.rows() - 1 - i;
    return r;
}

/// Number of families of pairwise vertex-disjoint lattice paths, path i from
/// (0, a_i) to (b_i, b_i) with unit east and south steps.
///
/// All but the last path are enumerated explicitly; the last one is counted
/// by a dynamic program on the grid with the earlier paths' vertices removed.
inline BigInt count_lattice_path_families(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) throw DomainError("path endpoints must have equal length");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < 0 || b[i] < 0) throw DomainError("path endpoints must be non-negative");
        if (i > 0 && (a[i] <= a[i - 1] || b[i] <= b[i - 1])) throw DomainError("path endpoints must be strictly increasing");
    }
    const std::size_t S = a.size();
    if (S == 0) return 1;
    const int W = *std::max_element(b.begin(), b.end()) + 1;
    const int H = std::max(*std::max_element(a.begin(), a.end()), W - 1) + 1;
    std::vector<char> used(static_cast<std::size_t>(W * H), 0);
    auto at = [&](int x, int y) -> char& { return used[static_cast<std::size_t>(y * W + x)]; };

    auto count_last = [&](int ay, int bx) {
        // Paths with x increasing and y decreasing from (0, ay) to (bx, bx).
        if (ay < bx) return BigInt(0);
        std::vector<BigInt> ways(static_cast<std::size_t>(W * H), 0);
        auto w = [&](int x, int y) -> BigInt& { return ways[static_cast<std::size_t>(y * W + x)]; };
        for (int y = ay; y >= bx; --y)
            for (int x = 0; x <= bx; ++x) {
                if (at(x, y)) continue;
                if (x == 0 && y == ay) {
                    w(x, y) = 1;
                    continue;
                }
                BigInt s = 0;
                if (x > 0) s += w(x - 1, y);
                if (y < ay) s += w(x, y + 1);
                w(x, y) = s;
            }
        return BigInt(w(bx, bx));
    };

    BigInt total = 0;
    std::function<void(std::size_t)> place = [&](std::size_t i) {
        if (i + 1 == S) {
            total += count_last(a[i], b[i]);
            return;
        }
        const int ay = a[i];
        const int bx = b[i];
        if (ay < bx) return;
        std::function<void(int, int)> walk = [&](int x, int y) {
            if (at(x, y)) return;
            at(x, y) = 1;
            if (x == bx && y == bx)
                place(i + 1);
            else {
                if (x < bx) walk(x + 1, y);
                if (y > bx) walk(x, y - 1);
            }
            at(x, y) = 0;
        };
        walk(0, ay);
    };
    place(0);
    return total;
}

} // namespace xx0
