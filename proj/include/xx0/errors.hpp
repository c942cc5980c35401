// Copyright 2026 The xx0kit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace xx0 {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the documented domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// An enumeration or spectral sum would exceed its item budget.
class EnumerationLimitError : public Error {
public:
    EnumerationLimitError(const std::string& what, std::size_t budget)
        : Error(what + " (budget " + std::to_string(budget) + ")"), budget_(budget) {}

    std::size_t budget() const noexcept { return budget_; }

private:
    std::size_t budget_;
};

/// Coincident points make a ratio of alternants 0/0.
class DegenerateInputError : public Error {
public:
    using Error::Error;
};

/// An exact division left a remainder. Indicates a bug, never a user error.
class InexactDivisionError : public Error {
public:
    using Error::Error;
};

/// Default ceiling on the number of items an enumerator may produce.
inline constexpr std::size_t kDefaultEnumerationBudget = 10'000'000;

} // namespace xx0
