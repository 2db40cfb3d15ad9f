#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace kemeny {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// exactalg
struct ParseError : Error {
    using Error::Error;
};
struct DivisionNotExact : Error {
    using Error::Error;
};
struct DivisionByZeroFunction : Error {
    using Error::Error;
};
struct PoleAtPoint : Error {
    using Error::Error;
};

// chain
struct ChainError : Error {
    using Error::Error;
};
struct NotStochastic : ChainError {
    NotStochastic(std::size_t row, const std::string& sum)
        : ChainError("row " + std::to_string(row) + " sums to " + sum + ", expected 1"), row(row) {}
    std::size_t row;
};
struct NegativeEntry : ChainError {
    using ChainError::ChainError;
};
struct DimensionMismatch : ChainError {
    using ChainError::ChainError;
};
struct DuplicateStateLabel : ChainError {
    using ChainError::ChainError;
};
struct NotIrreducible : ChainError {
    NotIrreducible(std::string msg, std::vector<std::vector<std::size_t>> comps)
        : ChainError(std::move(msg)), components(std::move(comps)) {}
    std::vector<std::vector<std::size_t>> components;
};
struct UnknownState : ChainError {
    using ChainError::ChainError;
};

// mcsim
struct StepCapExceeded : Error {
    using Error::Error;
};

// hitting
struct ConstancyViolation : Error {
    using Error::Error;
};

}  // namespace kemeny
