#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace biphase {

/// Raised when a parameter, grid or configuration violates its invariants.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised by the linear solvers when elimination meets a zero pivot.
class SolverError : public std::runtime_error {
public:
    SolverError(const std::string& what, std::size_t row)
        : std::runtime_error(what + " (row " + std::to_string(row) + ")"), row_(row) {}

    std::size_t row() const noexcept { return row_; }

private:
    std::size_t row_;
};

}  // namespace biphase
