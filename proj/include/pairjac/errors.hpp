#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pairjac {

// Argument outside the mathematical domain of an operation (k = 0, 2n < 12, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A precondition on supplied data was violated (e.g. a base prime table too small).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Exact integer result does not fit the 64-bit value representation.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

// Memory, period or node budget exceeded.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Thrown by the cover search when its node or time budget runs out.
// lower_bound() is a proven lower bound on the searched function value,
// never the exact value.
class SearchBudgetExceeded : public ResourceError {
public:
    SearchBudgetExceeded(const std::string& what, std::uint64_t lower_bound)
        : ResourceError(what + " (lower bound only: >= " + std::to_string(lower_bound) + ")"),
          lower_bound_(lower_bound) {}

    std::uint64_t lower_bound() const noexcept { return lower_bound_; }

private:
    std::uint64_t lower_bound_;
};

} // namespace pairjac
