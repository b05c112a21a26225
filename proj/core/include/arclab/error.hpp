#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace arclab {

// Raised when an operation is called outside its documented domain.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Raised when an exhaustive search runs past its node budget.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, std::uint64_t nodes)
        : std::runtime_error(what), nodes_(nodes) {}

    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    std::uint64_t nodes_;
};

}  // namespace arclab
