#pragma once

#include <stdexcept>
#include <string>

namespace cayley {

// Thrown when an enumeration would exceed its operation budget.
struct ResourceLimitError : std::runtime_error {
    explicit ResourceLimitError(const std::string& what)
        : std::runtime_error(what) {}
};

}  // namespace cayley
