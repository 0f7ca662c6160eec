#pragma once

#include <stdexcept>
#include <string>

namespace advlin {

// Contract violations (bad shapes, invalid parameters, unmet preconditions).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Structural refusals that carry diagnostic context (failing minor index,
// ill-separated clusters, singular Gram, ...).
struct RefusalError : std::runtime_error {
    explicit RefusalError(const std::string& what) : std::runtime_error(what) {}
};

// Budget limits on enumeration/search sizes.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace advlin
