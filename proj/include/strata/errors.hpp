#pragma once

#include <stdexcept>
#include <string>

namespace strata {

/// Input that violates a documented precondition (bad n/k, malformed tree, ...).
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// Refusal to start a computation whose projected size exceeds the configured limits.
class ResourceError : public std::runtime_error {
public:
    ResourceError(const std::string& what, std::string projected)
        : std::runtime_error(what), projected_count(std::move(projected)) {}

    /// Projected cell count (decimal string; may exceed 64 bits).
    std::string projected_count;
};

}  // namespace strata
