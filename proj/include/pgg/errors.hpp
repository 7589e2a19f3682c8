#pragma once

#include <stdexcept>
#include <string>

namespace pgg {

// Input that violates a documented precondition or fails validation.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// An exact routine was asked to run past its configured size bound.
// Callers must treat this as "refused", never as a negative answer.
class BoundExceeded : public std::runtime_error {
public:
    explicit BoundExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pgg
