#pragma once

#include <stdexcept>
#include <string>

namespace blbc {

// Input violates a documented precondition or type invariant.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// A computation broke down numerically (underflow, loss of positivity, ...).
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool condition, const std::string& what)
{
    if (!condition)
        throw ValidationError(what);
}

}  // namespace blbc
