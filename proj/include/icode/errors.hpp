#pragma once

#include <stdexcept>
#include <string>

namespace icode {

/// Malformed or inconsistent input (instance, code file, arguments).
class InvalidInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An exhaustive search hit its configured limit. Never replaced by a heuristic answer.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The request is outside what the routine handles (e.g. t != 1 for an oracle).
class Unsupported : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// No closed-form rule applies to the instance; callers fall back to bounds and the oracle.
class UnresolvedCase : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace icode
