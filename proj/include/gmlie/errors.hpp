#pragma once

#include <stdexcept>
#include <string>

namespace gmlie {

/// Caller violated a precondition (mismatched variable sets, bad arity, ...).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A 3x3 matrix handed to a logarithm routine is not the exponential of an
/// inner derivation, up to the stored truncation order.
class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace gmlie
