#pragma once

// Exception hierarchy shared by every coprime_lab module. The CLI maps each
// family onto a process exit code (see cli.hpp).

#include <stdexcept>
#include <string>

namespace coprime_lab {

/// Bad arguments: violated preconditions, malformed specs, unknown tags.
class invalid_input_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Request is well-formed but exceeds a declared capacity
/// (sieve limit, brute-force bound, prime-product budget).
class resource_limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact integer arithmetic would wrap.
class overflow_error : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// Argument outside the domain served by an existing table.
class out_of_range_error : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Requested tolerance is tighter than the floating-point model can certify.
class precision_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two independent routes disagreed. Always a bug.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace coprime_lab
