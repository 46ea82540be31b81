#ifndef BARYSPEC_ERRORS_HPP
#define BARYSPEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace baryspec {

// Bad input to a constructor or operation (out-of-range vertex, self-loop,
// malformed interval, non-symmetric matrix where symmetry is required, ...).
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A configured resource cap would be exceeded.  The message names the cap.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An iterative numerical routine failed to converge.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace baryspec

#endif
