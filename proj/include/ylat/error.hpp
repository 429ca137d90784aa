#ifndef YLAT_ERROR_HPP
#define YLAT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ylat {

// Malformed input: unparsable text, out-of-range index or parameter.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Well-formed input that violates an operation's precondition, e.g. mu not
// contained in lambda.
class PreconditionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// An exactness guarantee failed (non-zero remainder in an exact division).
// Always indicates a bug, never bad input.
class ArithmeticError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace ylat

#endif  // YLAT_ERROR_HPP
