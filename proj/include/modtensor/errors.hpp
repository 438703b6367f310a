#pragma once

#include <stdexcept>
#include <string>

namespace modtensor {

// Input violates a documented precondition (bad weight, wrong system, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Precondition of a specialised algorithm failed (not reflection small, ...).
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Requested something deliberately left unimplemented for this input range.
class UnsupportedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Internal data turned out inconsistent; always a bug.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace modtensor
