#pragma once

#include <stdexcept>
#include <string>

namespace bdt {

// Base of every error raised by the library. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An argument lies outside the range an operation accepts (e.g. n >= n_k).
class RangeError : public Error {
public:
    using Error::Error;
};

// Exact integer arithmetic left the representable range.
class OverflowError : public Error {
public:
    using Error::Error;
};

// A digit word or schedule violates its invariants.
class ValidityError : public Error {
public:
    using Error::Error;
};

// A point outside the domain of a partially defined map.
class DomainError : public Error {
public:
    using Error::Error;
};

// Operator dimensions disagree.
class DimensionError : public Error {
public:
    using Error::Error;
};

// Malformed input, e.g. a non-unimodular scalar or an unparsable string.
class InputError : public Error {
public:
    using Error::Error;
};

// A documented precondition was not met by the caller.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// An internal computation produced a result contradicting its own contract.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

} // namespace bdt
