#pragma once

#include <stdexcept>
#include <string>

namespace sigdef {

/** Base class for all domain errors raised by the library. */
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An (a,b) slice of a correlation table does not sum to one.
class NormalizationError : public Error {
public:
    using Error::Error;
};

class NegativeProbability : public Error {
public:
    using Error::Error;
};

/// Mixture weights are negative or do not sum to one.
class WeightError : public Error {
public:
    using Error::Error;
};

class UnknownStrategy : public Error {
public:
    using Error::Error;
};

/// A scalar argument lies outside the domain of the operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Two independent computations of the same quantity disagree.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

/// No nonnegative decomposition reproduces the requested correlation.
class InfeasibleError : public Error {
public:
    using Error::Error;
};

class NoCrossover : public Error {
public:
    using Error::Error;
};

/// Malformed serialized input (JSON shape, missing entries).
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace sigdef
