#pragma once

#include <stdexcept>
#include <string>

namespace zetaline {

// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the documented domain.
class DomainError : public Error {
public:
    using Error::Error;
};

// Evaluation requested at a pole.
class PoleError : public Error {
public:
    using Error::Error;
};

// Requested accuracy could not be reached with the given parameters.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

// Integration path passes too close to a singularity.
class PathError : public Error {
public:
    using Error::Error;
};

// A truncated evaluation is not trustworthy at the requested point.
class PrecisionError : public Error {
public:
    using Error::Error;
};

// Local Euler factor (nearly) vanishes on the circle |z| = 1/p.
class ZeroOnCircleError : public Error {
public:
    using Error::Error;
};

// Numerically impossible value encountered (e.g. |zeta| ~ 0 on Re s = 1).
class AnomalyError : public Error {
public:
    using Error::Error;
};

// Invalid user configuration.
class UsageError : public Error {
public:
    using Error::Error;
};

}  // namespace zetaline
