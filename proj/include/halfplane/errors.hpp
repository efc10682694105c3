#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace halfplane {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid scenario / run configuration (bad angle range, malformed config file, ...).
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(what) {}
};

// Argument outside the mathematical domain of an operation (e.g. Im(omega) <= 0).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

// Raw kernel evaluation too close to a pole. Carries the offending pole.
class PoleProximityError : public Error {
public:
    PoleProximityError(const std::string& what, std::complex<double> pole_location)
        : Error(what), pole(pole_location) {}
    std::complex<double> pole;
};

// Pointwise evaluation of a discontinuous field component exactly on a jump ray.
class JumpLineError : public Error {
public:
    explicit JumpLineError(const std::string& what) : Error(what) {}
};

// Requested tolerance could not be reached; carries the achieved estimate.
class PrecisionError : public Error {
public:
    PrecisionError(const std::string& what, double achieved_bound)
        : Error(what), achieved(achieved_bound) {}
    double achieved;
};

// Finite-difference stencil crosses the screen or leaves the domain.
class GeometryError : public Error {
public:
    explicit GeometryError(const std::string& what) : Error(what) {}
};

// Unknown suite id, bad CLI invocation, ...
class UsageError : public Error {
public:
    explicit UsageError(const std::string& what) : Error(what) {}
};

}  // namespace halfplane
