#pragma once

#include <stdexcept>
#include <string>

namespace axisym {

/// Invalid parameters supplied by the caller or a config file.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An operation was applied outside the region where it is defined.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A hypothesis of an inequality check does not hold for the given input.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Non-finite values appeared during time integration.
class BlowUpError : public std::runtime_error {
public:
    BlowUpError(const std::string& what, double t) : std::runtime_error(what), t_(t) {}
    double time() const { return t_; }

private:
    double t_;
};

/// A banded solve failed or the Fourier mode was singular.
class GaugeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An iterative procedure hit its iteration cap.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace axisym
