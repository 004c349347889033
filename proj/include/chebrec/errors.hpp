#pragma once

#include <stdexcept>
#include <string>

namespace chebrec {

/// Evaluation point outside [-1, 1].
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Invalid parameters, inadmissible smoothness/order combinations, bad
/// configuration. The CLI maps these to exit code 2.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Smoothness class too rough for the requested derivative order and metric.
class AdmissibilityError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

/// Malformed or inconsistent input data (parse failures, non-finite samples,
/// mismatched quadrature nodes, aliasing). The CLI maps these to exit code 3.
class InputDataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Requested more Clenshaw-Curtis coefficients than the node count resolves.
class AliasingError : public InputDataError {
public:
    using InputDataError::InputDataError;
};

}  // namespace chebrec
