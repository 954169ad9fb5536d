#pragma once

#include <stdexcept>
#include <string>

namespace tiso {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Angle at a Rutherford pole (0 or 180 degrees).
class DivergenceError : public DomainError {
  public:
    using DomainError::DomainError;
};

/// Spin and statistics disagree (e.g. fermion statistics with integer spin).
class ConsistencyError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

class RootNotFound : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed catalog / constants input.
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace tiso
