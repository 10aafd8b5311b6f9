#pragma once

#include <stdexcept>
#include <string>

namespace qsched {

// Base class for all toolkit errors.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Invalid user-supplied configuration (bad ranges, malformed files,
// unwritable paths). CLI exit code 2.
class ConfigError : public Error {
  public:
    using Error::Error;
};

// Problem too large for an exact/state-vector path (n > 24). CLI exit code 3.
class SizeLimitError : public Error {
  public:
    using Error::Error;
};

// Caller broke an API precondition (length mismatch, index out of range).
class ContractError : public Error {
  public:
    using Error::Error;
};

// Non-finite value where one is impossible on valid input. CLI exit code 4.
class NumericalError : public Error {
  public:
    using Error::Error;
};

} // namespace qsched
