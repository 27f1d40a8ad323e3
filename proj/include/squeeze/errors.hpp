#pragma once

#include <stdexcept>
#include <string>

namespace squeeze {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid grid or parameter configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Operands live on incompatible grids or have incompatible extents.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A dilation would read the input outside its support.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// The log-grid does not cover the state (Mellin transform).
class CoverageError : public Error {
 public:
  using Error::Error;
};

/// A series representation failed its convergence test.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

/// Spectral amplitudes times the multiplier do not decay on the E-grid.
class TruncationError : public Error {
 public:
  using Error::Error;
};

/// A ratio whose denominator vanishes (e.g. a parity-forbidden pairing).
class IllConditionedError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Pointwise evaluation of a distribution at its singular point.
class SingularPointError : public Error {
 public:
  using Error::Error;
};

/// The grid cannot resolve the requested basis functions.
class ResolutionError : public Error {
 public:
  using Error::Error;
};

}  // namespace squeeze
