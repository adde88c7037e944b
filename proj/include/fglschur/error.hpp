#pragma once

#include <stdexcept>
#include <string>

namespace fglschur {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mismatched truncations, out-of-range cutoffs, bad sizes.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

/// A substitution or formal operation that would not converge at the cutoff.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

class NotInvertibleError : public Error {
 public:
  using Error::Error;
};

/// Exact division left a nonzero remainder.
class DivisibilityError : public Error {
 public:
  using Error::Error;
};

/// A triangular solve met a basis that is not triangular.
class SolverError : public Error {
 public:
  using Error::Error;
};

/// Residual of a basis expansion that no basis element can absorb.
class NotInSpanError : public Error {
 public:
  using Error::Error;
};

}  // namespace fglschur
