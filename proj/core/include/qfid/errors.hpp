#pragma once

#include <stdexcept>
#include <string>

namespace qfid {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// An iterative kernel hit its sweep cap.
class ConvergenceFailure : public Error {
 public:
  using Error::Error;
};

/// Input to a Hermitian-only kernel is skewed beyond the hermiticity tolerance.
class NotHermitian : public Error {
 public:
  using Error::Error;
};

/// Input to a PSD-only kernel has a materially negative eigenvalue.
class NotPsd : public Error {
 public:
  using Error::Error;
};

/// clamp_spectrum found a value that cannot be rounding noise.
class SpectrumRejected : public Error {
 public:
  using Error::Error;
};

/// A fidelity route produced a value outside [-eps, 1 + eps].
class FidelityOutOfRange : public Error {
 public:
  using Error::Error;
};

/// Malformed text input: matrix files, config files, numbers.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A file could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// An argument is outside the domain of an operation (rank > dim, k_min > k_max, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace qfid
