#pragma once

#include <stdexcept>

namespace critmech {

// Base class for every error raised by the library. Callers that only care
// about "something was rejected" catch this; the CLI maps the concrete
// subclasses onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Superradiant-frame formula asked for a point in the normal phase (or
// mu outside (0, 1]).
class PhaseError : public Error {
 public:
  using Error::Error;
};

// Missing or inconsistent inputs (e.g. N required but absent).
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

// The lower polariton frequency is at or below the configured floor, so
// couplings and the Kerr coefficient would diverge.
class CriticalDivergenceError : public Error {
 public:
  using Error::Error;
};

// Hilbert-space dimension above the configured cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Fock truncation has not converged.
class TruncationError : public Error {
 public:
  using Error::Error;
};

// Input violates a precondition that callers are expected to guarantee
// (e.g. a non-Hermitian matrix handed to the Hermitian eigensolver).
class ContractError : public Error {
 public:
  using Error::Error;
};

class SweepError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace critmech
