#pragma once

#include <stdexcept>

namespace qcorr {

// Base class for every error raised by this library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A type invariant failed at construction. The message names the violated
// invariant and the measured violation.
class ValidationError : public Error {
  public:
    using Error::Error;
};

// --- state construction -------------------------------------------------

class InvalidWeights : public Error {
  public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
  public:
    using Error::Error;
};

class DuplicateTerm : public Error {
  public:
    using Error::Error;
};

// --- eigensolver ---------------------------------------------------------

class NonHermitianInput : public Error {
  public:
    using Error::Error;
};

class ConvergenceFailure : public Error {
  public:
    using Error::Error;
};

// --- measurement statistics ----------------------------------------------

class DimensionMismatch : public Error {
  public:
    using Error::Error;
};

class ZeroProbabilityOutcome : public Error {
  public:
    using Error::Error;
};

// --- information measures ------------------------------------------------

class NotADistribution : public Error {
  public:
    using Error::Error;
};

class MarginalsNotIdentical : public Error {
  public:
    using Error::Error;
};

class CrossCheckFailure : public Error {
  public:
    using Error::Error;
};

// --- file handling ---------------------------------------------------------

class IoError : public Error {
  public:
    using Error::Error;
};

class SchemaError : public Error {
  public:
    using Error::Error;
};

}  // namespace qcorr
