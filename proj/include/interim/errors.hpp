#pragma once

#include <stdexcept>
#include <string>

namespace interim {

// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Inference requested on a stream with no estimates.
class EmptyStreamError : public Error {
  public:
    using Error::Error;
};

// Nonpositive or nonfinite sampling scale.
class InvalidScaleError : public Error {
  public:
    using Error::Error;
};

// Stream contains a nonfinite estimate.
class InvalidEstimateError : public Error {
  public:
    using Error::Error;
};

// Final-decision operation on a stream whose length differs from the horizon.
class HorizonMismatchError : public Error {
  public:
    using Error::Error;
};

// Prediction requested at or beyond the horizon.
class NothingToPredictError : public Error {
  public:
    using Error::Error;
};

// Malformed or inconsistent configuration.
class InvalidConfigError : public Error {
  public:
    using Error::Error;
};

// Discrepancy between statistics that do not share a name.
class InvalidComparisonError : public Error {
  public:
    using Error::Error;
};

// Input file rejected; carries a 1-based row number when known.
class ParseError : public Error {
  public:
    ParseError(const std::string& what, long row = -1)
        : Error(row >= 0 ? what + " (row " + std::to_string(row) + ")" : what), row_(row) {}

    long row() const { return row_; }

  private:
    long row_;
};

}  // namespace interim
