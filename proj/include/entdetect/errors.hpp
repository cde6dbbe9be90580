#pragma once

#include <stdexcept>
#include <string>

namespace entdetect {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class NonSquareError : public Error {
 public:
  using Error::Error;
};

class NotHermitianError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

class NotPsdError : public Error {
 public:
  using Error::Error;
};

class SingularBelowCutoffError : public Error {
 public:
  using Error::Error;
};

class InvalidStateError : public Error {
 public:
  using Error::Error;
};

class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

class NotBalancedError : public Error {
 public:
  using Error::Error;
};

class NotFullLocalRankError : public Error {
 public:
  using Error::Error;
};

class NoConvergenceError : public Error {
 public:
  NoConvergenceError(const std::string& what, double residual)
      : Error(what), residual(residual) {}
  double residual;
};

class ZeroDenominatorError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace entdetect
