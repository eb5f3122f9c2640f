#pragma once

#include <stdexcept>
#include <string>

namespace landauer {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotHermitian : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidState : public Error {
 public:
  using Error::Error;
};

class InvalidBeta : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class OutOfTableRange : public Error {
 public:
  using Error::Error;
};

class PositiveEntropyChange : public Error {
 public:
  using Error::Error;
};

class TruncationUnconverged : public Error {
 public:
  using Error::Error;
};

}  // namespace landauer
