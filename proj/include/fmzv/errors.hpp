#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fmzv {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class NotPrime : public Error {
public:
  using Error::Error;
};

class PrimeMismatch : public Error {
public:
  using Error::Error;
};

class RangeError : public Error {
public:
  using Error::Error;
};

/// Inversion of a zero residue. `position` is the offending slot for batch
/// inversion and 0 for a scalar inversion.
class ZeroInverse : public Error {
public:
  ZeroInverse(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

class VonStaudtPole : public Error {
public:
  using Error::Error;
};

class InfeasibleFamily : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

class DegenerateParameters : public Error {
public:
  using Error::Error;
};

class PoleCancellationFailure : public Error {
public:
  using Error::Error;
};

class AllSamplesSkipped : public Error {
public:
  using Error::Error;
};

} // namespace fmzv
