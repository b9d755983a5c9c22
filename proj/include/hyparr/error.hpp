#pragma once

#include <stdexcept>
#include <string>

namespace hyparr {

// Base of every error raised by the library. Each subclass corresponds to a
// named failure mode of one operation; callers that only care about
// "something went wrong" catch Error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed user input: bad rational literal, bad JSON, bad sign string.
class ParseError : public Error {
 public:
  using Error::Error;
};

class ZeroNormal : public Error {
 public:
  ZeroNormal() : Error("hyperplane normal is the zero vector") {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class DuplicateHyperplane : public Error {
 public:
  using Error::Error;
};

// Raised instead of starting an exponential enumeration that would not finish.
class SizeLimit : public Error {
 public:
  using Error::Error;
};

class FlatNotInPoset : public Error {
 public:
  using Error::Error;
};

class FaceNotOfChamber : public Error {
 public:
  using Error::Error;
};

// Internal consistency check tripped. Never caused by valid input.
class Inconsistent : public Error {
 public:
  using Error::Error;
};

class VerificationFailure : public Error {
 public:
  using Error::Error;
};

class BadParams : public Error {
 public:
  using Error::Error;
};

class NoClosedForm : public Error {
 public:
  using Error::Error;
};

class NotLinear : public Error {
 public:
  NotLinear() : Error("arrangement is not linear (some offset is nonzero)") {}
};

class HasLine : public Error {
 public:
  HasLine() : Error("chamber contains a line") {}
};

class StatisticalFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace hyparr
