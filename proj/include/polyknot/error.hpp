#pragma once

#include <stdexcept>
#include <string>

namespace polyknot {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an input was violated (bad degree, bad length, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Square lift system whose determinant is below the degeneracy threshold.
class DegenerateSystem : public Error {
 public:
  using Error::Error;
};

/// Two branches of a plane curve meet tangentially, or three meet at a point.
class NonTransverse : public Error {
 public:
  NonTransverse(const std::string& what, double t, double s)
      : Error(what), t_(t), s_(s) {}
  double t() const { return t_; }
  double s() const { return s_; }

 private:
  double t_;
  double s_;
};

/// Malformed or inconsistent data (knot table, PD code text, curve files).
class DataError : public Error {
 public:
  using Error::Error;
};

/// A result failed its own post-verification; indicates a bug or a numerically
/// hopeless input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace polyknot
