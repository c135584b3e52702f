#pragma once

#include <stdexcept>
#include <string>

namespace hesstop {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial text.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Polynomial text whose terms do not share a single total degree.
class NotHomogeneous : public Error {
 public:
  NotHomogeneous(int first_degree, int other_degree)
      : Error("polynomial is not homogeneous: terms of degree " + std::to_string(first_degree) +
              " and " + std::to_string(other_degree)),
        first_(first_degree),
        other_(other_degree) {}
  int first_degree() const { return first_; }
  int other_degree() const { return other_; }

 private:
  int first_;
  int other_;
};

/// Argument outside the documented range of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Arithmetic between nonzero polynomials of different degrees.
class DegreeMismatch : public Error {
 public:
  DegreeMismatch(int lhs, int rhs)
      : Error("degree mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

/// A hypothesis of a certification step could not be certified.
class PreconditionFailed : public Error {
 public:
  PreconditionFailed(std::string hypothesis, const std::string& detail)
      : Error("precondition failed: " + hypothesis + (detail.empty() ? "" : " (" + detail + ")")),
        hypothesis_(std::move(hypothesis)) {}
  const std::string& hypothesis() const { return hypothesis_; }

 private:
  std::string hypothesis_;
};

/// The quadratic form is not hyperbolic at the sampled point.
class NotHyperbolicHere : public Error {
 public:
  NotHyperbolicHere(double x, double y, double discriminant)
      : Error("form is not hyperbolic at (" + std::to_string(x) + ", " + std::to_string(y) +
              "), discriminant " + std::to_string(discriminant)) {}
};

/// Adaptive angle tracking could not meet its jump bound.
class RefinementLimit : public Error {
 public:
  using Error::Error;
};

/// Both candidate lines are equally close to the previous one.
class AmbiguousBranch : public Error {
 public:
  using Error::Error;
};

/// A sub-certificate of a census row failed.
class CertificationFailed : public Error {
 public:
  CertificationFailed(std::string stage, const std::string& detail)
      : Error("certification failed at " + stage + (detail.empty() ? "" : ": " + detail)),
        stage_(std::move(stage)) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

}  // namespace hesstop
