#ifndef LIEGEO_ERRORS_HPP
#define LIEGEO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace liegeo {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

class NonFiniteValue : public Error {
public:
  using Error::Error;
};

/// A vector handed to an orthonormalization routine was (numerically)
/// dependent on its predecessors.
class DependentInput : public Error {
public:
  using Error::Error;
};

/// The plane spanned by the two inputs is degenerate (Gram determinant
/// below tolerance).
class DegeneratePlane : public Error {
public:
  using Error::Error;
};

/// The metric failed the symmetric positive definite check.  Carries the
/// index (1-based) of the first non-positive leading principal minor, or 0
/// when the symmetry test itself failed.
class MetricNotSpd : public Error {
public:
  MetricNotSpd(const std::string& what, int minor_index)
      : Error(what), minor_index_(minor_index) {}
  int minor_index() const { return minor_index_; }

private:
  int minor_index_;
};

/// Decomposition requested for a derived algebra of unsupported dimension.
class UnsupportedDerivedDim : public Error {
public:
  using Error::Error;
};

/// Two-dimensional derived algebra with a non-vanishing internal bracket.
class NonAbelianDerived : public Error {
public:
  using Error::Error;
};

/// A bracket value escaped the subspace pattern the decomposition relies on.
class ClosureViolation : public Error {
public:
  using Error::Error;
};

/// Operation called on a decomposition of the wrong kind.
class WrongKind : public Error {
public:
  using Error::Error;
};

class NonOrthonormalInput : public Error {
public:
  using Error::Error;
};

/// The nilpotent closed-form check requires all invariant vectors to vanish.
class NotNilpotent : public Error {
public:
  using Error::Error;
};

class BadParameters : public Error {
public:
  using Error::Error;
};

class NoExpectationsForFamily : public Error {
public:
  using Error::Error;
};

/// Malformed input document (missing fields, bad indices, ...).
class ParseError : public Error {
public:
  using Error::Error;
};

}  // namespace liegeo

#endif
