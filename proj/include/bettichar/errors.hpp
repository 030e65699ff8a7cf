#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bettichar {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed textual input: polynomials, complex files, problem files.
class ParseError : public Error {
public:
  using Error::Error;
};

/// Structurally incompatible operands (dimension or basis mismatch).
class ShapeError : public Error {
public:
  using Error::Error;
};

/// Input data violating a documented invariant.
class ValidationError : public Error {
public:
  using Error::Error;
};

/// A linear action outside the scope of the requested operation
/// (e.g. a non-monomial action where standard monomials are needed).
class UnsupportedActionError : public Error {
public:
  using Error::Error;
};

/// A generator set that is not stable under the given group action.
class InstabilityError : public Error {
public:
  using Error::Error;
};

/// The graded factorization A = B X admits no solution. When raised from
/// the character pipeline, carries the homological degree and conjugacy
/// class at which the factorization failed; this is the integrity
/// tripwire for non-equivariant inputs and non-resolutions.
class NoSolutionError : public Error {
public:
  explicit NoSolutionError(const std::string& what, std::size_t column = 0)
      : Error(what), column_(column) {}

  NoSolutionError(const std::string& what, int homologicalDegree,
                  std::string className)
      : Error(what),
        homologicalDegree_(homologicalDegree),
        className_(std::move(className)) {}

  std::size_t column() const { return column_; }
  /// -1 when the failure did not come from the character pipeline.
  int homologicalDegree() const { return homologicalDegree_; }
  const std::string& className() const { return className_; }

private:
  std::size_t column_ = 0;
  int homologicalDegree_ = -1;
  std::string className_;
};

/// A class function whose inner products against a character table are
/// not nonnegative integers, or fail to reconstruct the function.
class NonIntegralDecompositionError : public Error {
public:
  using Error::Error;
};

}  // namespace bettichar
