#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "bettichar/errors.hpp"

namespace bettichar {

/// Exact rational scalar. All coefficient arithmetic in the library is
/// exact; there is no floating point anywhere.
using Rational = mpq_class;

/// Parses "n" or "n/d" with optional leading sign. Throws ParseError on
/// anything else (including a zero denominator).
Rational parseRational(const std::string& text);

/// Canonical form "n" or "n/d" with the sign on the numerator.
std::string formatRational(const Rational& q);

bool isInteger(const Rational& q);

/// Dense matrix over Q. Used for linear actions on the variables and for
/// the tableaux inside exact Gaussian elimination. Columns are images:
/// a matrix A acting on variables sends x_v to sum_u A(u,v) x_u.
class RationalMatrix {
public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  RationalMatrix operator*(const RationalMatrix& rhs) const;
  bool operator==(const RationalMatrix& rhs) const;

  /// Exact inverse by Gauss-Jordan elimination; nullopt when singular.
  std::optional<RationalMatrix> inverse() const;

  bool isIdentity() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace bettichar
