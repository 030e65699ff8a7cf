#include "bettichar/rational.hpp"

#include <cctype>

namespace bettichar {

Rational parseRational(const std::string& text) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> void {
    throw ParseError("invalid rational '" + text + "': " + why);
  };
  auto readInteger = [&]() -> std::string {
    std::string out;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-'))
      out += text[pos++];
    std::size_t digits = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      out += text[pos++];
      ++digits;
    }
    if (digits == 0) fail("expected digits");
    return out;
  };

  const std::string num = readInteger();
  std::string den = "1";
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = readInteger();
  }
  if (pos != text.size()) fail("trailing characters");

  mpz_class denominator(den);
  if (denominator == 0) fail("zero denominator");
  Rational q(mpz_class(num), denominator);
  q.canonicalize();
  return q;
}

std::string formatRational(const Rational& q) { return q.get_str(); }

bool isInteger(const Rational& q) { return q.get_den() == 1; }

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
  if (cols_ != rhs.rows_)
    throw ShapeError("rational matrix product: shape mismatch");
  RationalMatrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& lhs = at(r, k);
      if (lhs == 0) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c)
        out.at(r, c) += lhs * rhs.at(k, c);
    }
  return out;
}

bool RationalMatrix::operator==(const RationalMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (data_[i] != rhs.data_[i]) return false;
  return true;
}

std::optional<RationalMatrix> RationalMatrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  const std::size_t n = rows_;
  RationalMatrix work = *this;
  RationalMatrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work.at(pivot, col) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(work.at(pivot, c), work.at(col, c));
        std::swap(inv.at(pivot, c), inv.at(col, c));
      }
    }
    const Rational lead = work.at(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      work.at(col, c) /= lead;
      inv.at(col, c) /= lead;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const Rational f = work.at(r, col);
      if (f == 0) continue;
      for (std::size_t c = 0; c < n; ++c) {
        work.at(r, c) -= f * work.at(col, c);
        inv.at(r, c) -= f * inv.at(col, c);
      }
    }
  }
  return inv;
}

bool RationalMatrix::isIdentity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (at(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

}  // namespace bettichar
