#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bettichar/rational.hpp"

namespace bettichar {

/// Element of Z^r: a multidegree. Also used for twists, so entries may be
/// negative even though variable degrees are weight-positive.
struct DegreeVector {
  std::vector<long long> entries;

  DegreeVector() = default;
  explicit DegreeVector(std::vector<long long> e) : entries(std::move(e)) {}
  DegreeVector(std::initializer_list<long long> e) : entries(e) {}

  static DegreeVector zero(std::size_t rank) {
    return DegreeVector(std::vector<long long>(rank, 0));
  }

  std::size_t rank() const { return entries.size(); }
  bool isZero() const;

  auto operator<=>(const DegreeVector&) const = default;

  DegreeVector operator+(const DegreeVector& rhs) const;
  DegreeVector operator-(const DegreeVector& rhs) const;
  DegreeVector negated() const;

  /// "(2,1)" -- comma separated entries in parentheses.
  std::string toString() const;
};

/// Exponent vector over the ring's variables. The comparison operator is
/// the canonical monomial order of this library: lexicographic on the
/// exponent vector. It orders term storage, degreewise enumeration, and
/// the subsets in the Taylor complex.
struct Monomial {
  std::vector<int> exponents;

  Monomial() = default;
  explicit Monomial(std::vector<int> e) : exponents(std::move(e)) {}
  Monomial(std::initializer_list<int> e) : exponents(e) {}

  static Monomial unit(std::size_t varCount) {
    return Monomial(std::vector<int>(varCount, 0));
  }
  static Monomial variable(std::size_t index, std::size_t varCount);

  std::size_t varCount() const { return exponents.size(); }
  bool isUnit() const;

  auto operator<=>(const Monomial&) const = default;

  Monomial operator*(const Monomial& rhs) const;
  bool divides(const Monomial& rhs) const;
  /// Requires divides(*this) from the caller's side: rhs / *this.
  Monomial dividedInto(const Monomial& rhs) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
};

/// Multivariate polynomial ring over Q with a positive Z^r grading.
/// Positivity is certified by a weight vector w with w . deg(x_i) > 0 for
/// every variable, which guarantees finitely many monomials per degree.
class GradedRing {
public:
  GradedRing(std::vector<std::string> variableNames,
             std::vector<DegreeVector> variableDegrees,
             DegreeVector positivityWeight);

  /// Standard Z-grading: every variable in degree (1), weight (1).
  static GradedRing standard(std::vector<std::string> variableNames);

  std::size_t varCount() const { return variableNames_.size(); }
  std::size_t gradingRank() const { return weight_.rank(); }
  const std::string& variableName(std::size_t i) const {
    return variableNames_[i];
  }
  const std::vector<std::string>& variableNames() const {
    return variableNames_;
  }
  const DegreeVector& variableDegree(std::size_t i) const {
    return variableDegrees_[i];
  }
  const DegreeVector& weight() const { return weight_; }

  /// w . j, the weight of a degree; strictly positive on variable degrees.
  long long weightOf(const DegreeVector& j) const;

private:
  std::vector<std::string> variableNames_;
  std::vector<DegreeVector> variableDegrees_;
  DegreeVector weight_;
};

/// Sparse polynomial over Q in canonical form: at most one term per
/// monomial and no zero coefficients stored. Immutable in spirit; the
/// mutating helpers keep the canonical form.
class Polynomial {
public:
  Polynomial() = default;

  static Polynomial constant(const Rational& c, std::size_t varCount);
  static Polynomial term(const Monomial& m, const Rational& c);
  static Polynomial variable(std::size_t index, std::size_t varCount);

  bool isZero() const { return terms_.empty(); }
  std::size_t termCount() const { return terms_.size(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  /// Rational value if the polynomial is constant (zero counts as 0);
  /// nullopt when any term has a nonunit monomial.
  std::optional<Rational> constantValue() const;

  void addTerm(const Monomial& m, const Rational& c);

  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial scaled(const Rational& c) const;

  bool operator==(const Polynomial& rhs) const { return terms_ == rhs.terms_; }

private:
  std::map<Monomial, Rational> terms_;
};

enum class HomogeneityKind { zero, homogeneous, mixed };

/// Three-way homogeneity answer: the zero polynomial is homogeneous of
/// every degree and is reported separately so call sites can treat it as
/// compatible with any required degree.
struct Homogeneity {
  HomogeneityKind kind = HomogeneityKind::zero;
  DegreeVector degree;  // meaningful only when kind == homogeneous

  bool compatibleWith(const DegreeVector& j) const {
    if (kind == HomogeneityKind::zero) return true;
    return kind == HomogeneityKind::homogeneous && degree == j;
  }
};

DegreeVector degreeOfMonomial(const Monomial& m, const GradedRing& ring);

Homogeneity homogeneity(const Polynomial& f, const GradedRing& ring);

/// All monomials of multidegree j, in canonical order. Complete and
/// duplicate-free; empty when no monomial has that degree.
std::vector<Monomial> monomialsOfDegree(const DegreeVector& j,
                                        const GradedRing& ring);

/// Substitutes x_v by sum_u A(u,v) x_u and expands exactly. When A is
/// degree preserving this maps homogeneous polynomials to homogeneous
/// polynomials of the same degree.
Polynomial linearSubstitute(const Polynomial& f, const RationalMatrix& action,
                            const GradedRing& ring);

/// Text syntax: terms joined by '+'/'-', coefficients as integers or a/b,
/// '*' products and '^' powers, e.g. "-3/2*x1^2*x2". Whitespace is
/// insignificant.
Polynomial parsePolynomial(const std::string& text, const GradedRing& ring);
std::string formatPolynomial(const Polynomial& f, const GradedRing& ring);

}  // namespace bettichar
