#pragma once

#include <string>
#include <vector>

#include "bettichar/ring.hpp"

namespace bettichar {

/// Graded free module with a fixed ordered basis, recorded by the degrees
/// of its basis elements. Rank zero is legal.
struct GradedFreeModule {
  std::vector<DegreeVector> basisDegrees;

  GradedFreeModule() = default;
  explicit GradedFreeModule(std::vector<DegreeVector> degrees)
      : basisDegrees(std::move(degrees)) {}

  /// R(-d)^copies: `copies` basis elements, all of degree d.
  static GradedFreeModule twisted(const DegreeVector& d, std::size_t copies);

  std::size_t rank() const { return basisDegrees.size(); }
  bool operator==(const GradedFreeModule&) const = default;

  /// Distinct basis degrees in canonical order.
  std::vector<DegreeVector> distinctDegrees() const;
};

/// Degree-compatible matrix between graded free modules, with the
/// columns-are-images convention: column v is the image of the v-th
/// domain basis element. Entry (u,v) must be zero or homogeneous of
/// degree deg(domain_v) - deg(codomain_u).
class GradedMatrix {
public:
  GradedMatrix() = default;
  GradedMatrix(GradedFreeModule codomain, GradedFreeModule domain)
      : codomain_(std::move(codomain)),
        domain_(std::move(domain)),
        entries_(codomain_.rank() * domain_.rank()) {}

  const GradedFreeModule& domain() const { return domain_; }
  const GradedFreeModule& codomain() const { return codomain_; }
  std::size_t rows() const { return codomain_.rank(); }
  std::size_t cols() const { return domain_.rank(); }

  Polynomial& at(std::size_t row, std::size_t col) {
    return entries_[row * cols() + col];
  }
  const Polynomial& at(std::size_t row, std::size_t col) const {
    return entries_[row * cols() + col];
  }

  bool operator==(const GradedMatrix&) const = default;

private:
  GradedFreeModule codomain_;
  GradedFreeModule domain_;
  std::vector<Polynomial> entries_;
};

struct GradedViolation {
  std::size_t row = 0;
  std::size_t col = 0;
  DegreeVector required;
  /// Actual common degree of the entry; nullopt when the entry is not
  /// even homogeneous.
  std::optional<DegreeVector> actual;
};

struct GradedReport {
  std::vector<GradedViolation> violations;
  bool ok() const { return violations.empty(); }
  std::string toString() const;
};

/// Checks the homogeneity invariant cell by cell.
GradedReport validateGraded(const GradedMatrix& a, const GradedRing& ring);

/// Exact matrix product a * b; requires domain(a) == codomain(b).
GradedMatrix compose(const GradedMatrix& a, const GradedMatrix& b);

GradedMatrix matrixSum(const GradedMatrix& a, const GradedMatrix& b);
GradedMatrix matrixScaled(const GradedMatrix& a, const Rational& c);
GradedMatrix identityMatrix(const GradedFreeModule& f,
                            const GradedRing& ring);
GradedMatrix zeroMatrix(const GradedFreeModule& codomain,
                        const GradedFreeModule& domain);

const std::vector<DegreeVector>& degreesOfDomain(const GradedMatrix& a);

/// Trace of the submatrix on rows and columns of basis degree j. Requires
/// domain == codomain as graded modules; the degree-matching diagonal
/// entries must be constants (a consequence of the homogeneity invariant;
/// a non-constant entry there raises ValidationError rather than being
/// skipped).
Rational gradedTrace(const GradedMatrix& a, const DegreeVector& j);

/// Builds a matrix from polynomial strings; rows follow the codomain.
GradedMatrix matrixFromStrings(const std::vector<DegreeVector>& codomainDegrees,
                               const std::vector<DegreeVector>& domainDegrees,
                               const std::vector<std::vector<std::string>>& rows,
                               const GradedRing& ring);

bool isZeroMatrix(const GradedMatrix& a);

}  // namespace bettichar
