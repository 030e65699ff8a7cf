#include "bettichar/freemod.hpp"

#include <algorithm>
#include <sstream>

namespace bettichar {

GradedFreeModule GradedFreeModule::twisted(const DegreeVector& d,
                                           std::size_t copies) {
  return GradedFreeModule(std::vector<DegreeVector>(copies, d));
}

std::vector<DegreeVector> GradedFreeModule::distinctDegrees() const {
  std::vector<DegreeVector> out(basisDegrees);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string GradedReport::toString() const {
  if (ok()) return "ok";
  std::ostringstream out;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    const auto& v = violations[i];
    if (i > 0) out << "; ";
    out << "entry (" << v.row + 1 << "," << v.col + 1 << ") requires degree "
        << v.required.toString() << ", got "
        << (v.actual ? v.actual->toString() : std::string("inhomogeneous"));
  }
  return out.str();
}

GradedReport validateGraded(const GradedMatrix& a, const GradedRing& ring) {
  GradedReport report;
  for (std::size_t u = 0; u < a.rows(); ++u) {
    for (std::size_t v = 0; v < a.cols(); ++v) {
      const Polynomial& entry = a.at(u, v);
      const DegreeVector required =
          a.domain().basisDegrees[v] - a.codomain().basisDegrees[u];
      const Homogeneity h = homogeneity(entry, ring);
      if (h.compatibleWith(required)) continue;
      GradedViolation violation{u, v, required, std::nullopt};
      if (h.kind == HomogeneityKind::homogeneous) violation.actual = h.degree;
      report.violations.push_back(std::move(violation));
    }
  }
  return report;
}

GradedMatrix compose(const GradedMatrix& a, const GradedMatrix& b) {
  if (a.domain() != b.codomain())
    throw ShapeError("compose: domain(A) != codomain(B)");
  GradedMatrix out(a.codomain(), b.domain());
  for (std::size_t u = 0; u < a.rows(); ++u)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Polynomial& lhs = a.at(u, k);
      if (lhs.isZero()) continue;
      for (std::size_t v = 0; v < b.cols(); ++v) {
        if (b.at(k, v).isZero()) continue;
        out.at(u, v) = out.at(u, v) + lhs * b.at(k, v);
      }
    }
  return out;
}

GradedMatrix matrixSum(const GradedMatrix& a, const GradedMatrix& b) {
  if (a.domain() != b.domain() || a.codomain() != b.codomain())
    throw ShapeError("matrix sum: shape mismatch");
  GradedMatrix out(a.codomain(), a.domain());
  for (std::size_t u = 0; u < a.rows(); ++u)
    for (std::size_t v = 0; v < a.cols(); ++v)
      out.at(u, v) = a.at(u, v) + b.at(u, v);
  return out;
}

GradedMatrix matrixScaled(const GradedMatrix& a, const Rational& c) {
  GradedMatrix out(a.codomain(), a.domain());
  for (std::size_t u = 0; u < a.rows(); ++u)
    for (std::size_t v = 0; v < a.cols(); ++v)
      out.at(u, v) = a.at(u, v).scaled(c);
  return out;
}

GradedMatrix identityMatrix(const GradedFreeModule& f,
                            const GradedRing& ring) {
  GradedMatrix out(f, f);
  for (std::size_t i = 0; i < f.rank(); ++i)
    out.at(i, i) = Polynomial::constant(1, ring.varCount());
  return out;
}

GradedMatrix zeroMatrix(const GradedFreeModule& codomain,
                        const GradedFreeModule& domain) {
  return GradedMatrix(codomain, domain);
}

const std::vector<DegreeVector>& degreesOfDomain(const GradedMatrix& a) {
  return a.domain().basisDegrees;
}

Rational gradedTrace(const GradedMatrix& a, const DegreeVector& j) {
  if (a.domain() != a.codomain())
    throw ShapeError("graded trace requires domain == codomain");
  Rational trace = 0;
  for (std::size_t u = 0; u < a.rows(); ++u) {
    if (a.domain().basisDegrees[u] != j) continue;
    const auto value = a.at(u, u).constantValue();
    if (!value)
      throw ValidationError(
          "graded trace: non-constant diagonal entry at index " +
          std::to_string(u + 1) + " in degree " + j.toString());
    trace += *value;
  }
  return trace;
}

GradedMatrix matrixFromStrings(const std::vector<DegreeVector>& codomainDegrees,
                               const std::vector<DegreeVector>& domainDegrees,
                               const std::vector<std::vector<std::string>>& rows,
                               const GradedRing& ring) {
  if (rows.size() != codomainDegrees.size())
    throw ShapeError("matrix rows do not match codomain rank");
  GradedMatrix out{GradedFreeModule(codomainDegrees),
                   GradedFreeModule(domainDegrees)};
  for (std::size_t u = 0; u < rows.size(); ++u) {
    if (rows[u].size() != domainDegrees.size())
      throw ShapeError("matrix row " + std::to_string(u + 1) +
                       " does not match domain rank");
    for (std::size_t v = 0; v < rows[u].size(); ++v)
      out.at(u, v) = parsePolynomial(rows[u][v], ring);
  }
  return out;
}

bool isZeroMatrix(const GradedMatrix& a) {
  for (std::size_t u = 0; u < a.rows(); ++u)
    for (std::size_t v = 0; v < a.cols(); ++v)
      if (!a.at(u, v).isZero()) return false;
  return true;
}

}  // namespace bettichar
