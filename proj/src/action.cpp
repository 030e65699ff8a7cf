#include "bettichar/action.hpp"

#include <map>
#include <set>
#include <sstream>

namespace bettichar {

GroupElementAction GroupElementAction::fromMatrix(RationalMatrix m) {
  if (m.rows() != m.cols())
    throw ValidationError("group element action: matrix must be square");
  if (m.rows() == 0)
    throw ValidationError("group element action: empty matrix");
  GroupElementAction g;
  g.matrix_ = std::move(m);
  return g;
}

GroupElementAction GroupElementAction::fromPermutation(
    const std::vector<std::size_t>& imagesOneIndexed) {
  const std::size_t n = imagesOneIndexed.size();
  if (n == 0) throw ValidationError("permutation: empty images list");
  std::vector<bool> seen(n, false);
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t image = imagesOneIndexed[i];
    if (image < 1 || image > n)
      throw ValidationError("permutation: image " + std::to_string(image) +
                            " out of range 1.." + std::to_string(n));
    if (seen[image - 1])
      throw ValidationError("permutation: repeated image " +
                            std::to_string(image));
    seen[image - 1] = true;
    m.at(image - 1, i) = 1;  // x_i -> x_{sigma(i)}
  }
  GroupElementAction g;
  g.matrix_ = std::move(m);
  g.permutation_ = imagesOneIndexed;
  return g;
}

GroupElementAction inverseAction(const GroupElementAction& g) {
  if (g.permutation()) {
    const auto& images = *g.permutation();
    std::vector<std::size_t> inverse(images.size());
    for (std::size_t i = 0; i < images.size(); ++i)
      inverse[images[i] - 1] = i + 1;
    return GroupElementAction::fromPermutation(inverse);
  }
  auto inv = g.matrix().inverse();
  if (!inv)
    throw ValidationError("group element action is singular (invertibility "
                          "is an invariant)");
  return GroupElementAction::fromMatrix(std::move(*inv));
}

bool isMonomialAction(const GroupElementAction& g) {
  const RationalMatrix& m = g.matrix();
  for (std::size_t v = 0; v < m.cols(); ++v) {
    std::size_t nonzero = 0;
    for (std::size_t u = 0; u < m.rows(); ++u)
      if (m.at(u, v) != 0) ++nonzero;
    if (nonzero != 1) return false;
  }
  return true;
}

Polynomial actOnPolynomial(const GroupElementAction& g, const Polynomial& f,
                           const GradedRing& ring) {
  return linearSubstitute(f, g.matrix(), ring);
}

GradedMatrix actOnMatrix(const GroupElementAction& g, const GradedMatrix& a,
                         const GradedRing& ring) {
  GradedMatrix out(a.codomain(), a.domain());
  for (std::size_t u = 0; u < a.rows(); ++u)
    for (std::size_t v = 0; v < a.cols(); ++v)
      out.at(u, v) = actOnPolynomial(g, a.at(u, v), ring);
  return out;
}

GradedMatrix inducedPsi0(const std::vector<Monomial>& generators,
                         const GroupElementAction& g,
                         const GradedFreeModule& f0, const GradedRing& ring) {
  if (generators.size() != f0.rank())
    throw ShapeError("induced psi0: generator count does not match rank of "
                     "F0");
  if (!isMonomialAction(g))
    throw UnsupportedActionError(
        "induced psi0 requires a monomial action (each variable maps to a "
        "scalar multiple of a variable); supply psi0 explicitly instead");
  GradedMatrix out(f0, f0);
  for (std::size_t v = 0; v < generators.size(); ++v) {
    const Polynomial image =
        actOnPolynomial(g, Polynomial::term(generators[v], 1), ring);
    // Monomial action: the image is a single term c * m.
    const auto& [m, c] = *image.terms().begin();
    auto it = std::find(generators.begin(), generators.end(), m);
    if (it == generators.end()) {
      std::ostringstream message;
      message << "generator set is not stable: generator "
              << formatPolynomial(Polynomial::term(generators[v], 1), ring)
              << " maps to " << formatPolynomial(image, ring)
              << ", which is not a scalar multiple of a listed generator";
      throw InstabilityError(message.str());
    }
    const std::size_t u =
        static_cast<std::size_t>(std::distance(generators.begin(), it));
    out.at(u, v) = Polynomial::constant(c, ring.varCount());
  }
  return out;
}

std::vector<std::string> GroupData::classNames() const {
  std::vector<std::string> out;
  out.reserve(classes.size());
  for (const auto& c : classes) out.push_back(c.name);
  return out;
}

std::string GroupReport::toString() const {
  if (ok()) return "ok";
  std::string out;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i > 0) out += "; ";
    out += violations[i];
  }
  return out;
}

GroupReport validateGroupData(const GroupData& g, const GradedRing& ring) {
  GroupReport report;
  auto violate = [&](const std::string& what) {
    report.violations.push_back(what);
  };

  if (g.order <= 0) violate("group order must be positive");
  if (g.classes.empty()) violate("at least one conjugacy class required");
  if (g.identityClassIndex >= g.classes.size()) {
    violate("identity class index out of range");
    return report;
  }

  long long sizeSum = 0;
  std::set<std::string> names;
  for (std::size_t k = 0; k < g.classes.size(); ++k) {
    const ConjugacyClass& cls = g.classes[k];
    if (!names.insert(cls.name).second)
      violate("duplicate class name '" + cls.name + "'");
    if (cls.size <= 0)
      violate("class '" + cls.name + "': size must be positive");
    sizeSum += cls.size;
    if (cls.inverseClassIndex >= g.classes.size()) {
      violate("class '" + cls.name + "': inverse class index out of range");
      continue;
    }
    if (g.classes[cls.inverseClassIndex].inverseClassIndex != k)
      violate("class '" + cls.name + "': inverse-class map is not an "
              "involution");

    const RationalMatrix& m = cls.representative.matrix();
    if (m.rows() != ring.varCount())
      violate("class '" + cls.name + "': representative is " +
              std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
              ", ring has " + std::to_string(ring.varCount()) + " variables");
    else {
      if (!m.inverse())
        violate("class '" + cls.name + "': representative is singular");
      for (std::size_t u = 0; u < m.rows(); ++u)
        for (std::size_t v = 0; v < m.cols(); ++v)
          if (m.at(u, v) != 0 &&
              ring.variableDegree(u) != ring.variableDegree(v)) {
            violate("class '" + cls.name + "': representative mixes degrees " +
                    ring.variableDegree(u).toString() + " and " +
                    ring.variableDegree(v).toString() + " at entry (" +
                    std::to_string(u + 1) + "," + std::to_string(v + 1) + ")");
            u = m.rows();  // one degree violation per class is enough
            break;
          }
    }
  }
  if (sizeSum != g.order)
    violate("class sizes sum to " + std::to_string(sizeSum) +
            ", group order is " + std::to_string(g.order));

  const ConjugacyClass& identity = g.classes[g.identityClassIndex];
  if (!identity.representative.matrix().isIdentity())
    violate("identity class '" + identity.name +
            "' does not hold the identity matrix");
  if (identity.size != 1)
    violate("identity class '" + identity.name + "' must have size 1");
  return report;
}

GroupReport validatePsi0(const Psi0Set& p, const GradedFreeModule& f0,
                         std::size_t classCount, const GradedRing& ring) {
  GroupReport report;
  auto violate = [&](const std::string& what) {
    report.violations.push_back(what);
  };
  if (p.matrices.size() != classCount) {
    violate("psi0: expected " + std::to_string(classCount) +
            " matrices (one per class), got " +
            std::to_string(p.matrices.size()));
    return report;
  }
  for (std::size_t k = 0; k < p.matrices.size(); ++k) {
    const GradedMatrix& m = p.matrices[k];
    const std::string label = "psi0[" + std::to_string(k) + "]";
    if (m.domain() != f0 || m.codomain() != f0) {
      violate(label + ": not an endomorphism of F0");
      continue;
    }
    const GradedReport graded = validateGraded(m, ring);
    if (!graded.ok()) violate(label + ": " + graded.toString());
    RationalMatrix constant(m.rows(), m.cols());
    bool allConstant = true;
    for (std::size_t u = 0; u < m.rows() && allConstant; ++u)
      for (std::size_t v = 0; v < m.cols(); ++v) {
        const auto value = m.at(u, v).constantValue();
        if (!value) {
          violate(label + ": entry (" + std::to_string(u + 1) + "," +
                  std::to_string(v + 1) + ") is not constant");
          allConstant = false;
          break;
        }
        constant.at(u, v) = *value;
      }
    if (allConstant && !constant.inverse())
      violate(label + ": matrix is singular");
  }
  return report;
}

}  // namespace bettichar
