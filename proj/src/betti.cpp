#include "bettichar/betti.hpp"

#include <algorithm>
#include <sstream>

namespace bettichar {

const std::vector<Rational>& BettiCharacterTable::at(
    const BettiKey& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end())
    throw ValidationError("no character stored at (i=" +
                          std::to_string(key.homologicalDegree) + ", j=" +
                          key.degree.toString() + ")");
  return it->second;
}

namespace {

void requireUsableInputs(const FreeComplex& d, const Psi0Set& p,
                         const GroupData& g, const GradedRing& ring) {
  const GroupReport groupReport = validateGroupData(g, ring);
  if (!groupReport.ok())
    throw ValidationError("group data: " + groupReport.toString());
  const GroupReport psiReport =
      validatePsi0(p, d.module(0), g.classCount(), ring);
  if (!psiReport.ok())
    throw ValidationError("psi0: " + psiReport.toString());
  for (std::size_t i = 1; i <= d.length(); ++i) {
    const GradedReport graded = validateGraded(d.differential(i), ring);
    if (!graded.ok())
      throw ValidationError("differential D" + std::to_string(i) + ": " +
                            graded.toString());
  }
  // Minimality is a precondition: a lift's degree-restricted trace equals
  // the character value only along a minimal resolution.
  const ComplexReport report = verifyComplex(d, ring);
  if (!report.allMinimal())
    throw ValidationError(
        "the complex is not minimal (a differential has a nonzero constant "
        "entry); minimize it first");
}

void appendTraces(BettiCharacterTable& table, const GradedMatrix& lift,
                  int homologicalDegree, std::size_t classIndex,
                  std::size_t classCount) {
  const GradedFreeModule& domain = lift.domain();
  for (const DegreeVector& j : domain.distinctDegrees()) {
    BettiKey key{homologicalDegree, j};
    if (!table.contains(key))
      table.set(key, std::vector<Rational>(classCount, Rational(0)));
    std::vector<Rational> values = table.at(key);
    values[classIndex] = gradedTrace(lift, j);
    table.set(key, std::move(values));
  }
}

[[noreturn]] void rethrowWithContext(const NoSolutionError& e,
                                     std::size_t homologicalDegree,
                                     const std::string& className) {
  std::ostringstream message;
  message << "no solution while lifting the action at homological degree "
          << homologicalDegree << ", class " << className
          << ": the inputs are not equivariant or the complex is not a "
             "resolution ("
          << e.what() << ")";
  throw NoSolutionError(message.str(), static_cast<int>(homologicalDegree),
                        className);
}

void verifyLiftStep(const FreeComplex& d, const GradedMatrix& previousLift,
                    const GradedMatrix& acted, const GradedMatrix& lift,
                    std::size_t i, const std::string& className) {
  if (!(compose(acted, lift) == compose(previousLift, d.differential(i))))
    throw ValidationError("lift at homological degree " + std::to_string(i) +
                          ", class " + className +
                          " is not a map of complexes");
}

// Per-class verification that (F, d^g) is again a minimal complex.
void verifyActedComplex(const FreeComplex& d,
                        const std::vector<BettiStep>& steps,
                        const GradedRing& ring, const std::string& className) {
  std::vector<GradedFreeModule> modules;
  for (std::size_t i = 0; i < d.moduleCount(); ++i)
    modules.push_back(d.module(i));
  std::vector<GradedMatrix> differentials;
  for (const auto& step : steps) differentials.push_back(step.actedDifferential);
  FreeComplex acted(FreeComplex::Unchecked{}, std::move(modules),
                    std::move(differentials));
  const ComplexReport report = verifyComplex(acted, ring);
  if (!report.allCompositionZero())
    throw ValidationError("acted complex for class " + className +
                          " fails composition-zero");
  if (!report.allMinimal())
    throw ValidationError("acted complex for class " + className +
                          " is not minimal");
  if (!report.allHomogeneous())
    throw ValidationError("acted complex for class " + className +
                          " violates the degree rule");
}

}  // namespace

BettiComputation bettiCharactersDetailed(const FreeComplex& d,
                                         const Psi0Set& p, const GroupData& g,
                                         const GradedRing& ring,
                                         const BettiOptions& options) {
  requireUsableInputs(d, p, g, ring);

  BettiComputation out;
  out.steps.resize(g.classCount());
  const std::size_t classCount = g.classCount();

  for (std::size_t k = 0; k < classCount; ++k) {
    const ConjugacyClass& cls = g.classes[k];
    const GroupElementAction inverse = inverseAction(cls.representative);
    GradedMatrix lift = p.matrices[k];
    appendTraces(out.table, lift, 0, k, classCount);

    for (std::size_t i = 1; i <= d.length(); ++i) {
      const GradedMatrix& differential = d.differential(i);
      const GradedMatrix acted = actOnMatrix(inverse, differential, ring);
      GradedMatrix next;
      try {
        next = factor(compose(lift, differential), acted, ring,
                      options.pivot);
      } catch (const NoSolutionError& e) {
        rethrowWithContext(e, i, cls.name);
      }
      if (options.verifyLifts)
        verifyLiftStep(d, lift, acted, next, i, cls.name);
      lift = next;
      appendTraces(out.table, lift, static_cast<int>(i), k, classCount);
      out.steps[k].push_back(BettiStep{acted, lift});
    }
    if (options.verifyLifts) verifyActedComplex(d, out.steps[k], ring, cls.name);
  }
  return out;
}

BettiCharacterTable bettiCharacters(const FreeComplex& d, const Psi0Set& p,
                                    const GroupData& g, const GradedRing& ring,
                                    const BettiOptions& options) {
  return bettiCharactersDetailed(d, p, g, ring, options).table;
}

BettiComputation bettiCharactersFromDegree(const FreeComplex& d,
                                           const Psi0Set& psiAtStart,
                                           std::size_t start,
                                           const GroupData& g,
                                           const GradedRing& ring,
                                           const BettiOptions& options) {
  if (start >= d.moduleCount())
    throw ShapeError("start degree exceeds the length of the complex");
  if (start == 0)
    return bettiCharactersDetailed(d, psiAtStart, g, ring, options);

  const GroupReport groupReport = validateGroupData(g, ring);
  if (!groupReport.ok())
    throw ValidationError("group data: " + groupReport.toString());
  const GroupReport psiReport =
      validatePsi0(psiAtStart, d.module(start), g.classCount(), ring);
  if (!psiReport.ok())
    throw ValidationError("psi at start degree: " + psiReport.toString());

  BettiComputation out;
  const std::size_t classCount = g.classCount();
  out.steps.resize(classCount);
  for (std::size_t k = 0; k < classCount; ++k)
    out.steps[k].resize(d.length());

  for (std::size_t k = 0; k < classCount; ++k) {
    const ConjugacyClass& cls = g.classes[k];
    const GroupElementAction inverse = inverseAction(cls.representative);

    std::vector<GradedMatrix> lifts(d.moduleCount());
    lifts[start] = psiAtStart.matrices[k];

    // Downward: psi_{i-1} solves psi_{i-1} * d_i = d^g_i * psi_i.
    for (std::size_t i = start; i >= 1; --i) {
      const GradedMatrix acted =
          actOnMatrix(inverse, d.differential(i), ring);
      try {
        lifts[i - 1] = factorLeft(compose(acted, lifts[i]), d.differential(i),
                                  ring, options.pivot);
      } catch (const NoSolutionError& e) {
        rethrowWithContext(e, i - 1, cls.name);
      }
      out.steps[k][i - 1] = BettiStep{acted, lifts[i]};
    }
    // Upward from the start degree, as in the degree-zero driver.
    for (std::size_t i = start + 1; i <= d.length(); ++i) {
      const GradedMatrix acted =
          actOnMatrix(inverse, d.differential(i), ring);
      try {
        lifts[i] = factor(compose(lifts[i - 1], d.differential(i)), acted,
                          ring, options.pivot);
      } catch (const NoSolutionError& e) {
        rethrowWithContext(e, i, cls.name);
      }
      out.steps[k][i - 1] = BettiStep{acted, lifts[i]};
    }
    if (options.verifyLifts) {
      for (std::size_t i = 1; i <= d.length(); ++i)
        verifyLiftStep(d, lifts[i - 1], out.steps[k][i - 1].actedDifferential,
                       lifts[i], i, cls.name);
    }
    for (std::size_t i = 0; i < lifts.size(); ++i)
      appendTraces(out.table, lifts[i], static_cast<int>(i), k, classCount);
  }
  return out;
}

std::vector<Rational> gradedComponentCharacter(
    const std::vector<Monomial>& generators, const DegreeVector& j,
    const GroupData& g, const GradedRing& ring) {
  for (const auto& cls : g.classes)
    if (!isMonomialAction(cls.representative))
      throw UnsupportedActionError(
          "graded component characters require monomial actions; class '" +
          cls.name + "' has a non-monomial representative");

  std::vector<Monomial> standard;
  for (const Monomial& m : monomialsOfDegree(j, ring)) {
    const bool inIdeal = std::any_of(
        generators.begin(), generators.end(),
        [&](const Monomial& gen) { return gen.divides(m); });
    if (!inIdeal) standard.push_back(m);
  }

  std::vector<Rational> out;
  out.reserve(g.classCount());
  for (const auto& cls : g.classes) {
    Rational trace = 0;
    for (const Monomial& b : standard) {
      const Polynomial image =
          actOnPolynomial(cls.representative, Polynomial::term(b, 1), ring);
      const auto& [m, c] = *image.terms().begin();
      if (m == b) trace += c;
    }
    out.push_back(trace);
  }
  return out;
}

}  // namespace bettichar
