#include "bettichar/solve.hpp"

#include <cassert>
#include <map>
#include <utility>

namespace bettichar {

namespace {

// Exact Gauss-Jordan on [m | rhs]. Returns the particular solution with
// free variables set to zero, or nullopt when the system is inconsistent.
// The pivot of each row is its first (or last) nonzero column, which is
// what makes the choice of solution deterministic.
std::optional<std::vector<Rational>> solveLinear(RationalMatrix m,
                                                 std::vector<Rational> rhs,
                                                 PivotStrategy strategy) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::pair<std::size_t, std::size_t>> pivots;

  for (std::size_t r = 0; r < rows; ++r) {
    for (const auto& [pr, pc] : pivots) {
      const Rational f = m.at(r, pc);
      if (f == 0) continue;
      for (std::size_t c = 0; c < cols; ++c) m.at(r, c) -= f * m.at(pr, c);
      rhs[r] -= f * rhs[pr];
    }
    std::optional<std::size_t> pivotCol;
    if (strategy == PivotStrategy::firstNonzero) {
      for (std::size_t c = 0; c < cols; ++c)
        if (m.at(r, c) != 0) {
          pivotCol = c;
          break;
        }
    } else {
      for (std::size_t c = cols; c-- > 0;)
        if (m.at(r, c) != 0) {
          pivotCol = c;
          break;
        }
    }
    if (!pivotCol) {
      if (rhs[r] != 0) return std::nullopt;
      continue;
    }
    const Rational lead = m.at(r, *pivotCol);
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) /= lead;
    rhs[r] /= lead;
    for (const auto& [pr, pc] : pivots) {
      const Rational f = m.at(pr, *pivotCol);
      if (f == 0) continue;
      for (std::size_t c = 0; c < cols; ++c) m.at(pr, c) -= f * m.at(r, c);
      rhs[pr] -= f * rhs[r];
    }
    pivots.emplace_back(r, *pivotCol);
  }

  std::vector<Rational> solution(cols, Rational(0));
  for (const auto& [pr, pc] : pivots) solution[pc] = rhs[pr];
  return solution;
}

struct ColumnUnknowns {
  // Unknown coefficient t_{w,m} for each domain index w of B and each
  // monomial m of the required degree; flat index into the tableau.
  std::vector<std::pair<std::size_t, Monomial>> unknowns;
  std::map<std::pair<std::size_t, Monomial>, std::size_t> unknownIndex;
};

}  // namespace

GradedMatrix factor(const GradedMatrix& a, const GradedMatrix& b,
                    const GradedRing& ring, PivotStrategy pivot) {
  if (a.codomain() != b.codomain())
    throw ShapeError("factor: A and B must share their codomain basis");

  const auto& domainA = a.domain().basisDegrees;
  const auto& domainB = b.domain().basisDegrees;
  GradedMatrix x(b.domain(), a.domain());

  for (std::size_t v = 0; v < domainA.size(); ++v) {
    // Unknown column entries expanded over monomials of the required degree.
    ColumnUnknowns col;
    for (std::size_t w = 0; w < domainB.size(); ++w) {
      const DegreeVector need = domainA[v] - domainB[w];
      for (const Monomial& m : monomialsOfDegree(need, ring)) {
        col.unknownIndex.emplace(std::make_pair(w, m), col.unknowns.size());
        col.unknowns.emplace_back(w, m);
      }
    }

    // One linear equation per (codomain row, monomial) pair that occurs.
    std::map<std::pair<std::size_t, Monomial>, std::size_t> equationIndex;
    auto equationOf = [&](std::size_t u, const Monomial& m) {
      return equationIndex.emplace(std::make_pair(u, m), equationIndex.size())
          .first->second;
    };
    struct Contribution {
      std::size_t equation;
      std::size_t unknown;
      Rational coefficient;
    };
    std::vector<Contribution> contributions;
    for (std::size_t t = 0; t < col.unknowns.size(); ++t) {
      const auto& [w, m] = col.unknowns[t];
      for (std::size_t u = 0; u < b.rows(); ++u) {
        const Polynomial& entry = b.at(u, w);
        for (const auto& [bm, bc] : entry.terms())
          contributions.push_back({equationOf(u, bm * m), t, bc});
      }
    }
    std::vector<std::pair<std::size_t, Rational>> rhsEntries;
    for (std::size_t u = 0; u < a.rows(); ++u)
      for (const auto& [am, ac] : a.at(u, v).terms())
        rhsEntries.emplace_back(equationOf(u, am), ac);

    RationalMatrix tableau(equationIndex.size(), col.unknowns.size());
    for (const auto& c : contributions)
      tableau.at(c.equation, c.unknown) += c.coefficient;
    std::vector<Rational> rhs(equationIndex.size(), Rational(0));
    for (const auto& [eq, value] : rhsEntries) rhs[eq] += value;

    const auto solution = solveLinear(std::move(tableau), std::move(rhs),
                                      pivot);
    if (!solution)
      throw NoSolutionError(
          "factor: column " + std::to_string(v + 1) +
              " of A does not lie in the image of B in its degree",
          v);

    for (std::size_t t = 0; t < col.unknowns.size(); ++t) {
      if ((*solution)[t] == 0) continue;
      const auto& [w, m] = col.unknowns[t];
      x.at(w, v).addTerm(m, (*solution)[t]);
    }
  }

  assert(compose(b, x) == a);
  return x;
}

namespace {

// Transpose with negated degree lists; preserves the required degree of
// every entry, so graded factorization transposes cleanly.
GradedMatrix transposeNegated(const GradedMatrix& m) {
  std::vector<DegreeVector> domain, codomain;
  domain.reserve(m.codomain().rank());
  for (const auto& d : m.codomain().basisDegrees)
    domain.push_back(d.negated());
  codomain.reserve(m.domain().rank());
  for (const auto& d : m.domain().basisDegrees)
    codomain.push_back(d.negated());
  GradedMatrix out(GradedFreeModule(std::move(codomain)),
                   GradedFreeModule(std::move(domain)));
  for (std::size_t u = 0; u < m.rows(); ++u)
    for (std::size_t v = 0; v < m.cols(); ++v) out.at(v, u) = m.at(u, v);
  return out;
}

}  // namespace

GradedMatrix factorLeft(const GradedMatrix& a, const GradedMatrix& b,
                        const GradedRing& ring, PivotStrategy pivot) {
  if (a.domain() != b.domain())
    throw ShapeError("factorLeft: A and B must share their domain basis");
  return transposeNegated(
      factor(transposeNegated(a), transposeNegated(b), ring, pivot));
}

}  // namespace bettichar
