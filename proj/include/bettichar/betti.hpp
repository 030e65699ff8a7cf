#pragma once

#include <map>
#include <vector>

#include "bettichar/action.hpp"
#include "bettichar/resolution.hpp"
#include "bettichar/solve.hpp"

namespace bettichar {

struct BettiKey {
  int homologicalDegree = 0;
  DegreeVector degree;
  auto operator<=>(const BettiKey&) const = default;
};

/// Map (i, j) -> one trace value per conjugacy class, in class order.
/// Keys exist exactly for the degrees occurring among basis degrees of
/// F_i, so the identity-class value of every stored entry is the Betti
/// number beta_{i,j} (in particular nonzero).
class BettiCharacterTable {
public:
  using Map = std::map<BettiKey, std::vector<Rational>>;

  void set(BettiKey key, std::vector<Rational> values) {
    entries_[std::move(key)] = std::move(values);
  }
  bool contains(const BettiKey& key) const { return entries_.count(key) > 0; }
  const std::vector<Rational>& at(const BettiKey& key) const;
  const Map& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool operator==(const BettiCharacterTable&) const = default;

private:
  Map entries_;
};

struct BettiOptions {
  PivotStrategy pivot = PivotStrategy::firstNonzero;
  /// Additionally verify, per class, that the acted complexes satisfy
  /// composition-zero and minimality and that the lifts form a map of
  /// complexes. Off by default; the CLI exposes it as --check.
  bool verifyLifts = false;
};

/// Witnesses of one lifting step for class k at homological degree i:
/// the acted differential C = action(g_k^{-1}, D_i) and the lift
/// Q = psi-hat_i with C * Q = Q_prev * D_i.
struct BettiStep {
  GradedMatrix actedDifferential;
  GradedMatrix lift;
};

struct BettiComputation {
  BettiCharacterTable table;
  /// steps[k][i-1] for class index k and homological degree i >= 1.
  std::vector<std::vector<BettiStep>> steps;
};

/// The character driver. Requires a minimal degree-compatible complex
/// (assumed exact; exactness is the caller's trust boundary) and one
/// psi_0 matrix per conjugacy class. Homological degree 0 traces come
/// from psi_0 directly; for i >= 1 and class k the lift is carried
/// forward by one graded factorization per step. NoSolutionError from
/// the factorization is rethrown with the offending homological degree
/// and class name attached.
BettiComputation bettiCharactersDetailed(const FreeComplex& d,
                                         const Psi0Set& p, const GroupData& g,
                                         const GradedRing& ring,
                                         const BettiOptions& options = {});

BettiCharacterTable bettiCharacters(const FreeComplex& d, const Psi0Set& p,
                                    const GroupData& g, const GradedRing& ring,
                                    const BettiOptions& options = {});

/// Variant entry point: the action is supplied at homological degree
/// `start` instead of 0 and propagated in both directions, downward by
/// factoring on the other side of the lifting square. The table covers
/// all homological degrees of the complex.
BettiComputation bettiCharactersFromDegree(const FreeComplex& d,
                                           const Psi0Set& psiAtStart,
                                           std::size_t start,
                                           const GroupData& g,
                                           const GradedRing& ring,
                                           const BettiOptions& options = {});

/// Characters of the graded components of R/I for a monomial ideal I:
/// the standard monomials of degree j (those divisible by no generator)
/// form a basis, and each trace sums the scalars c over standard
/// monomials b with g.b = c*b. Requires monomial actions.
std::vector<Rational> gradedComponentCharacter(
    const std::vector<Monomial>& generators, const DegreeVector& j,
    const GroupData& g, const GradedRing& ring);

}  // namespace bettichar
