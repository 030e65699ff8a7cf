#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bettichar/freemod.hpp"

namespace bettichar {

/// Invertible degree-preserving linear action on the variables, stored
/// columns-as-images: x_v maps to sum_u A(u,v) x_u. Permutations keep
/// their images list as shorthand (1-indexed: sigma sends i to images[i-1]).
class GroupElementAction {
public:
  GroupElementAction() = default;

  static GroupElementAction fromMatrix(RationalMatrix m);
  static GroupElementAction fromPermutation(
      const std::vector<std::size_t>& imagesOneIndexed);

  const RationalMatrix& matrix() const { return matrix_; }
  const std::optional<std::vector<std::size_t>>& permutation() const {
    return permutation_;
  }
  std::size_t varCount() const { return matrix_.rows(); }

  bool operator==(const GroupElementAction& rhs) const {
    return matrix_ == rhs.matrix_;
  }

private:
  RationalMatrix matrix_;
  std::optional<std::vector<std::size_t>> permutation_;
};

/// Exact inverse; permutations are inverted as permutations. Raises
/// ValidationError on a singular matrix (a broken invariant).
GroupElementAction inverseAction(const GroupElementAction& g);

/// Every variable maps to a scalar multiple of a single variable.
bool isMonomialAction(const GroupElementAction& g);

Polynomial actOnPolynomial(const GroupElementAction& g, const Polynomial& f,
                           const GradedRing& ring);

/// Entrywise action [g . a_uv]; same domain and codomain. Degree
/// preservation of g keeps the result degree compatible.
GradedMatrix actOnMatrix(const GroupElementAction& g, const GradedMatrix& a,
                         const GradedRing& ring);

/// Action on the degree-zero step of a resolution of a stable monomial
/// module: sends generator m_v to g.m_v = c * m_u and records c at
/// (u, v). Requires a monomial action; raises InstabilityError when an
/// image is not a scalar multiple of a listed generator.
GradedMatrix inducedPsi0(const std::vector<Monomial>& generators,
                         const GroupElementAction& g,
                         const GradedFreeModule& f0, const GradedRing& ring);

struct ConjugacyClass {
  std::string name;
  GroupElementAction representative;
  long long size = 0;
  std::size_t inverseClassIndex = 0;
};

/// Conjugacy-class data for a finite group. The library trusts that the
/// representatives really represent distinct classes; validation is
/// limited to arithmetic sanity.
struct GroupData {
  long long order = 0;
  std::vector<ConjugacyClass> classes;
  std::size_t identityClassIndex = 0;

  std::size_t classCount() const { return classes.size(); }
  std::vector<std::string> classNames() const;
};

struct GroupReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  std::string toString() const;
};

/// Checks: class sizes sum to |G|, the identity class holds the identity
/// matrix with size 1, inverseClassIndex is an involution, and every
/// representative is invertible and degree preserving.
GroupReport validateGroupData(const GroupData& g, const GradedRing& ring);

/// One matrix of psi_0 per conjugacy class, in class order; each is a
/// constant invertible endomorphism of F_0.
struct Psi0Set {
  std::vector<GradedMatrix> matrices;
};

GroupReport validatePsi0(const Psi0Set& p, const GradedFreeModule& f0,
                         std::size_t classCount, const GradedRing& ring);

}  // namespace bettichar
