#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bettichar/freemod.hpp"

namespace bettichar {

/// What a complex resolves, when known. Constructed complexes carry the
/// (canonically sorted) generator list so downstream code can pair the
/// degree-zero basis with a group action on the generators.
struct Augmentation {
  enum class Kind { ideal, quotient, presented };
  Kind kind = Kind::presented;
  std::vector<Monomial> generators;
};

/// Finite chain of graded free modules F_0,...,F_n with differentials
/// D_i : F_i -> F_{i-1}. Invariants: adjacent domains/codomains agree,
/// every differential is degree compatible, and D_i * D_{i+1} = 0.
/// Trust boundary: exactness of imported complexes is never verified.
class FreeComplex {
public:
  /// Tag for tests and controlled callers that need to build a complex
  /// without the composition-zero guarantee.
  struct Unchecked {};

  FreeComplex(std::vector<GradedFreeModule> modules,
              std::vector<GradedMatrix> differentials);
  FreeComplex(Unchecked, std::vector<GradedFreeModule> modules,
              std::vector<GradedMatrix> differentials);

  /// Number of differentials; moduleCount() == length() + 1.
  std::size_t length() const { return differentials_.size(); }
  std::size_t moduleCount() const { return modules_.size(); }

  const GradedFreeModule& module(std::size_t i) const { return modules_[i]; }
  /// D_i for i in [1, length()].
  const GradedMatrix& differential(std::size_t i) const {
    return differentials_[i - 1];
  }

  std::vector<std::size_t> ranks() const;

  const std::optional<Augmentation>& augmentation() const {
    return augmentation_;
  }
  void setAugmentation(Augmentation a) { augmentation_ = std::move(a); }

  bool operator==(const FreeComplex& rhs) const {
    return modules_ == rhs.modules_ && differentials_ == rhs.differentials_;
  }

private:
  std::vector<GradedFreeModule> modules_;
  std::vector<GradedMatrix> differentials_;
  std::optional<Augmentation> augmentation_;
};

enum class TaylorMode { resolveIdeal, resolveQuotient };

/// Deterministic scan order for minimization pivots. `forward` scans
/// differentials in ascending homological degree, rows top to bottom,
/// columns left to right; `reversed` scans everything the other way.
/// The minimal ranks are independent of the order.
enum class ScanOrder { forward, reversed };

/// Taylor complex of a monomial ideal. Generators are deduplicated per
/// precondition (duplicates are an error) and sorted in the canonical
/// monomial order; homological degree i is indexed by the subsets of size
/// i+1 (resolveIdeal) or i (resolveQuotient) in lexicographic subset
/// order. The differential takes e_S to
///   sum over m in S of (-1)^(pos(m,S)+1) * lcm(S)/lcm(S - m) * e_{S - m}
/// with pos the 1-based position of m in the sorted subset.
FreeComplex taylorComplex(std::vector<Monomial> generators, TaylorMode mode,
                          const GradedRing& ring);

/// Iterated cancellation of nonzero constant entries until none remain,
/// with the matching basis-change updates on the neighbouring
/// differentials. Preserves composition-zero and homogeneity; on a
/// resolution it produces the minimal resolution of the same module.
/// Trailing rank-zero modules are dropped (the first module is kept).
FreeComplex minimize(const FreeComplex& c, const GradedRing& ring,
                     ScanOrder order = ScanOrder::forward);

struct ComplexReport {
  std::vector<GradedReport> homogeneous;  // per differential
  std::vector<bool> compositionZero;      // per adjacent pair (D_i, D_{i+1})
  std::vector<bool> minimal;              // per differential

  bool allHomogeneous() const;
  bool allCompositionZero() const;
  bool allMinimal() const;
  bool ok() const {
    return allHomogeneous() && allCompositionZero() && allMinimal();
  }
};

ComplexReport verifyComplex(const FreeComplex& c, const GradedRing& ring);

/// Complex file format: a JSON object with "modules" (list of degree
/// lists, each degree a list of integers) and "matrices" (row-major grids
/// of polynomial strings). Import validates homogeneity and
/// composition-zero with cell-level diagnostics before accepting;
/// exactness is an unchecked precondition of the caller.
FreeComplex importComplex(const std::string& text, const GradedRing& ring);
std::string exportComplex(const FreeComplex& c, const GradedRing& ring);

}  // namespace bettichar
