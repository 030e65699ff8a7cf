#pragma once

#include "bettichar/freemod.hpp"

namespace bettichar {

/// Pivot selection inside exact Gaussian elimination. `firstNonzero` is
/// the default deterministic rule (first nonzero entry of each row in
/// column order); `lastNonzero` scans columns right to left. Character
/// traces are independent of the strategy; exposing both makes that
/// independence testable.
enum class PivotStrategy { firstNonzero, lastNonzero };

/// Graded factorization: given A and B with the same codomain over the
/// same basis, returns a degree-compatible X with B * X = A. Each column
/// of A is solved independently: the unknown entries are expanded over
/// monomialsOfDegree of the required degree and the resulting linear
/// system over Q is solved exactly, with free variables set to zero.
/// Throws NoSolutionError when no solution exists, which signals invalid
/// input (non-equivariant group data or a complex that is not a
/// resolution).
GradedMatrix factor(const GradedMatrix& a, const GradedMatrix& b,
                    const GradedRing& ring,
                    PivotStrategy pivot = PivotStrategy::firstNonzero);

/// Same on the other side: returns Y with Y * B = A; requires
/// domain(A) == domain(B). Implemented by factoring the transposed
/// problem over negated degree lists.
GradedMatrix factorLeft(const GradedMatrix& a, const GradedMatrix& b,
                        const GradedRing& ring,
                        PivotStrategy pivot = PivotStrategy::firstNonzero);

}  // namespace bettichar
