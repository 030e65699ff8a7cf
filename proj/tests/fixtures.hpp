#pragma once

// Shared fixtures: the squarefree quadrics example in Q[x1..x4] with its
// minimal resolution, the S4/S3/S2 class data, and the matching
// character tables. Matrices are kept as string grids and parsed through
// the public API so the fixtures double as parser exercise.

#include <string>
#include <vector>

#include "bettichar/action.hpp"
#include "bettichar/chars.hpp"
#include "bettichar/freemod.hpp"
#include "bettichar/resolution.hpp"

namespace fixtures {

using namespace bettichar;

inline GradedRing ringS4() {
  return GradedRing::standard({"x1", "x2", "x3", "x4"});
}

inline GradedRing ringS3() { return GradedRing::standard({"x1", "x2", "x3"}); }

inline GradedRing ringS2() { return GradedRing::standard({"x1", "x2"}); }

using Grid = std::vector<std::vector<std::string>>;

inline const Grid& d1Grid() {
  static const Grid grid{
      {"-x3", "0", "-x4", "0", "0", "0", "0", "0"},
      {"x2", "-x2", "0", "0", "-x4", "0", "0", "0"},
      {"0", "x1", "0", "0", "0", "0", "-x4", "0"},
      {"0", "0", "x2", "-x2", "x3", "-x3", "0", "0"},
      {"0", "0", "0", "x1", "0", "0", "x3", "-x3"},
      {"0", "0", "0", "0", "0", "x1", "0", "x2"}};
  return grid;
}

inline const Grid& d2Grid() {
  static const Grid grid{{"x4", "x4", "0"},
                         {"0", "x4", "0"},
                         {"-x3", "-x3", "0"},
                         {"0", "-x3", "x3"},
                         {"x2", "0", "0"},
                         {"0", "0", "-x2"},
                         {"0", "x1", "0"},
                         {"0", "0", "x1"}};
  return grid;
}

// Acted differentials for the 4-cycle class.
inline const Grid& d1CycleGrid() {
  static const Grid grid{
      {"-x2", "0", "-x3", "0", "0", "0", "0", "0"},
      {"x1", "-x1", "0", "0", "-x3", "0", "0", "0"},
      {"0", "x4", "0", "0", "0", "0", "-x3", "0"},
      {"0", "0", "x1", "-x1", "x2", "-x2", "0", "0"},
      {"0", "0", "0", "x4", "0", "0", "x2", "-x2"},
      {"0", "0", "0", "0", "0", "x4", "0", "x1"}};
  return grid;
}

inline const Grid& d2CycleGrid() {
  static const Grid grid{{"x3", "x3", "0"},
                         {"0", "x3", "0"},
                         {"-x2", "-x2", "0"},
                         {"0", "-x2", "x2"},
                         {"x1", "0", "0"},
                         {"0", "0", "-x1"},
                         {"0", "x4", "0"},
                         {"0", "0", "x4"}};
  return grid;
}

// Reference lift matrices for the 4-cycle class (constant entries).
inline const Grid& psiHat1CycleGrid() {
  static const Grid grid{
      {"0", "0", "-1", "1", "0", "0", "0", "0"},
      {"0", "0", "-1", "0", "0", "0", "0", "0"},
      {"0", "0", "0", "0", "-1", "1", "0", "0"},
      {"0", "0", "0", "0", "-1", "0", "0", "0"},
      {"0", "0", "0", "0", "0", "0", "-1", "1"},
      {"0", "0", "0", "0", "0", "0", "-1", "0"},
      {"1", "0", "0", "0", "0", "0", "0", "0"},
      {"0", "1", "0", "0", "0", "0", "0", "0"}};
  return grid;
}

inline const Grid& psiHat2CycleGrid() {
  static const Grid grid{{"0", "-1", "1"}, {"1", "1", "0"}, {"0", "1", "0"}};
  return grid;
}

inline std::vector<DegreeVector> twisted(long long d, std::size_t copies) {
  return std::vector<DegreeVector>(copies, DegreeVector({d}));
}

inline GradedMatrix referenceD1(const GradedRing& ring) {
  return matrixFromStrings(twisted(2, 6), twisted(3, 8), d1Grid(), ring);
}

inline GradedMatrix referenceD2(const GradedRing& ring) {
  return matrixFromStrings(twisted(3, 8), twisted(4, 3), d2Grid(), ring);
}

inline FreeComplex referenceComplex(const GradedRing& ring) {
  GradedMatrix d1 = referenceD1(ring);
  GradedMatrix d2 = referenceD2(ring);
  return FreeComplex({d1.codomain(), d1.domain(), d2.domain()}, {d1, d2});
}

// Generators in the reference order; the Taylor pipeline re-sorts its own
// copy canonically, so tests that pair psi0 with this list must use the
// imported complex.
inline std::vector<Monomial> squarefreeGenerators() {
  return {Monomial({1, 1, 0, 0}), Monomial({1, 0, 1, 0}),
          Monomial({0, 1, 1, 0}), Monomial({1, 0, 0, 1}),
          Monomial({0, 1, 0, 1}), Monomial({0, 0, 1, 1})};
}

inline const Grid& psi0CycleGrid() {
  static const Grid grid{
      {"0", "0", "0", "1", "0", "0"}, {"0", "0", "0", "0", "1", "0"},
      {"1", "0", "0", "0", "0", "0"}, {"0", "0", "0", "0", "0", "1"},
      {"0", "1", "0", "0", "0", "0"}, {"0", "0", "1", "0", "0", "0"}};
  return grid;
}

inline const Grid& psi0ThreeCycleGrid() {
  static const Grid grid{
      {"0", "1", "0", "0", "0", "0"}, {"0", "0", "1", "0", "0", "0"},
      {"1", "0", "0", "0", "0", "0"}, {"0", "0", "0", "0", "0", "1"},
      {"0", "0", "0", "1", "0", "0"}, {"0", "0", "0", "0", "1", "0"}};
  return grid;
}

inline const Grid& psi0DoubleTranspositionGrid() {
  static const Grid grid{
      {"1", "0", "0", "0", "0", "0"}, {"0", "0", "0", "0", "1", "0"},
      {"0", "0", "0", "1", "0", "0"}, {"0", "0", "1", "0", "0", "0"},
      {"0", "1", "0", "0", "0", "0"}, {"0", "0", "0", "0", "0", "1"}};
  return grid;
}

inline const Grid& psi0TranspositionGrid() {
  static const Grid grid{
      {"1", "0", "0", "0", "0", "0"}, {"0", "0", "1", "0", "0", "0"},
      {"0", "1", "0", "0", "0", "0"}, {"0", "0", "0", "0", "1", "0"},
      {"0", "0", "0", "1", "0", "0"}, {"0", "0", "0", "0", "0", "1"}};
  return grid;
}

inline GradedMatrix psi0FromGrid(const Grid& grid, const GradedRing& ring) {
  return matrixFromStrings(twisted(2, 6), twisted(2, 6), grid, ring);
}

inline Psi0Set referencePsi0(const GradedRing& ring) {
  Psi0Set p;
  p.matrices.push_back(psi0FromGrid(psi0CycleGrid(), ring));
  p.matrices.push_back(psi0FromGrid(psi0ThreeCycleGrid(), ring));
  p.matrices.push_back(psi0FromGrid(psi0DoubleTranspositionGrid(), ring));
  p.matrices.push_back(psi0FromGrid(psi0TranspositionGrid(), ring));
  p.matrices.push_back(
      identityMatrix(GradedFreeModule(twisted(2, 6)), ring));
  return p;
}

// Classes ordered (1234), (123), (12)(34), (12), id -- sizes 6,8,3,6,1.
inline GroupData groupS4() {
  GroupData g;
  g.order = 24;
  g.classes = {
      {"(1234)", GroupElementAction::fromPermutation({2, 3, 4, 1}), 6, 0},
      {"(123)", GroupElementAction::fromPermutation({2, 3, 1, 4}), 8, 1},
      {"(12)(34)", GroupElementAction::fromPermutation({2, 1, 4, 3}), 3, 2},
      {"(12)", GroupElementAction::fromPermutation({2, 1, 3, 4}), 6, 3},
      {"id", GroupElementAction::fromPermutation({1, 2, 3, 4}), 1, 4}};
  g.identityClassIndex = 4;
  return g;
}

inline GroupData groupS3() {
  GroupData g;
  g.order = 6;
  g.classes = {{"id", GroupElementAction::fromPermutation({1, 2, 3}), 1, 0},
               {"(12)", GroupElementAction::fromPermutation({2, 1, 3}), 3, 1},
               {"(123)", GroupElementAction::fromPermutation({2, 3, 1}), 2, 2}};
  g.identityClassIndex = 0;
  return g;
}

inline GroupData groupS2() {
  GroupData g;
  g.order = 2;
  g.classes = {{"id", GroupElementAction::fromPermutation({1, 2}), 1, 0},
               {"(12)", GroupElementAction::fromPermutation({2, 1}), 1, 1}};
  g.identityClassIndex = 0;
  return g;
}

inline ClassFunction rationals(std::vector<long> values) {
  ClassFunction out;
  out.reserve(values.size());
  for (long v : values) out.push_back(Rational(v));
  return out;
}

// Rows ordered to match groupS4 classes.
inline CharacterTable tableS4() {
  return CharacterTable({{"trivial", rationals({1, 1, 1, 1, 1})},
                         {"sign", rationals({-1, 1, 1, -1, 1})},
                         {"standard", rationals({-1, 0, -1, 1, 3})},
                         {"standard_sign", rationals({1, 0, -1, -1, 3})},
                         {"two_dim", rationals({0, -1, 2, 0, 2})}});
}

inline CharacterTable tableS3() {
  return CharacterTable({{"trivial", rationals({1, 1, 1})},
                         {"sign", rationals({1, -1, 1})},
                         {"standard", rationals({2, 0, -1})}});
}

inline std::string dataPath(const std::string& name) {
  return std::string(BETTICHAR_DATA_DIR) + "/" + name;
}

}  // namespace fixtures
