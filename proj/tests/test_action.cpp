#include <doctest.h>

#include <algorithm>
#include <map>

#include "bettichar/action.hpp"
#include "fixtures.hpp"

using namespace bettichar;
using fixtures::twisted;

TEST_CASE("acting with the inverse 4-cycle reproduces the reference d^g") {
  const GradedRing r = fixtures::ringS4();
  const auto cycle = GroupElementAction::fromPermutation({2, 3, 4, 1});
  const GradedMatrix d1g =
      actOnMatrix(inverseAction(cycle), fixtures::referenceD1(r), r);
  CHECK(d1g == matrixFromStrings(twisted(2, 6), twisted(3, 8),
                                 fixtures::d1CycleGrid(), r));
  CHECK(d1g.at(0, 0) == parsePolynomial("-x2", r));

  const GradedMatrix d2g =
      actOnMatrix(inverseAction(cycle), fixtures::referenceD2(r), r);
  CHECK(d2g == matrixFromStrings(twisted(3, 8), twisted(4, 3),
                                 fixtures::d2CycleGrid(), r));
}

TEST_CASE("identity action leaves matrices unchanged") {
  const GradedRing r = fixtures::ringS4();
  const auto id = GroupElementAction::fromPermutation({1, 2, 3, 4});
  const GradedMatrix d1 = fixtures::referenceD1(r);
  CHECK(actOnMatrix(id, d1, r) == d1);
}

TEST_CASE("acting with g then g^{-1} is the identity") {
  const GradedRing r = fixtures::ringS4();
  const auto g = GroupElementAction::fromPermutation({3, 1, 4, 2});
  const GradedMatrix d1 = fixtures::referenceD1(r);
  CHECK(actOnMatrix(g, actOnMatrix(inverseAction(g), d1, r), r) == d1);
}

TEST_CASE("the entrywise action distributes over composition") {
  const GradedRing r = fixtures::ringS4();
  const auto g = GroupElementAction::fromPermutation({2, 3, 4, 1});
  const GradedMatrix psi0 =
      fixtures::psi0FromGrid(fixtures::psi0ThreeCycleGrid(), r);
  const GradedMatrix d1 = fixtures::referenceD1(r);
  CHECK(actOnMatrix(g, compose(psi0, d1), r) ==
        compose(actOnMatrix(g, psi0, r), actOnMatrix(g, d1, r)));
  CHECK(validateGraded(actOnMatrix(g, d1, r), r).ok());
}

TEST_CASE("inverse of a permutation action") {
  const auto cycle = GroupElementAction::fromPermutation({2, 3, 4, 1});
  const auto inverse = inverseAction(cycle);
  REQUIRE(inverse.permutation().has_value());
  CHECK(*inverse.permutation() == std::vector<std::size_t>{4, 1, 2, 3});
  CHECK(inverseAction(inverse) == cycle);

  const auto id = GroupElementAction::fromPermutation({1, 2});
  CHECK(inverseAction(id) == id);
}

TEST_CASE("inverse of a scaling action") {
  RationalMatrix m(1, 1);
  m.at(0, 0) = 2;
  const auto g = GroupElementAction::fromMatrix(m);
  CHECK(inverseAction(g).matrix().at(0, 0) == Rational(1, 2));
  CHECK(inverseAction(inverseAction(g)) == g);

  RationalMatrix singular(2, 2);
  singular.at(0, 0) = 1;
  singular.at(0, 1) = 1;
  CHECK_THROWS_AS(inverseAction(GroupElementAction::fromMatrix(singular)),
                  ValidationError);
}

TEST_CASE("induced psi0 reproduces the reference matrices") {
  const GradedRing r = fixtures::ringS4();
  const auto gens = fixtures::squarefreeGenerators();
  const GradedFreeModule f0(twisted(2, 6));

  const GradedMatrix cycle = inducedPsi0(
      gens, GroupElementAction::fromPermutation({2, 3, 4, 1}), f0, r);
  CHECK(cycle == fixtures::psi0FromGrid(fixtures::psi0CycleGrid(), r));
  CHECK(cycle.at(2, 0) == Polynomial::constant(1, 4));  // column 1, row 3

  CHECK(inducedPsi0(gens, GroupElementAction::fromPermutation({2, 3, 1, 4}),
                    f0, r) ==
        fixtures::psi0FromGrid(fixtures::psi0ThreeCycleGrid(), r));
  CHECK(inducedPsi0(gens, GroupElementAction::fromPermutation({2, 1, 4, 3}),
                    f0, r) ==
        fixtures::psi0FromGrid(fixtures::psi0DoubleTranspositionGrid(), r));
  CHECK(inducedPsi0(gens, GroupElementAction::fromPermutation({2, 1, 3, 4}),
                    f0, r) ==
        fixtures::psi0FromGrid(fixtures::psi0TranspositionGrid(), r));
  CHECK(inducedPsi0(gens, GroupElementAction::fromPermutation({1, 2, 3, 4}),
                    f0, r) == identityMatrix(f0, r));
}

TEST_CASE("induced psi0 composes inversely") {
  const GradedRing r = fixtures::ringS4();
  const auto gens = fixtures::squarefreeGenerators();
  const GradedFreeModule f0(twisted(2, 6));
  const auto g = GroupElementAction::fromPermutation({2, 3, 4, 1});
  CHECK(compose(inducedPsi0(gens, g, f0, r),
                inducedPsi0(gens, inverseAction(g), f0, r)) ==
        identityMatrix(f0, r));
}

TEST_CASE("induced psi0 detects unstable generator sets") {
  const GradedRing r = fixtures::ringS3();
  const std::vector<Monomial> gens{Monomial({1, 1, 0})};
  const GradedFreeModule f0(twisted(2, 1));
  // (123) sends x1*x2 to x2*x3, which is not listed.
  CHECK_THROWS_AS(inducedPsi0(gens,
                              GroupElementAction::fromPermutation({2, 3, 1}),
                              f0, r),
                  InstabilityError);
}

TEST_CASE("induced psi0 requires a monomial action") {
  const GradedRing r = fixtures::ringS2();
  RationalMatrix m(2, 2);
  m.at(0, 0) = 1;
  m.at(1, 0) = 1;
  m.at(1, 1) = 1;
  const std::vector<Monomial> gens{Monomial({1, 0}), Monomial({0, 1})};
  CHECK_THROWS_AS(inducedPsi0(gens, GroupElementAction::fromMatrix(m),
                              GradedFreeModule(twisted(1, 2)), r),
                  UnsupportedActionError);
}

TEST_CASE("S4 class data validates against the class equation") {
  const GradedRing r = fixtures::ringS4();
  const GroupData g = fixtures::groupS4();
  CHECK(validateGroupData(g, r).ok());

  // Oracle: enumerate all 24 permutations by cycle type.
  std::vector<int> perm{1, 2, 3, 4};
  std::map<std::vector<int>, int> sizeByType;
  do {
    std::vector<bool> seen(4, false);
    std::vector<int> type;
    for (int start = 0; start < 4; ++start) {
      if (seen[start]) continue;
      int length = 0;
      int at = start;
      while (!seen[at]) {
        seen[at] = true;
        at = perm[at] - 1;
        ++length;
      }
      type.push_back(length);
    }
    std::sort(type.begin(), type.end());
    ++sizeByType[type];
  } while (std::next_permutation(perm.begin(), perm.end()));

  CHECK(sizeByType[{1, 1, 1, 1}] == 1);   // id
  CHECK(sizeByType[{1, 1, 2}] == 6);      // (12)
  CHECK(sizeByType[{2, 2}] == 3);         // (12)(34)
  CHECK(sizeByType[{1, 3}] == 8);         // (123)
  CHECK(sizeByType[{4}] == 6);            // (1234)
  long long sum = 0;
  for (const auto& [type, count] : sizeByType) sum += count;
  CHECK(sum == g.order);
}

TEST_CASE("group validation reports size and invertibility violations") {
  const GradedRing r = fixtures::ringS4();
  GroupData g = fixtures::groupS4();
  g.classes[0].size = 5;  // sizes now sum to 23
  CHECK(!validateGroupData(g, r).ok());

  GroupData h = fixtures::groupS4();
  RationalMatrix singular(4, 4);
  h.classes[1].representative = GroupElementAction::fromMatrix(singular);
  const GroupReport report = validateGroupData(h, r);
  REQUIRE(!report.ok());
  CHECK(report.toString().find("singular") != std::string::npos);
}

TEST_CASE("group validation enforces identity and involution invariants") {
  const GradedRing r = fixtures::ringS4();
  GroupData g = fixtures::groupS4();
  g.identityClassIndex = 0;  // points at the 4-cycle
  CHECK(!validateGroupData(g, r).ok());

  GroupData h = fixtures::groupS4();
  h.classes[0].inverseClassIndex = 1;  // not an involution
  CHECK(!validateGroupData(h, r).ok());
}

TEST_CASE("degree preservation is validated") {
  const GradedRing bigraded({"x1", "x2"},
                            {DegreeVector({1, 0}), DegreeVector({0, 1})},
                            DegreeVector({1, 1}));
  GroupData g;
  g.order = 2;
  g.classes = {
      {"id", GroupElementAction::fromPermutation({1, 2}), 1, 0},
      {"swap", GroupElementAction::fromPermutation({2, 1}), 1, 1}};
  g.identityClassIndex = 0;
  // The swap mixes variables of different multidegrees.
  const GroupReport report = validateGroupData(g, bigraded);
  REQUIRE(!report.ok());
  CHECK(report.toString().find("mixes degrees") != std::string::npos);
}

TEST_CASE("psi0 validation catches shape, constants, and singularity") {
  const GradedRing r = fixtures::ringS4();
  const GradedFreeModule f0(twisted(2, 6));
  Psi0Set good = fixtures::referencePsi0(r);
  CHECK(validatePsi0(good, f0, 5, r).ok());

  Psi0Set wrongCount = good;
  wrongCount.matrices.pop_back();
  CHECK(!validatePsi0(wrongCount, f0, 5, r).ok());

  Psi0Set singular = good;
  singular.matrices[0].at(2, 0) = Polynomial();  // kills the only 1 in column 1
  CHECK(!validatePsi0(singular, f0, 5, r).ok());
}
