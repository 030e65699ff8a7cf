#include <doctest.h>

#include "bettichar/chars.hpp"
#include "fixtures.hpp"

using namespace bettichar;
using fixtures::rationals;

namespace {

Rational multiplicityOf(const std::vector<Multiplicity>& list,
                        const std::string& name) {
  for (const auto& m : list)
    if (m.name == name) return m.count;
  FAIL("no multiplicity for " << name);
  return 0;
}

}  // namespace

TEST_CASE("the fixture tables are orthonormal") {
  fixtures::tableS4().validate(fixtures::groupS4());
  fixtures::tableS3().validate(fixtures::groupS3());
}

TEST_CASE("inner products over S4") {
  const GroupData g = fixtures::groupS4();
  const CharacterTable t = fixtures::tableS4();
  const ClassFunction& trivial = t.irreducibles()[0].values;
  const ClassFunction& sign = t.irreducibles()[1].values;
  const ClassFunction& standard = t.irreducibles()[2].values;

  CHECK(innerProduct(trivial, trivial, g) == 1);
  CHECK(innerProduct(standard, sign, g) == 0);
  // <beta_{0,2}, trivial> = (6*0 + 8*0 + 3*2 + 6*2 + 1*6)/24.
  CHECK(innerProduct(rationals({0, 0, 2, 2, 6}), trivial, g) == 1);

  CHECK_THROWS_AS(innerProduct(rationals({1, 2}), trivial, g), ShapeError);
}

TEST_CASE("decomposition of the reference Betti characters") {
  const GroupData g = fixtures::groupS4();
  const CharacterTable t = fixtures::tableS4();

  const auto beta02 = decompose(rationals({0, 0, 2, 2, 6}), t, g);
  CHECK(multiplicityOf(beta02, "trivial") == 1);
  CHECK(multiplicityOf(beta02, "sign") == 0);
  CHECK(multiplicityOf(beta02, "standard") == 1);
  CHECK(multiplicityOf(beta02, "standard_sign") == 0);
  CHECK(multiplicityOf(beta02, "two_dim") == 1);

  const auto beta13 = decompose(rationals({0, -1, 0, 0, 8}), t, g);
  CHECK(multiplicityOf(beta13, "standard") == 1);
  CHECK(multiplicityOf(beta13, "standard_sign") == 1);
  CHECK(multiplicityOf(beta13, "two_dim") == 1);
  CHECK(multiplicityOf(beta13, "trivial") == 0);

  const auto beta24 = decompose(rationals({1, 0, -1, -1, 3}), t, g);
  CHECK(multiplicityOf(beta24, "standard_sign") == 1);
  CHECK(multiplicityOf(beta24, "trivial") == 0);
  CHECK(multiplicityOf(beta24, "sign") == 0);
  CHECK(multiplicityOf(beta24, "standard") == 0);
  CHECK(multiplicityOf(beta24, "two_dim") == 0);
}

TEST_CASE("dimension counts match the multiplicities") {
  const GroupData g = fixtures::groupS4();
  const CharacterTable t = fixtures::tableS4();
  for (const auto& beta :
       {rationals({0, 0, 2, 2, 6}), rationals({0, -1, 0, 0, 8}),
        rationals({1, 0, -1, -1, 3})}) {
    const auto multiplicities = decompose(beta, t, g);
    Rational dimension = 0;
    for (std::size_t i = 0; i < multiplicities.size(); ++i)
      dimension += multiplicities[i].count *
                   t.irreducibles()[i].values[g.identityClassIndex];
    CHECK(dimension == beta[g.identityClassIndex]);
  }
}

TEST_CASE("each irreducible decomposes as a unit vector") {
  const GroupData g = fixtures::groupS4();
  const CharacterTable t = fixtures::tableS4();
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto list = decompose(t.irreducibles()[i].values, t, g);
    for (std::size_t k = 0; k < list.size(); ++k)
      CHECK(list[k].count == (k == i ? 1 : 0));
  }
}

TEST_CASE("decomposition is additive") {
  const GroupData g = fixtures::groupS3();
  const CharacterTable t = fixtures::tableS3();
  const ClassFunction a = rationals({3, 1, 0});
  const ClassFunction b = rationals({2, 0, -1});
  ClassFunction sum(a);
  for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += b[k];
  const auto da = decompose(a, t, g);
  const auto db = decompose(b, t, g);
  const auto ds = decompose(sum, t, g);
  for (std::size_t k = 0; k < ds.size(); ++k)
    CHECK(ds[k].count == da[k].count + db[k].count);
}

TEST_CASE("non-characters are rejected") {
  const GroupData g = fixtures::groupS4();
  const CharacterTable t = fixtures::tableS4();
  // Norm 1/24: not a character.
  CHECK_THROWS_AS(decompose(rationals({1, 0, 0, 0, 0}), t, g),
                  NonIntegralDecompositionError);
  // Integral inner products but a negative multiplicity.
  ClassFunction minusTrivial = rationals({-1, -1, -1, -1, -1});
  CHECK_THROWS_AS(decompose(minusTrivial, t, g),
                  NonIntegralDecompositionError);
}

TEST_CASE("reconstruction failures are detected") {
  const GroupData g = fixtures::groupS4();
  // A table missing rows cannot reconstruct characters outside its span.
  CharacterTable partial({{"trivial", rationals({1, 1, 1, 1, 1})},
                          {"sign", rationals({-1, 1, 1, -1, 1})}});
  partial.validate(g);
  // The regular character decomposes over the full table only.
  CHECK_THROWS_AS(decompose(rationals({0, 0, 0, 0, 24}), partial, g),
                  NonIntegralDecompositionError);
}

TEST_CASE("table validation rejects bad tables") {
  const GroupData g = fixtures::groupS4();
  CharacterTable notOrthonormal({{"a", rationals({1, 1, 1, 1, 1})},
                                 {"b", rationals({1, 1, 1, 1, 1})}});
  CHECK_THROWS_AS(notOrthonormal.validate(g), ValidationError);

  CharacterTable wrongLength({{"a", rationals({1, 1})}});
  CHECK_THROWS_AS(wrongLength.validate(g), ValidationError);

  CharacterTable negativeDimension({{"a", rationals({-1, -1, -1, -1, -1})}});
  CHECK_THROWS_AS(negativeDimension.validate(g), ValidationError);
}
