#include "bettichar/chars.hpp"

#include <sstream>

namespace bettichar {

Rational innerProduct(const ClassFunction& chi, const ClassFunction& psi,
                      const GroupData& g) {
  if (chi.size() != g.classCount() || psi.size() != g.classCount())
    throw ShapeError("class function length does not match the class count");
  Rational sum = 0;
  for (std::size_t k = 0; k < g.classCount(); ++k)
    sum += Rational(static_cast<long>(g.classes[k].size)) * chi[k] *
           psi[g.classes[k].inverseClassIndex];
  return sum / Rational(static_cast<long>(g.order));
}

void CharacterTable::validate(const GroupData& g) const {
  if (irreducibles_.empty())
    throw ValidationError("character table: no irreducibles");
  for (const auto& irr : irreducibles_) {
    if (irr.values.size() != g.classCount())
      throw ValidationError("character table row '" + irr.name +
                            "': expected " + std::to_string(g.classCount()) +
                            " values");
    const Rational& dim = irr.values[g.identityClassIndex];
    if (!isInteger(dim) || dim <= 0)
      throw ValidationError("character table row '" + irr.name +
                            "': dimension " + formatRational(dim) +
                            " is not a positive integer");
  }
  for (std::size_t i = 0; i < irreducibles_.size(); ++i)
    for (std::size_t j = i; j < irreducibles_.size(); ++j) {
      const Rational product =
          innerProduct(irreducibles_[i].values, irreducibles_[j].values, g);
      const Rational expected = (i == j) ? 1 : 0;
      if (product != expected)
        throw ValidationError(
            "character table rows '" + irreducibles_[i].name + "' and '" +
            irreducibles_[j].name + "' are not orthonormal: <.,.> = " +
            formatRational(product));
    }
}

std::vector<Multiplicity> decompose(const ClassFunction& beta,
                                    const CharacterTable& table,
                                    const GroupData& g) {
  if (beta.size() != g.classCount())
    throw ShapeError("class function length does not match the class count");

  std::vector<Multiplicity> out;
  out.reserve(table.size());
  for (const auto& irr : table.irreducibles()) {
    const Rational m = innerProduct(beta, irr.values, g);
    if (!isInteger(m) || m < 0)
      throw NonIntegralDecompositionError(
          "multiplicity of '" + irr.name + "' is " + formatRational(m) +
          ", not a nonnegative integer; the input is not a character over "
          "this table");
    out.push_back(Multiplicity{irr.name, m});
  }

  ClassFunction reconstruction(g.classCount(), Rational(0));
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t k = 0; k < g.classCount(); ++k)
      reconstruction[k] += out[i].count * table.irreducibles()[i].values[k];
  if (reconstruction != beta)
    throw NonIntegralDecompositionError(
        "the multiplicities do not reconstruct the input character; the "
        "table is incomplete for this class function");
  return out;
}

}  // namespace bettichar
