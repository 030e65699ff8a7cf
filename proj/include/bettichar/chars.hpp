#pragma once

#include <string>
#include <vector>

#include "bettichar/action.hpp"

namespace bettichar {

/// Values of a class function, one per conjugacy class in GroupData order.
using ClassFunction = std::vector<Rational>;

struct Irreducible {
  std::string name;
  ClassFunction values;
};

/// User-supplied table of irreducible characters with rational values
/// (covers all symmetric groups; groups with irrational irreducible
/// characters cannot be expressed and are out of scope). Validated on
/// load: rows pairwise orthonormal, dimensions positive integers.
class CharacterTable {
public:
  CharacterTable() = default;
  explicit CharacterTable(std::vector<Irreducible> irreducibles)
      : irreducibles_(std::move(irreducibles)) {}

  const std::vector<Irreducible>& irreducibles() const {
    return irreducibles_;
  }
  std::size_t size() const { return irreducibles_.size(); }

  /// Throws ValidationError when the table is inconsistent with the
  /// group data.
  void validate(const GroupData& g) const;

private:
  std::vector<Irreducible> irreducibles_;
};

/// (1/|G|) sum_k |C_k| chi(g_k) psi(g_k^{-1}), reading psi at the inverse
/// class through inverseClassIndex.
Rational innerProduct(const ClassFunction& chi, const ClassFunction& psi,
                      const GroupData& g);

struct Multiplicity {
  std::string name;
  Rational count;  // integral and nonnegative on success
};

/// Multiplicities of the table's irreducibles in beta. Succeeds only if
/// every multiplicity is a nonnegative integer and the combination
/// reconstructs beta exactly; otherwise raises
/// NonIntegralDecompositionError (an inconsistent table or an invalid
/// character). Returns one entry per table row, zeros included.
std::vector<Multiplicity> decompose(const ClassFunction& beta,
                                    const CharacterTable& table,
                                    const GroupData& g);

}  // namespace bettichar
