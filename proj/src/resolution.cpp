#include "bettichar/resolution.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "complex_json.hpp"

namespace bettichar {

static void checkAdjacency(const std::vector<GradedFreeModule>& modules,
                           const std::vector<GradedMatrix>& differentials) {
  if (modules.empty())
    throw ValidationError("complex: at least one module required");
  if (differentials.size() + 1 != modules.size())
    throw ValidationError("complex: expected one differential per adjacent "
                          "module pair");
  for (std::size_t i = 0; i < differentials.size(); ++i) {
    if (differentials[i].codomain() != modules[i] ||
        differentials[i].domain() != modules[i + 1])
      throw ValidationError("complex: differential " + std::to_string(i + 1) +
                            " does not match the adjacent modules");
  }
}

FreeComplex::FreeComplex(std::vector<GradedFreeModule> modules,
                         std::vector<GradedMatrix> differentials)
    : modules_(std::move(modules)), differentials_(std::move(differentials)) {
  checkAdjacency(modules_, differentials_);
  for (std::size_t i = 0; i + 1 < differentials_.size(); ++i) {
    if (!isZeroMatrix(compose(differentials_[i], differentials_[i + 1])))
      throw ValidationError("complex: D" + std::to_string(i + 1) + " * D" +
                            std::to_string(i + 2) + " != 0");
  }
}

FreeComplex::FreeComplex(Unchecked, std::vector<GradedFreeModule> modules,
                         std::vector<GradedMatrix> differentials)
    : modules_(std::move(modules)), differentials_(std::move(differentials)) {
  checkAdjacency(modules_, differentials_);
}

std::vector<std::size_t> FreeComplex::ranks() const {
  std::vector<std::size_t> out;
  out.reserve(modules_.size());
  for (const auto& m : modules_) out.push_back(m.rank());
  return out;
}

namespace {

// Increasing index tuples of the given size over {0,...,n-1}, in
// lexicographic order.
std::vector<std::vector<std::size_t>> subsetsOfSize(std::size_t n,
                                                    std::size_t size) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  auto rec = [&](auto&& self, std::size_t next) -> void {
    if (current.size() == size) {
      out.push_back(current);
      return;
    }
    for (std::size_t i = next; i < n; ++i) {
      current.push_back(i);
      self(self, i + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

Monomial lcmOfSubset(const std::vector<Monomial>& generators,
                     const std::vector<std::size_t>& subset,
                     std::size_t varCount) {
  Monomial out = Monomial::unit(varCount);
  for (std::size_t index : subset) out = Monomial::lcm(out, generators[index]);
  return out;
}

}  // namespace

FreeComplex taylorComplex(std::vector<Monomial> generators, TaylorMode mode,
                          const GradedRing& ring) {
  if (generators.empty())
    throw ValidationError("taylor complex: empty generator list");
  for (const auto& g : generators)
    if (g.varCount() != ring.varCount())
      throw ValidationError("taylor complex: generator over wrong variable "
                            "count");
  std::sort(generators.begin(), generators.end());
  for (std::size_t i = 0; i + 1 < generators.size(); ++i)
    if (generators[i] == generators[i + 1])
      throw ValidationError("taylor complex: duplicate generator");

  const std::size_t s = generators.size();
  const std::size_t minSize = (mode == TaylorMode::resolveIdeal) ? 1 : 0;

  // Subsets by size, with index lookup for differential assembly.
  std::vector<std::vector<std::vector<std::size_t>>> levels;
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> indexOf;
  for (std::size_t size = minSize; size <= s; ++size) {
    levels.push_back(subsetsOfSize(s, size));
    indexOf.emplace_back();
    for (std::size_t i = 0; i < levels.back().size(); ++i)
      indexOf.back().emplace(levels.back()[i], i);
  }

  std::vector<GradedFreeModule> modules;
  for (const auto& level : levels) {
    std::vector<DegreeVector> degrees;
    degrees.reserve(level.size());
    for (const auto& subset : level)
      degrees.push_back(degreeOfMonomial(
          lcmOfSubset(generators, subset, ring.varCount()), ring));
    modules.push_back(GradedFreeModule(std::move(degrees)));
  }

  std::vector<GradedMatrix> differentials;
  for (std::size_t level = 1; level < levels.size(); ++level) {
    GradedMatrix d(modules[level - 1], modules[level]);
    for (std::size_t col = 0; col < levels[level].size(); ++col) {
      const auto& subset = levels[level][col];
      const Monomial whole =
          lcmOfSubset(generators, subset, ring.varCount());
      for (std::size_t p = 0; p < subset.size(); ++p) {
        std::vector<std::size_t> smaller = subset;
        smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(p));
        const Monomial part =
            lcmOfSubset(generators, smaller, ring.varCount());
        const Rational sign = (p % 2 == 0) ? 1 : -1;  // (-1)^(pos+1), pos = p+1
        const std::size_t row = indexOf[level - 1].at(smaller);
        d.at(row, col) =
            Polynomial::term(part.dividedInto(whole), sign);
      }
    }
    differentials.push_back(std::move(d));
  }

  FreeComplex out(std::move(modules), std::move(differentials));
  Augmentation aug;
  aug.kind = (mode == TaylorMode::resolveIdeal) ? Augmentation::Kind::ideal
                                                : Augmentation::Kind::quotient;
  aug.generators = std::move(generators);
  out.setAugmentation(std::move(aug));
  return out;
}

bool ComplexReport::allHomogeneous() const {
  return std::all_of(homogeneous.begin(), homogeneous.end(),
                     [](const GradedReport& r) { return r.ok(); });
}

bool ComplexReport::allCompositionZero() const {
  return std::all_of(compositionZero.begin(), compositionZero.end(),
                     [](bool b) { return b; });
}

bool ComplexReport::allMinimal() const {
  return std::all_of(minimal.begin(), minimal.end(),
                     [](bool b) { return b; });
}

static bool hasConstantEntry(const GradedMatrix& a) {
  for (std::size_t u = 0; u < a.rows(); ++u)
    for (std::size_t v = 0; v < a.cols(); ++v) {
      const auto value = a.at(u, v).constantValue();
      if (value && *value != 0) return true;
    }
  return false;
}

ComplexReport verifyComplex(const FreeComplex& c, const GradedRing& ring) {
  ComplexReport report;
  for (std::size_t i = 1; i <= c.length(); ++i) {
    report.homogeneous.push_back(validateGraded(c.differential(i), ring));
    report.minimal.push_back(!hasConstantEntry(c.differential(i)));
  }
  for (std::size_t i = 1; i + 1 <= c.length(); ++i)
    report.compositionZero.push_back(
        isZeroMatrix(compose(c.differential(i), c.differential(i + 1))));
  return report;
}

namespace {

// Mutable working copy of a complex, indexed so that grids[i] is the
// matrix of D_{i+1} : module i+1 -> module i.
struct Workspace {
  std::vector<std::vector<DegreeVector>> moduleDegrees;
  std::vector<std::vector<std::vector<Polynomial>>> grids;

  std::size_t diffCount() const { return grids.size(); }
  std::size_t rowsOf(std::size_t d) const { return grids[d].size(); }
  std::size_t colsOf(std::size_t d) const {
    return grids[d].empty() ? moduleDegrees[d + 1].size()
                            : grids[d][0].size();
  }
};

Workspace makeWorkspace(const FreeComplex& c) {
  Workspace w;
  for (std::size_t i = 0; i < c.moduleCount(); ++i)
    w.moduleDegrees.push_back(c.module(i).basisDegrees);
  for (std::size_t i = 1; i <= c.length(); ++i) {
    const GradedMatrix& d = c.differential(i);
    std::vector<std::vector<Polynomial>> grid(d.rows());
    for (std::size_t u = 0; u < d.rows(); ++u) {
      grid[u].reserve(d.cols());
      for (std::size_t v = 0; v < d.cols(); ++v) grid[u].push_back(d.at(u, v));
    }
    w.grids.push_back(std::move(grid));
  }
  return w;
}

struct Pivot {
  std::size_t diff;
  std::size_t row;
  std::size_t col;
  Rational value;
};

std::optional<Pivot> findPivot(const Workspace& w, ScanOrder order) {
  const std::size_t n = w.diffCount();
  for (std::size_t di = 0; di < n; ++di) {
    const std::size_t d = (order == ScanOrder::forward) ? di : n - 1 - di;
    const std::size_t rows = w.rowsOf(d);
    const std::size_t cols = w.colsOf(d);
    for (std::size_t ri = 0; ri < rows; ++ri) {
      const std::size_t r = (order == ScanOrder::forward) ? ri : rows - 1 - ri;
      for (std::size_t ci = 0; ci < cols; ++ci) {
        const std::size_t c =
            (order == ScanOrder::forward) ? ci : cols - 1 - ci;
        const auto value = w.grids[d][r][c].constantValue();
        if (value && *value != 0) return Pivot{d, r, c, *value};
      }
    }
  }
  return std::nullopt;
}

void eraseRow(std::vector<std::vector<Polynomial>>& grid, std::size_t row) {
  grid.erase(grid.begin() + static_cast<std::ptrdiff_t>(row));
}

void eraseCol(std::vector<std::vector<Polynomial>>& grid, std::size_t col) {
  for (auto& row : grid)
    row.erase(row.begin() + static_cast<std::ptrdiff_t>(col));
}

// One cancellation step at the pivot: clear the pivot row of D by column
// operations (domain basis change, mirrored as row operations on the next
// differential), clear the pivot column by row operations (codomain basis
// change, mirrored as column operations on the previous differential),
// then delete the pivot row/column and the cancelled basis elements.
// Composition-zero forces the mirrored row/column to vanish, so the
// deletions are clean.
void cancelAt(Workspace& w, const Pivot& p) {
  auto& d = w.grids[p.diff];
  const Rational inverse = Rational(1) / p.value;
  const std::size_t rows = w.rowsOf(p.diff);
  const std::size_t cols = w.colsOf(p.diff);

  // Clear row p.row: column v' -= (entry/pivot) * column v.
  for (std::size_t v = 0; v < cols; ++v) {
    if (v == p.col || d[p.row][v].isZero()) continue;
    const Polynomial q = d[p.row][v].scaled(inverse);
    for (std::size_t u = 0; u < rows; ++u)
      d[u][v] = d[u][v] - q * d[u][p.col];
    if (p.diff + 1 < w.diffCount()) {
      auto& next = w.grids[p.diff + 1];
      const std::size_t nextCols = w.colsOf(p.diff + 1);
      for (std::size_t wcol = 0; wcol < nextCols; ++wcol)
        next[p.col][wcol] = next[p.col][wcol] + q * next[v][wcol];
    }
  }

  // Clear column p.col: row u' -= (entry/pivot) * row u.
  for (std::size_t u = 0; u < rows; ++u) {
    if (u == p.row || d[u][p.col].isZero()) continue;
    const Polynomial q = d[u][p.col].scaled(inverse);
    for (std::size_t v = 0; v < cols; ++v) d[u][v] = d[u][v] - q * d[p.row][v];
    if (p.diff > 0) {
      auto& prev = w.grids[p.diff - 1];
      for (std::size_t wrow = 0; wrow < w.rowsOf(p.diff - 1); ++wrow)
        prev[wrow][p.row] = prev[wrow][p.row] + q * prev[wrow][u];
    }
  }

  assert([&] {
    if (p.diff + 1 < w.diffCount())
      for (std::size_t wcol = 0; wcol < w.colsOf(p.diff + 1); ++wcol)
        if (!w.grids[p.diff + 1][p.col][wcol].isZero()) return false;
    if (p.diff > 0)
      for (std::size_t wrow = 0; wrow < w.rowsOf(p.diff - 1); ++wrow)
        if (!w.grids[p.diff - 1][wrow][p.row].isZero()) return false;
    return true;
  }());

  eraseRow(d, p.row);
  eraseCol(d, p.col);
  w.moduleDegrees[p.diff].erase(w.moduleDegrees[p.diff].begin() +
                                static_cast<std::ptrdiff_t>(p.row));
  w.moduleDegrees[p.diff + 1].erase(w.moduleDegrees[p.diff + 1].begin() +
                                    static_cast<std::ptrdiff_t>(p.col));
  if (p.diff + 1 < w.diffCount()) eraseRow(w.grids[p.diff + 1], p.col);
  if (p.diff > 0) eraseCol(w.grids[p.diff - 1], p.row);
}

}  // namespace

FreeComplex minimize(const FreeComplex& c, const GradedRing& ring,
                     ScanOrder order) {
  const ComplexReport input = verifyComplex(c, ring);
  if (!input.allHomogeneous())
    throw ValidationError("minimize: input differential violates the degree "
                          "rule");
  if (!input.allCompositionZero())
    throw ValidationError("minimize: input is not a complex (D_i * D_{i+1} "
                          "!= 0)");

  Workspace w = makeWorkspace(c);
  while (auto pivot = findPivot(w, order)) cancelAt(w, *pivot);

  // Drop trailing rank-zero modules; the degree-zero module stays.
  while (w.moduleDegrees.size() > 1 && w.moduleDegrees.back().empty()) {
    w.moduleDegrees.pop_back();
    w.grids.pop_back();
  }

  std::vector<GradedFreeModule> modules;
  for (auto& degrees : w.moduleDegrees)
    modules.push_back(GradedFreeModule(std::move(degrees)));
  std::vector<GradedMatrix> differentials;
  for (std::size_t d = 0; d < w.grids.size(); ++d) {
    GradedMatrix m(modules[d], modules[d + 1]);
    for (std::size_t u = 0; u < m.rows(); ++u)
      for (std::size_t v = 0; v < m.cols(); ++v)
        m.at(u, v) = std::move(w.grids[d][u][v]);
    differentials.push_back(std::move(m));
  }

  FreeComplex out(std::move(modules), std::move(differentials));
  if (c.augmentation()) out.setAugmentation(*c.augmentation());
  return out;
}


FreeComplex importComplex(const std::string& text, const GradedRing& ring) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("complex file: ") + e.what());
  }
  return detail::complexFromJson(doc, ring, "complex");
}

std::string exportComplex(const FreeComplex& c, const GradedRing& ring) {
  return detail::complexToJson(c, ring).dump(2) + "\n";
}

namespace detail {

DegreeVector degreeFromJson(const nlohmann::json& value,
                            const std::string& path) {
  if (!value.is_array())
    throw ParseError(path + ": degree must be an array of integers");
  std::vector<long long> entries;
  for (const auto& e : value) {
    if (!e.is_number_integer())
      throw ParseError(path + ": degree entries must be integers");
    entries.push_back(e.get<long long>());
  }
  return DegreeVector(std::move(entries));
}

FreeComplex complexFromJson(const nlohmann::json& doc, const GradedRing& ring,
                            const std::string& path) {
  if (!doc.is_object() || !doc.contains("modules") ||
      !doc.contains("matrices"))
    throw ParseError(path + ": expected an object with 'modules' and "
                            "'matrices'");
  const auto& modulesJson = doc.at("modules");
  const auto& matricesJson = doc.at("matrices");
  if (!modulesJson.is_array() || modulesJson.empty())
    throw ParseError(path + ".modules: expected a nonempty array");
  if (!matricesJson.is_array() ||
      matricesJson.size() + 1 != modulesJson.size())
    throw ParseError(path + ".matrices: expected one matrix per adjacent "
                            "module pair");

  std::vector<GradedFreeModule> modules;
  for (std::size_t i = 0; i < modulesJson.size(); ++i) {
    const std::string mpath = path + ".modules[" + std::to_string(i) + "]";
    if (!modulesJson[i].is_array())
      throw ParseError(mpath + ": expected an array of degrees");
    std::vector<DegreeVector> degrees;
    for (std::size_t k = 0; k < modulesJson[i].size(); ++k) {
      DegreeVector d = degreeFromJson(
          modulesJson[i][k], mpath + "[" + std::to_string(k) + "]");
      if (d.rank() != ring.gradingRank())
        throw ParseError(mpath + "[" + std::to_string(k) +
                         "]: degree rank does not match the ring grading");
      degrees.push_back(std::move(d));
    }
    modules.push_back(GradedFreeModule(std::move(degrees)));
  }

  std::vector<GradedMatrix> differentials;
  for (std::size_t i = 0; i < matricesJson.size(); ++i) {
    const std::string mpath = path + ".matrices[" + std::to_string(i) + "]";
    const auto& grid = matricesJson[i];
    if (!grid.is_array() || grid.size() != modules[i].rank())
      throw ParseError(mpath + ": expected " +
                       std::to_string(modules[i].rank()) + " rows");
    GradedMatrix m(modules[i], modules[i + 1]);
    for (std::size_t u = 0; u < grid.size(); ++u) {
      const auto& row = grid[u];
      if (!row.is_array() || row.size() != modules[i + 1].rank())
        throw ParseError(mpath + "[" + std::to_string(u) + "]: expected " +
                         std::to_string(modules[i + 1].rank()) + " entries");
      for (std::size_t v = 0; v < row.size(); ++v) {
        if (!row[v].is_string())
          throw ParseError(mpath + "[" + std::to_string(u) + "][" +
                           std::to_string(v) +
                           "]: entries are polynomial strings");
        try {
          m.at(u, v) = parsePolynomial(row[v].get<std::string>(), ring);
        } catch (const ParseError& e) {
          throw ParseError(mpath + "[" + std::to_string(u) + "][" +
                           std::to_string(v) + "]: " + e.what());
        }
      }
    }
    differentials.push_back(std::move(m));
  }

  for (std::size_t i = 0; i < differentials.size(); ++i) {
    const GradedReport report = validateGraded(differentials[i], ring);
    if (!report.ok())
      throw ValidationError(path + ".matrices[" + std::to_string(i) +
                            "]: " + report.toString());
  }
  for (std::size_t i = 0; i + 1 < differentials.size(); ++i) {
    if (!isZeroMatrix(compose(differentials[i], differentials[i + 1])))
      throw ValidationError(path + ": D" + std::to_string(i + 1) + " * D" +
                            std::to_string(i + 2) + " != 0");
  }
  return FreeComplex(std::move(modules), std::move(differentials));
}

nlohmann::json complexToJson(const FreeComplex& c, const GradedRing& ring) {
  nlohmann::json modules = nlohmann::json::array();
  for (std::size_t i = 0; i < c.moduleCount(); ++i) {
    nlohmann::json degrees = nlohmann::json::array();
    for (const auto& d : c.module(i).basisDegrees)
      degrees.push_back(d.entries);
    modules.push_back(std::move(degrees));
  }
  nlohmann::json matrices = nlohmann::json::array();
  for (std::size_t i = 1; i <= c.length(); ++i) {
    const GradedMatrix& m = c.differential(i);
    nlohmann::json grid = nlohmann::json::array();
    for (std::size_t u = 0; u < m.rows(); ++u) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t v = 0; v < m.cols(); ++v)
        row.push_back(formatPolynomial(m.at(u, v), ring));
      grid.push_back(std::move(row));
    }
    matrices.push_back(std::move(grid));
  }
  return nlohmann::json{{"modules", std::move(modules)},
                        {"matrices", std::move(matrices)}};
}

}  // namespace detail

}  // namespace bettichar
