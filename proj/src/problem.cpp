#include "bettichar/problem.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "complex_json.hpp"

namespace bettichar {

using nlohmann::json;

namespace {

const json& require(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object() || !obj.contains(key))
    throw ParseError("missing field '" + path + "'");
  return obj.at(key);
}

std::string requireString(const json& obj, const char* key,
                          const std::string& path) {
  const json& v = require(obj, key, path);
  if (!v.is_string()) throw ParseError("field '" + path + "' must be a string");
  return v.get<std::string>();
}

long long requireInteger(const json& obj, const char* key,
                         const std::string& path) {
  const json& v = require(obj, key, path);
  if (!v.is_number_integer())
    throw ParseError("field '" + path + "' must be an integer");
  return v.get<long long>();
}

const json& requireArray(const json& obj, const char* key,
                         const std::string& path) {
  const json& v = require(obj, key, path);
  if (!v.is_array()) throw ParseError("field '" + path + "' must be an array");
  return v;
}

RationalMatrix rationalGrid(const json& grid, const std::string& path) {
  if (!grid.is_array() || grid.empty())
    throw ParseError("field '" + path + "' must be a nonempty array of rows");
  const std::size_t cols = grid[0].is_array() ? grid[0].size() : 0;
  RationalMatrix out(grid.size(), cols);
  for (std::size_t r = 0; r < grid.size(); ++r) {
    const auto& row = grid[r];
    if (!row.is_array() || row.size() != cols)
      throw ParseError("field '" + path + "': ragged rows");
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& cell = row[c];
      if (cell.is_string())
        out.at(r, c) = parseRational(cell.get<std::string>());
      else if (cell.is_number_integer())
        out.at(r, c) = Rational(static_cast<long>(cell.get<long long>()));
      else
        throw ParseError("field '" + path +
                         "': entries must be rational strings or integers");
    }
  }
  return out;
}

GradedRing parseRing(const json& doc) {
  const json& ringJson = require(doc, "ring", "ring");
  const json& varsJson = requireArray(ringJson, "variables", "ring.variables");
  std::vector<std::string> names;
  for (const auto& v : varsJson) {
    if (!v.is_string())
      throw ParseError("field 'ring.variables' must hold strings");
    names.push_back(v.get<std::string>());
  }
  if (names.empty()) throw ParseError("field 'ring.variables' is empty");

  std::vector<DegreeVector> degrees;
  if (ringJson.contains("degrees")) {
    const json& degJson = requireArray(ringJson, "degrees", "ring.degrees");
    for (std::size_t i = 0; i < degJson.size(); ++i)
      degrees.push_back(detail::degreeFromJson(
          degJson[i], "ring.degrees[" + std::to_string(i) + "]"));
  } else {
    degrees.assign(names.size(), DegreeVector({1}));
  }

  DegreeVector weight;
  if (ringJson.contains("weight"))
    weight = detail::degreeFromJson(ringJson.at("weight"), "ring.weight");
  else
    weight = DegreeVector(std::vector<long long>(
        degrees.empty() ? 1 : degrees[0].rank(), 1));

  try {
    return GradedRing(std::move(names), std::move(degrees), std::move(weight));
  } catch (const ValidationError& e) {
    throw ParseError(std::string("ring: ") + e.what());
  }
}

GroupElementAction parseRepresentative(const json& rep,
                                       const std::string& path,
                                       std::size_t varCount) {
  if (rep.contains("permutation")) {
    const json& images = rep.at("permutation");
    if (!images.is_array() || images.size() != varCount)
      throw ParseError("field '" + path + ".permutation' must list " +
                       std::to_string(varCount) + " images");
    std::vector<std::size_t> list;
    for (const auto& v : images) {
      if (!v.is_number_integer() || v.get<long long>() < 1)
        throw ParseError("field '" + path +
                         ".permutation' must hold 1-indexed integers");
      list.push_back(v.get<std::size_t>());
    }
    try {
      return GroupElementAction::fromPermutation(list);
    } catch (const ValidationError& e) {
      throw ParseError("field '" + path + ".permutation': " + e.what());
    }
  }
  if (rep.contains("matrix")) {
    RationalMatrix m = rationalGrid(rep.at("matrix"), path + ".matrix");
    if (m.rows() != varCount || m.cols() != varCount)
      throw ParseError("field '" + path + ".matrix' must be " +
                       std::to_string(varCount) + "x" +
                       std::to_string(varCount));
    return GroupElementAction::fromMatrix(std::move(m));
  }
  throw ParseError("field '" + path +
                   "' needs either 'permutation' or 'matrix'");
}

GroupData parseGroup(const json& doc, const GradedRing& ring) {
  const json& groupJson = require(doc, "group", "group");
  GroupData g;
  g.order = requireInteger(groupJson, "order", "group.order");
  const std::string identityName =
      requireString(groupJson, "identityClass", "group.identityClass");
  const json& classesJson = requireArray(groupJson, "classes", "group.classes");
  if (classesJson.empty()) throw ParseError("field 'group.classes' is empty");

  std::vector<std::string> inverseNames;
  for (std::size_t k = 0; k < classesJson.size(); ++k) {
    const std::string path = "group.classes[" + std::to_string(k) + "]";
    const json& clsJson = classesJson[k];
    ConjugacyClass cls;
    cls.name = requireString(clsJson, "name", path + ".name");
    cls.size = requireInteger(clsJson, "size", path + ".size");
    cls.representative = parseRepresentative(
        require(clsJson, "representative", path + ".representative"),
        path + ".representative", ring.varCount());
    // Classes not conjugate to their inverses must say so; the default
    // covers symmetric groups and all rational-character groups.
    inverseNames.push_back(clsJson.contains("inverseClass")
                               ? requireString(clsJson, "inverseClass",
                                               path + ".inverseClass")
                               : cls.name);
    g.classes.push_back(std::move(cls));
  }

  auto indexOfClass = [&](const std::string& name,
                          const std::string& path) -> std::size_t {
    for (std::size_t k = 0; k < g.classes.size(); ++k)
      if (g.classes[k].name == name) return k;
    throw ParseError("field '" + path + "': unknown class '" + name + "'");
  };
  for (std::size_t k = 0; k < g.classes.size(); ++k)
    g.classes[k].inverseClassIndex = indexOfClass(
        inverseNames[k], "group.classes[" + std::to_string(k) + "].inverseClass");
  g.identityClassIndex = indexOfClass(identityName, "group.identityClass");

  const GroupReport report = validateGroupData(g, ring);
  if (!report.ok()) throw ParseError("group: " + report.toString());
  return g;
}

std::vector<Monomial> parseGenerators(const json& moduleJson,
                                      const GradedRing& ring) {
  const json& gensJson =
      requireArray(moduleJson, "generators", "module.generators");
  if (gensJson.empty()) throw ParseError("field 'module.generators' is empty");
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < gensJson.size(); ++i) {
    const std::string path = "module.generators[" + std::to_string(i) + "]";
    if (!gensJson[i].is_string())
      throw ParseError("field '" + path + "' must be a polynomial string");
    Polynomial p;
    try {
      p = parsePolynomial(gensJson[i].get<std::string>(), ring);
    } catch (const ParseError& e) {
      throw ParseError("field '" + path + "': " + e.what());
    }
    // Monomial ideal generators up to a unit: a single nonzero term.
    if (p.termCount() != 1)
      throw ParseError("field '" + path + "' is not a monomial");
    out.push_back(p.terms().begin()->first);
  }
  return out;
}

CharacterTable parseCharacterTable(const json& tableJson, const GroupData& g) {
  const json& rowsJson =
      requireArray(tableJson, "irreducibles", "characterTable.irreducibles");
  std::vector<Irreducible> rows;
  for (std::size_t i = 0; i < rowsJson.size(); ++i) {
    const std::string path =
        "characterTable.irreducibles[" + std::to_string(i) + "]";
    Irreducible irr;
    irr.name = requireString(rowsJson[i], "name", path + ".name");
    const json& values = requireArray(rowsJson[i], "values", path + ".values");
    if (values.size() != g.classCount())
      throw ParseError("field '" + path + ".values' must list " +
                       std::to_string(g.classCount()) + " values");
    for (const auto& v : values) {
      if (v.is_string())
        irr.values.push_back(parseRational(v.get<std::string>()));
      else if (v.is_number_integer())
        irr.values.push_back(Rational(static_cast<long>(v.get<long long>())));
      else
        throw ParseError("field '" + path +
                         ".values' must hold rational strings or integers");
    }
    rows.push_back(std::move(irr));
  }
  CharacterTable table(std::move(rows));
  try {
    table.validate(g);
  } catch (const ValidationError& e) {
    throw ParseError(std::string("characterTable: ") + e.what());
  }
  return table;
}

}  // namespace

ProblemFile parseProblem(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("problem file: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("problem file: expected an object");

  ProblemFile problem;
  problem.ring = parseRing(doc);

  const json& moduleJson = require(doc, "module", "module");
  const std::string kind = requireString(moduleJson, "kind", "module.kind");
  if (kind == "monomial-ideal")
    problem.kind = ModuleKind::monomialIdeal;
  else if (kind == "quotient-by-monomial-ideal")
    problem.kind = ModuleKind::quotientByMonomialIdeal;
  else if (kind == "presented")
    problem.kind = ModuleKind::presented;
  else
    throw ParseError("field 'module.kind': unknown kind '" + kind + "'");

  if (problem.kind != ModuleKind::presented)
    problem.generators = parseGenerators(moduleJson, problem.ring);

  problem.group = parseGroup(doc, problem.ring);

  const json& resolutionJson = require(doc, "resolution", "resolution");
  const std::string source =
      requireString(resolutionJson, "source", "resolution.source");
  if (source == "taylor-minimize") {
    problem.source = ResolutionSource::taylorMinimize;
    if (problem.kind == ModuleKind::presented)
      throw ParseError(
          "resolution.source 'taylor-minimize' requires a monomial module");
  } else if (source == "imported") {
    problem.source = ResolutionSource::imported;
    const json& complexJson =
        require(resolutionJson, "complex", "resolution.complex");
    try {
      problem.imported = detail::complexFromJson(complexJson, problem.ring,
                                                 "resolution.complex");
    } catch (const ValidationError& e) {
      throw ParseError(e.what());
    }
  } else {
    throw ParseError("field 'resolution.source': unknown source '" + source +
                     "'");
  }

  if (moduleJson.contains("psi0")) {
    if (problem.source != ResolutionSource::imported)
      throw ParseError(
          "module.psi0 is only meaningful with an imported resolution; the "
          "taylor-minimize pipeline induces psi0 from the generator action");
    if (problem.kind == ModuleKind::quotientByMonomialIdeal)
      throw ParseError(
          "module.psi0 is not accepted for quotient modules; the action on "
          "F0 = R is trivial");
    const json& psiJson = moduleJson.at("psi0");
    if (!psiJson.is_object())
      throw ParseError("field 'module.psi0' must map class names to grids");
    std::map<std::string, RationalMatrix> psi;
    for (const auto& [name, grid] : psiJson.items()) {
      const bool known =
          std::any_of(problem.group.classes.begin(),
                      problem.group.classes.end(),
                      [&](const ConjugacyClass& c) { return c.name == name; });
      if (!known)
        throw ParseError("field 'module.psi0': unknown class '" + name + "'");
      psi.emplace(name, rationalGrid(grid, "module.psi0." + name));
    }
    if (psi.size() != problem.group.classCount())
      throw ParseError("field 'module.psi0' must name every conjugacy class");
    problem.psi0 = std::move(psi);
  } else if (problem.kind == ModuleKind::presented) {
    throw ParseError("presented modules require explicit module.psi0");
  }

  if (doc.contains("characterTable"))
    problem.characterTable =
        parseCharacterTable(doc.at("characterTable"), problem.group);

  return problem;
}

ProblemFile parseProblemFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open problem file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parseProblem(buffer.str());
}

std::string renderProblem(const ProblemFile& problem) {
  json doc;

  json ring;
  ring["variables"] = problem.ring.variableNames();
  json degrees = json::array();
  for (std::size_t i = 0; i < problem.ring.varCount(); ++i)
    degrees.push_back(problem.ring.variableDegree(i).entries);
  ring["degrees"] = std::move(degrees);
  ring["weight"] = problem.ring.weight().entries;
  doc["ring"] = std::move(ring);

  json module;
  switch (problem.kind) {
    case ModuleKind::monomialIdeal:
      module["kind"] = "monomial-ideal";
      break;
    case ModuleKind::quotientByMonomialIdeal:
      module["kind"] = "quotient-by-monomial-ideal";
      break;
    case ModuleKind::presented:
      module["kind"] = "presented";
      break;
  }
  if (!problem.generators.empty()) {
    json generators = json::array();
    for (const auto& m : problem.generators)
      generators.push_back(
          formatPolynomial(Polynomial::term(m, 1), problem.ring));
    module["generators"] = std::move(generators);
  }
  if (problem.psi0) {
    json psi = json::object();
    for (const auto& [name, grid] : *problem.psi0) {
      json rows = json::array();
      for (std::size_t u = 0; u < grid.rows(); ++u) {
        json row = json::array();
        for (std::size_t v = 0; v < grid.cols(); ++v)
          row.push_back(formatRational(grid.at(u, v)));
        rows.push_back(std::move(row));
      }
      psi[name] = std::move(rows);
    }
    module["psi0"] = std::move(psi);
  }
  doc["module"] = std::move(module);

  json resolution;
  resolution["source"] = problem.source == ResolutionSource::taylorMinimize
                             ? "taylor-minimize"
                             : "imported";
  if (problem.imported)
    resolution["complex"] =
        detail::complexToJson(*problem.imported, problem.ring);
  doc["resolution"] = std::move(resolution);

  json group;
  group["order"] = problem.group.order;
  group["identityClass"] =
      problem.group.classes[problem.group.identityClassIndex].name;
  json classes = json::array();
  for (const auto& cls : problem.group.classes) {
    json c;
    c["name"] = cls.name;
    c["size"] = cls.size;
    json rep;
    if (cls.representative.permutation()) {
      rep["permutation"] = *cls.representative.permutation();
    } else {
      const RationalMatrix& m = cls.representative.matrix();
      json rows = json::array();
      for (std::size_t u = 0; u < m.rows(); ++u) {
        json row = json::array();
        for (std::size_t v = 0; v < m.cols(); ++v)
          row.push_back(formatRational(m.at(u, v)));
        rows.push_back(std::move(row));
      }
      rep["matrix"] = std::move(rows);
    }
    c["representative"] = std::move(rep);
    c["inverseClass"] = problem.group.classes[cls.inverseClassIndex].name;
    classes.push_back(std::move(c));
  }
  group["classes"] = std::move(classes);
  doc["group"] = std::move(group);

  if (problem.characterTable) {
    json rows = json::array();
    for (const auto& irr : problem.characterTable->irreducibles()) {
      json row;
      row["name"] = irr.name;
      json values = json::array();
      for (const auto& v : irr.values) values.push_back(formatRational(v));
      row["values"] = std::move(values);
      rows.push_back(std::move(row));
    }
    doc["characterTable"] = json{{"irreducibles", std::move(rows)}};
  }

  return doc.dump(2) + "\n";
}

namespace {

Psi0Set explicitPsi0(const ProblemFile& problem, const GradedFreeModule& f0) {
  Psi0Set p;
  for (const auto& cls : problem.group.classes) {
    const RationalMatrix& grid = problem.psi0->at(cls.name);
    if (grid.rows() != f0.rank() || grid.cols() != f0.rank())
      throw ValidationError("psi0 for class '" + cls.name + "' is " +
                            std::to_string(grid.rows()) + "x" +
                            std::to_string(grid.cols()) + ", F0 has rank " +
                            std::to_string(f0.rank()));
    GradedMatrix m(f0, f0);
    for (std::size_t u = 0; u < grid.rows(); ++u)
      for (std::size_t v = 0; v < grid.cols(); ++v)
        m.at(u, v) = Polynomial::constant(grid.at(u, v), problem.ring.varCount());
    p.matrices.push_back(std::move(m));
  }
  return p;
}

Psi0Set inducedPsi0Set(const ProblemFile& problem,
                       const std::vector<Monomial>& generators,
                       const GradedFreeModule& f0) {
  Psi0Set p;
  for (const auto& cls : problem.group.classes)
    p.matrices.push_back(
        inducedPsi0(generators, cls.representative, f0, problem.ring));
  return p;
}

Psi0Set trivialPsi0Set(const ProblemFile& problem,
                       const GradedFreeModule& f0) {
  if (f0.rank() != 1 || !f0.basisDegrees[0].isZero())
    throw ValidationError(
        "quotient pipeline expects F0 = R (rank 1 in degree zero)");
  Psi0Set p;
  for (std::size_t k = 0; k < problem.group.classCount(); ++k)
    p.matrices.push_back(identityMatrix(f0, problem.ring));
  return p;
}

void requireMinimalGenerators(const std::vector<Monomial>& generators,
                              const GradedRing& ring) {
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t k = 0; k < generators.size(); ++k) {
      if (i == k) continue;
      if (generators[i].divides(generators[k]))
        throw ValidationError(
            "generator " +
            formatPolynomial(Polynomial::term(generators[i], 1), ring) +
            " divides " +
            formatPolynomial(Polynomial::term(generators[k], 1), ring) +
            "; the character pipeline needs a minimal generating set so that "
            "F0 matches the listed generators");
    }
}

}  // namespace

Pipeline buildPipeline(const ProblemFile& problem) {
  if (problem.source == ResolutionSource::taylorMinimize) {
    const TaylorMode mode = (problem.kind == ModuleKind::monomialIdeal)
                                ? TaylorMode::resolveIdeal
                                : TaylorMode::resolveQuotient;
    if (problem.kind == ModuleKind::monomialIdeal)
      requireMinimalGenerators(problem.generators, problem.ring);
    FreeComplex minimal = minimize(
        taylorComplex(problem.generators, mode, problem.ring), problem.ring);
    Psi0Set psi0;
    if (problem.kind == ModuleKind::monomialIdeal) {
      // F0 is indexed by the canonically sorted generators the Taylor
      // construction records in its augmentation.
      psi0 = inducedPsi0Set(problem, minimal.augmentation()->generators,
                            minimal.module(0));
    } else {
      psi0 = trivialPsi0Set(problem, minimal.module(0));
    }
    return Pipeline{std::move(minimal), std::move(psi0)};
  }

  const FreeComplex& complex = *problem.imported;
  Psi0Set psi0;
  if (problem.psi0)
    psi0 = explicitPsi0(problem, complex.module(0));
  else if (problem.kind == ModuleKind::monomialIdeal)
    psi0 = inducedPsi0Set(problem, problem.generators, complex.module(0));
  else if (problem.kind == ModuleKind::quotientByMonomialIdeal)
    psi0 = trivialPsi0Set(problem, complex.module(0));
  else
    throw ValidationError("presented modules require explicit psi0");
  return Pipeline{complex, std::move(psi0)};
}

namespace {

std::string formatKey(const BettiKey& key) {
  return "(" + std::to_string(key.homologicalDegree) + ", " +
         key.degree.toString() + ")";
}

json tableToJson(const BettiCharacterTable& table,
                 const std::vector<std::string>& classNames) {
  json entries = json::array();
  for (const auto& [key, values] : table.entries()) {
    json row;
    row["i"] = key.homologicalDegree;
    row["j"] = key.degree.entries;
    json list = json::array();
    for (const auto& v : values) list.push_back(formatRational(v));
    row["values"] = std::move(list);
    entries.push_back(std::move(row));
  }
  return json{{"classes", classNames}, {"entries", std::move(entries)}};
}

std::string tableToText(const BettiCharacterTable& table,
                        const std::vector<std::string>& classNames) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{""};
  header.insert(header.end(), classNames.begin(), classNames.end());
  cells.push_back(std::move(header));
  for (const auto& [key, values] : table.entries()) {
    std::vector<std::string> row{formatKey(key)};
    for (const auto& v : values) row.push_back(formatRational(v));
    cells.push_back(std::move(row));
  }
  std::vector<std::size_t> widths(cells[0].size(), 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c)
      widths[c] = std::max(widths[c], row[c].size());
  std::ostringstream out;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << "  ";
      out << std::string(widths[c] - row[c].size(), ' ') << row[c];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace

std::string formatTable(const BettiCharacterTable& table,
                        const std::vector<std::string>& classNames,
                        OutputFormat format) {
  if (format == OutputFormat::machine)
    return tableToJson(table, classNames).dump(2) + "\n";
  return tableToText(table, classNames);
}

TableDocument parseTableMachine(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("table document: ") + e.what());
  }
  TableDocument out;
  const json& classes = requireArray(doc, "classes", "classes");
  for (const auto& c : classes) out.classNames.push_back(c.get<std::string>());
  const json& entries = requireArray(doc, "entries", "entries");
  for (const auto& entry : entries) {
    BettiKey key;
    key.homologicalDegree =
        static_cast<int>(requireInteger(entry, "i", "entries[].i"));
    key.degree = detail::degreeFromJson(require(entry, "j", "entries[].j"),
                                        "entries[].j");
    const json& values = requireArray(entry, "values", "entries[].values");
    std::vector<Rational> list;
    for (const auto& v : values)
      list.push_back(parseRational(v.get<std::string>()));
    out.table.set(std::move(key), std::move(list));
  }
  return out;
}

namespace {

DispatchResult runVerify(const ProblemFile& problem, OutputFormat format) {
  const FreeComplex complex =
      (problem.source == ResolutionSource::imported)
          ? *problem.imported
          : buildPipeline(problem).complex;
  const ComplexReport report = verifyComplex(complex, problem.ring);
  const GroupReport groupReport =
      validateGroupData(problem.group, problem.ring);
  const bool ok = report.ok() && groupReport.ok();

  if (format == OutputFormat::machine) {
    json doc;
    doc["ranks"] = complex.ranks();
    doc["homogeneous"] = json::array();
    for (const auto& h : report.homogeneous)
      doc["homogeneous"].push_back(h.ok());
    doc["compositionZero"] = report.compositionZero;
    doc["minimal"] = report.minimal;
    doc["group"] = groupReport.ok();
    doc["ok"] = ok;
    return DispatchResult{ok ? 0 : 1, doc.dump(2) + "\n"};
  }

  std::ostringstream out;
  out << "modules: ";
  const auto ranks = complex.ranks();
  for (std::size_t i = 0; i < ranks.size(); ++i)
    out << (i ? ", " : "") << "F" << i << " rank " << ranks[i];
  out << '\n';
  for (std::size_t i = 0; i < report.homogeneous.size(); ++i)
    out << "homogeneous D" << i + 1 << ": " << report.homogeneous[i].toString()
        << '\n';
  for (std::size_t i = 0; i < report.compositionZero.size(); ++i)
    out << "composition-zero D" << i + 1 << "*D" << i + 2 << ": "
        << (report.compositionZero[i] ? "ok" : "FAIL") << '\n';
  for (std::size_t i = 0; i < report.minimal.size(); ++i)
    out << "minimal D" << i + 1 << ": " << (report.minimal[i] ? "ok" : "FAIL")
        << '\n';
  out << "group data: " << groupReport.toString() << '\n';
  out << "result: " << (ok ? "ok" : "FAIL") << '\n';
  return DispatchResult{ok ? 0 : 1, out.str()};
}

DispatchResult runResolve(const ProblemFile& problem, OutputFormat format) {
  if (problem.source != ResolutionSource::taylorMinimize)
    throw ValidationError(
        "resolve constructs a resolution; it needs resolution.source = "
        "taylor-minimize");
  const TaylorMode mode = (problem.kind == ModuleKind::monomialIdeal)
                              ? TaylorMode::resolveIdeal
                              : TaylorMode::resolveQuotient;
  const FreeComplex minimal = minimize(
      taylorComplex(problem.generators, mode, problem.ring), problem.ring);

  if (format == OutputFormat::machine)
    return DispatchResult{0, exportComplex(minimal, problem.ring)};

  std::ostringstream out;
  for (std::size_t i = 0; i < minimal.moduleCount(); ++i) {
    out << "F" << i << ": rank " << minimal.module(i).rank();
    if (minimal.module(i).rank() > 0) {
      out << ", degrees";
      for (const auto& d : minimal.module(i).basisDegrees)
        out << ' ' << d.toString();
    }
    out << '\n';
  }
  for (std::size_t i = 1; i <= minimal.length(); ++i) {
    out << "D" << i << ":\n";
    const GradedMatrix& m = minimal.differential(i);
    for (std::size_t u = 0; u < m.rows(); ++u) {
      out << "  [";
      for (std::size_t v = 0; v < m.cols(); ++v) {
        if (v) out << ", ";
        out << formatPolynomial(m.at(u, v), problem.ring);
      }
      out << "]\n";
    }
  }
  return DispatchResult{0, out.str()};
}

DispatchResult runBetti(const ProblemFile& problem, OutputFormat format,
                        bool check) {
  const Pipeline pipeline = buildPipeline(problem);
  BettiOptions options;
  options.verifyLifts = check;
  const BettiCharacterTable table = bettiCharacters(
      pipeline.complex, pipeline.psi0, problem.group, problem.ring, options);
  return DispatchResult{
      0, formatTable(table, problem.group.classNames(), format)};
}

DispatchResult runDecompose(const ProblemFile& problem, OutputFormat format,
                            bool check) {
  if (!problem.characterTable)
    throw ValidationError("decompose needs a characterTable in the problem "
                          "file");
  const Pipeline pipeline = buildPipeline(problem);
  BettiOptions options;
  options.verifyLifts = check;
  const BettiCharacterTable table = bettiCharacters(
      pipeline.complex, pipeline.psi0, problem.group, problem.ring, options);

  if (format == OutputFormat::machine) {
    json entries = json::array();
    for (const auto& [key, values] : table.entries()) {
      json row;
      row["i"] = key.homologicalDegree;
      row["j"] = key.degree.entries;
      json multiplicities = json::object();
      for (const auto& m :
           decompose(values, *problem.characterTable, problem.group))
        if (m.count != 0) multiplicities[m.name] = formatRational(m.count);
      row["multiplicities"] = std::move(multiplicities);
      entries.push_back(std::move(row));
    }
    return DispatchResult{0,
                          json{{"entries", std::move(entries)}}.dump(2) + "\n"};
  }

  std::ostringstream out;
  for (const auto& [key, values] : table.entries()) {
    out << formatKey(key) << " = ";
    bool first = true;
    for (const auto& m :
         decompose(values, *problem.characterTable, problem.group)) {
      if (m.count == 0) continue;
      if (!first) out << " + ";
      first = false;
      if (m.count != 1) out << formatRational(m.count) << '*';
      out << m.name;
    }
    if (first) out << '0';
    out << '\n';
  }
  return DispatchResult{0, out.str()};
}

}  // namespace

DispatchResult commandDispatch(Command command, const ProblemFile& problem,
                               OutputFormat format, bool check) {
  switch (command) {
    case Command::verify:
      return runVerify(problem, format);
    case Command::resolve:
      return runResolve(problem, format);
    case Command::betti:
      return runBetti(problem, format, check);
    case Command::decompose:
      return runDecompose(problem, format, check);
  }
  throw Error("unknown command");
}

}  // namespace bettichar
