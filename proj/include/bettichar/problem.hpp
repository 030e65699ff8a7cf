#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bettichar/betti.hpp"
#include "bettichar/chars.hpp"

namespace bettichar {

enum class ModuleKind { monomialIdeal, quotientByMonomialIdeal, presented };
enum class ResolutionSource { taylorMinimize, imported };

/// Fully validated problem description parsed from a problem file. The
/// file is a single self-describing JSON document; see the README for
/// the exact schema.
struct ProblemFile {
  GradedRing ring;
  ModuleKind kind = ModuleKind::monomialIdeal;
  std::vector<Monomial> generators;  // empty for presented modules
  /// Explicit psi_0 grids keyed by class name; allowed only with an
  /// imported resolution. When absent, psi_0 is induced from the
  /// generator action (monomial ideals) or is the 1x1 identity
  /// (quotients by a stable ideal).
  std::optional<std::map<std::string, RationalMatrix>> psi0;
  ResolutionSource source = ResolutionSource::taylorMinimize;
  std::optional<FreeComplex> imported;
  GroupData group;
  std::optional<CharacterTable> characterTable;

  ProblemFile() : ring(GradedRing::standard({"x"})) {}
};

ProblemFile parseProblem(const std::string& text);
ProblemFile parseProblemFile(const std::string& path);

/// Canonical JSON rendering of a parsed problem; render-then-parse is the
/// identity on canonical form.
std::string renderProblem(const ProblemFile& problem);

/// The resolution/psi_0 pair the character pipeline runs on, assembled
/// per the problem's resolution source and module kind.
struct Pipeline {
  FreeComplex complex;
  Psi0Set psi0;
};

Pipeline buildPipeline(const ProblemFile& problem);

enum class Command { verify, resolve, betti, decompose };
enum class OutputFormat { text, machine };

struct DispatchResult {
  int exitCode = 0;
  std::string output;
};

/// Runs one CLI command on a parsed problem. Deterministic output;
/// exit code 0 on success. Errors from inner modules propagate as
/// exceptions carrying context (which class, which homological degree).
DispatchResult commandDispatch(Command command, const ProblemFile& problem,
                               OutputFormat format = OutputFormat::text,
                               bool check = false);

std::string formatTable(const BettiCharacterTable& table,
                        const std::vector<std::string>& classNames,
                        OutputFormat format);

/// Parses machine-mode table output back into class names and table.
struct TableDocument {
  std::vector<std::string> classNames;
  BettiCharacterTable table;
};
TableDocument parseTableMachine(const std::string& text);

}  // namespace bettichar
