#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "bettichar/problem.hpp"

namespace {

struct CommonOptions {
  std::string input;
  std::string format = "text";
  bool check = false;
};

void addCommon(CLI::App* cmd, CommonOptions& options) {
  cmd->add_option("--input", options.input, "problem file (JSON)")
      ->required();
  cmd->add_option("--format", options.format, "output format")
      ->check(CLI::IsMember({"text", "machine"}));
  cmd->add_flag("--check", options.check,
                "run the per-class lift assertions while computing");
}

int run(bettichar::Command command, const CommonOptions& options) {
  const bettichar::ProblemFile problem =
      bettichar::parseProblemFile(options.input);
  const bettichar::OutputFormat format =
      options.format == "machine" ? bettichar::OutputFormat::machine
                                  : bettichar::OutputFormat::text;
  const bettichar::DispatchResult result =
      bettichar::commandDispatch(command, problem, format, options.check);
  std::cout << result.output;
  return result.exitCode;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "betti-char: characters of finite group actions on minimal free "
      "resolutions"};
  app.require_subcommand(1);

  CommonOptions verifyOptions, resolveOptions, bettiOptions, decomposeOptions;
  CLI::App* verify = app.add_subcommand(
      "verify", "validate the resolution and the group data");
  addCommon(verify, verifyOptions);
  CLI::App* resolve = app.add_subcommand(
      "resolve", "minimal free resolution of the monomial module");
  addCommon(resolve, resolveOptions);
  CLI::App* betti =
      app.add_subcommand("betti", "Betti character table of the group action");
  addCommon(betti, bettiOptions);
  CLI::App* decompose = app.add_subcommand(
      "decompose", "Betti characters decomposed into irreducibles");
  addCommon(decompose, decomposeOptions);

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return run(bettichar::Command::verify, verifyOptions);
    if (resolve->parsed())
      return run(bettichar::Command::resolve, resolveOptions);
    if (betti->parsed()) return run(bettichar::Command::betti, bettiOptions);
    return run(bettichar::Command::decompose, decomposeOptions);
  } catch (const bettichar::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
}
