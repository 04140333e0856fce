#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "monres/io.hpp"

namespace {

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw monres::input_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "monres: decides integral closedness of Artinian monomial ideals "
      "through residue smallness certificates"};
  app.require_subcommand(1);

  std::string idealPath;
  std::string inlineJson;
  std::string complexName = "taylor";
  std::string format = "json";
  bool timing = false;

  const std::vector<std::string> idealCommands = {
      "closure", "rees", "resolve", "residue", "certify", "fan", "bs"};
  const char* descriptions[] = {
      "integral closure and closedness via the Newton polyhedron",
      "Rees valuations (compact facets of the Newton polyhedron)",
      "build a cellular resolution and check it resolves the ideal",
      "formal residue components, annihilator and duality",
      "decide closedness by certifying every residue component",
      "normal fan, regularization and divisor table (n = 2 or 3)",
      "Briancon-Skoda containment: closure(I)^nu inside I"};

  for (std::size_t i = 0; i < idealCommands.size(); ++i) {
    CLI::App* sub = app.add_subcommand(idealCommands[i], descriptions[i]);
    sub->add_option("--ideal", idealPath,
                    "path to a JSON ideal document");
    sub->add_option("--inline", inlineJson,
                    "ideal document as a JSON string");
    sub->add_option("--complex", complexName,
                    "resolution to use: taylor or scarf")
        ->check(CLI::IsMember({"taylor", "scarf"}));
    sub->add_option("--format", format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    sub->add_flag("--timing", timing, "include wall-clock timing");
  }

  long bound = 0;
  std::string check = "all";
  CLI::App* corpus = app.add_subcommand(
      "corpus", "sweep a check over all small two-variable ideals");
  corpus->add_option("--bound", bound, "largest pure power exponent")
      ->required();
  corpus->add_option("--check", check,
                     "equivalence, duality, bs or all")
      ->check(CLI::IsMember({"equivalence", "duality", "bs", "all"}));
  corpus->add_option("--format", format, "output format: json or text")
      ->check(CLI::IsMember({"json", "text"}));
  corpus->add_flag("--timing", timing, "include wall-clock timing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    monres::RunOptions options;
    options.timing = timing;
    options.kind = complexName == "scarf" ? monres::ComplexKind::Scarf
                                          : monres::ComplexKind::Taylor;

    monres::RunResult result;
    if (corpus->parsed()) {
      options.subcommand = "corpus";
      options.bound = bound;
      options.check = check;
      result = monres::runCorpus(options);
    } else {
      options.subcommand = app.get_subcommands().front()->get_name();
      if (idealPath.empty() == inlineJson.empty())
        throw monres::input_error(
            "provide exactly one of --ideal FILE or --inline JSON");
      const std::string text =
          idealPath.empty() ? inlineJson : readFile(idealPath);
      monres::IdealDocument doc = monres::parseIdealDocumentText(text);
      result = monres::runSubcommand(doc, options);
    }

    if (format == "text")
      std::cout << monres::renderText(result.report);
    else
      std::cout << result.report.dump(2) << "\n";
    return result.exitCode;
  } catch (const monres::input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const monres::internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
