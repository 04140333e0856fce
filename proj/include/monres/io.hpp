#ifndef MONRES_IO_HPP
#define MONRES_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "monres/certify.hpp"
#include "monres/ideal.hpp"

namespace monres {

/// Reports preserve field insertion order so output is reproducible
/// byte for byte.
using Json = nlohmann::ordered_json;

/// An ideal as read from disk or the command line. Generators are
/// minimalized on load; when that changes the list, a notice records it.
struct IdealDocument {
  MonIdeal ideal{0};
  std::string name;
  std::vector<std::string> notices;
};

/// Parses {"n": ..., "generators": [[...], ...], "name"?: ...}. Integers
/// may be JSON numbers or decimal strings (for values beyond 2^53).
IdealDocument parseIdealDocument(const Json& j);
IdealDocument parseIdealDocumentText(const std::string& text);

Json exponentToJson(const Exponent& e);
Json generatorsToJson(const std::vector<Exponent>& gens);
Json idealDocumentToJson(const IdealDocument& doc);

struct RunOptions {
  std::string subcommand;
  ComplexKind kind = ComplexKind::Taylor;
  bool timing = false;
  long bound = 0;         // corpus only
  std::string check;      // corpus only: equivalence | duality | bs | all
};

struct RunResult {
  Json report;
  /// 0: affirmative or pure computation; 1: negative decision.
  int exitCode = 0;
};

/// Dispatches closure, rees, resolve, residue, certify, fan and bs.
/// Throws input_error / internal_error; the caller maps those to exit
/// codes 2 and 3.
RunResult runSubcommand(const IdealDocument& doc, const RunOptions& options);

/// Runs a check over the generated corpus, in parallel. Workers write to
/// preassigned slots, so the report does not depend on scheduling.
RunResult runCorpus(const RunOptions& options);

/// All Artinian monomial ideals in two variables whose pure power
/// generators have exponent at most `bound`, one document each, named
/// and sorted deterministically.
std::vector<IdealDocument> generateCorpus(std::size_t n, long bound);

/// Worker count: MONRES_THREADS when set (1..64), else the hardware
/// concurrency clamped to that range.
unsigned threadBudget();

/// Human-readable rendering of any report produced above.
std::string renderText(const Json& report);

}  // namespace monres

#endif
