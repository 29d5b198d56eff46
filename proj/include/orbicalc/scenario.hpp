#pragma once

#include <map>
#include <string>
#include <vector>

namespace orbicalc {

/// One bundled scenario: name and full source text (description is the
/// scenario's own `description` line).
struct BundledScenario {
  const char* name;
  const char* source;
};

const std::vector<BundledScenario>& bundled_scenarios();

struct RunOptions {
  /// Overrides for `param` directives, from --params k=v.
  std::map<std::string, std::string> params;
};

struct Report {
  std::string scenario_name;
  std::vector<std::pair<std::string, std::string>> params;  // declaration order

  struct Fact {
    std::string text;
    std::string cite;
  };
  std::vector<Fact> facts;

  std::vector<std::string> notes;

  std::vector<std::string> steps;  // executed directives, post-substitution

  struct Expectation {
    std::string kind;
    std::string subject;
    std::string expected;
    std::string actual;
    std::string tag;   // PAPER / DERIVED / TRIVIAL
    std::string cite;  // optional
    bool pass = false;
  };
  std::vector<Expectation> expectations;

  bool all_passed() const;
  std::string to_text() const;
  std::string to_record() const;
};

/// Parses and executes a scenario. Throws ParseError on malformed input and
/// StepError when a pipeline step fails; expectation mismatches are recorded
/// in the report, not thrown.
Report run_scenario(const std::string& source, const RunOptions& opts = {});

/// First `description` directive of a scenario source, or "".
std::string scenario_description(const std::string& source);

}  // namespace orbicalc
