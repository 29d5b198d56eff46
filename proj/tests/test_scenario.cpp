#include <doctest.h>

#include <algorithm>

#include "orbicalc/errors.hpp"
#include "orbicalc/scenario.hpp"

using namespace orbicalc;

namespace {

const char* find_bundled(const std::string& name) {
  for (const auto& b : bundled_scenarios())
    if (name == b.name) return b.source;
  REQUIRE(false);
  return nullptr;
}

}  // namespace

TEST_CASE("bundled corpus") {
  const auto& all = bundled_scenarios();
  CHECK(all.size() >= 6);
  CHECK(std::is_sorted(all.begin(), all.end(), [](const auto& a, const auto& b) {
    return std::string(a.name) < b.name;
  }));
  for (const char* name : {"thm-3.2", "thm-3.9", "thm-4.3", "null-b2", "prop-5.4", "gk-table"}) {
    const char* src = find_bundled(name);
    CHECK_FALSE(scenario_description(src).empty());
  }
}

TEST_CASE("every bundled scenario passes with default parameters") {
  for (const auto& b : bundled_scenarios()) {
    INFO(b.name);
    Report r = run_scenario(b.source);
    for (const auto& e : r.expectations) {
      INFO(e.kind, " ", e.subject, ": expected ", e.expected, ", actual ", e.actual);
      CHECK(e.pass);
    }
    CHECK(r.all_passed());
    // every expectation carries a provenance tag
    for (const auto& e : r.expectations)
      CHECK((e.tag == "PAPER" || e.tag == "DERIVED" || e.tag == "TRIVIAL"));
  }
}

TEST_CASE("reports are byte-deterministic") {
  const char* src = find_bundled("thm-3.2");
  Report a = run_scenario(src);
  Report b = run_scenario(src);
  CHECK(a.to_text() == b.to_text());
  CHECK(a.to_record() == b.to_record());
  CHECK(a.to_text().back() == '\n');
  CHECK(a.to_record().back() == '\n');
}

TEST_CASE("parameter overrides") {
  const char* src = find_bundled("thm-3.2");
  RunOptions o;
  o.params = {{"b", "4"}, {"p", "5"}};
  Report r = run_scenario(src, o);
  CHECK(r.all_passed());
  bool found = false;
  for (const auto& e : r.expectations)
    if (e.kind == "h2") {
      found = true;
      CHECK(e.actual == "Z^3 + Z_5^2 + Z_25^2 + Z_125^2 + Z_625^2");
    }
  CHECK(found);

  SUBCASE("unknown parameter is an input error") {
    RunOptions bad;
    bad.params = {{"zzz", "1"}};
    CHECK_THROWS_AS(run_scenario(src, bad), ParseError);
  }
}

TEST_CASE("mini-language") {
  SUBCASE("expectation mismatch is recorded, not thrown") {
    Report r = run_scenario(
        "scenario demo\n"
        "surface S = P2\n"
        "curve S L = H genus 0\n"
        "expect pair S L L == 2 tag TRIVIAL\n");
    REQUIRE(r.expectations.size() == 1);
    CHECK_FALSE(r.expectations[0].pass);
    CHECK(r.expectations[0].expected == "2");
    CHECK(r.expectations[0].actual == "1");
    CHECK_FALSE(r.all_passed());
  }
  SUBCASE("parse errors carry the line number") {
    try {
      run_scenario("scenario demo\nsurfac S = P2\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
  }
  SUBCASE("module failures surface as StepError") {
    CHECK_THROWS_AS(run_scenario("scenario demo\n"
                                 "surface S = P2\n"
                                 "blowup S E through nope\n"),
                    StepError);
  }
  SUBCASE("repeat and templating") {
    Report r = run_scenario(
        "scenario demo\n"
        "param b = 3\n"
        "surface S = P2\n"
        "repeat i=1..{b} : blowup S E{i}\n"
        "expect pair S E2 E2 == -1 tag TRIVIAL\n"
        "expect pair S E1 E3 == 0 tag TRIVIAL\n");
    CHECK(r.all_passed());
  }
  SUBCASE("group literals and products") {
    Report r = run_scenario(
        "scenario demo\n"
        "param b = 3\n"
        "param p = 2\n"
        "group G = Z^(b-1) + prod i=1..b of Z_(p^i)^2\n"
        "expect group G == Z^2 + Z_2^2 + Z_4^2 + Z_8^2 tag TRIVIAL\n");
    CHECK(r.all_passed());
  }
  SUBCASE("facts keep their citations") {
    Report r = run_scenario(
        "scenario demo\n"
        "fact \"something declared\" cite \"Lem 1.1\"\n");
    REQUIRE(r.facts.size() == 1);
    CHECK(r.facts[0].text == "something declared");
    CHECK(r.facts[0].cite == "Lem 1.1");
  }
}
