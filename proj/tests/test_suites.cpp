// The seeded identity suites behind the `check` subcommand: pass/fail
// behavior, report shape, and byte-identical determinism.

#include <string>

#include "doctest.h"
#include "jetbrackets/suites.hpp"

using namespace jetbrackets;

namespace {

bool contains(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

} // namespace

TEST_SUITE("identity_suites") {

TEST_CASE("the lawful suites pass at small sizes") {
  SuiteReport d = run_differentials_suite(20260816, 25);
  CHECK_MESSAGE(d.passed(), d.text);
  CHECK(d.cases_run == 25);
  CHECK(contains(d.text, "result: PASSED"));

  SuiteReport b = run_brackets_suite(1001, 6);
  CHECK_MESSAGE(b.passed(), b.text);

  SuiteReport s = run_schouten_suite(7001, 20);
  CHECK_MESSAGE(s.passed(), s.text);

  SuiteReport p = run_poisson_suite(9001, 6);
  CHECK_MESSAGE(p.passed(), p.text);
}

TEST_CASE("reports are byte-identical for equal seed and size") {
  CHECK(run_differentials_suite(11, 10).text == run_differentials_suite(11, 10).text);
  CHECK(run_schouten_suite(11, 10).text == run_schouten_suite(11, 10).text);
  CHECK(run_closure_suite(11, 25).text == run_closure_suite(11, 25).text);
  // A different seed produces a different sample set.
  CHECK(run_differentials_suite(11, 10).text != run_differentials_suite(12, 10).text);
}

TEST_CASE("the closure suite verifies the two product laws but finds no constant sign") {
  SuiteReport rep = run_closure_suite(4001, 50);
  // The two corrected laws hold on every sample...
  CHECK(contains(rep.text, "{chi, a ^ b} = a ^ {chi, b}"));
  CHECK(contains(rep.text, "OK (50 checks)"));
  CHECK(!contains(rep.text, "FAILED 1/50"));
  // ...while the surveyed one-sided constant-sign hypothesis does not.
  CHECK(contains(rep.text, "no admissible sign assignment"));
  CHECK(contains(rep.text, "result: FAILED"));
  CHECK(!rep.passed());
  CHECK(rep.failures == 1);
}

TEST_CASE("the closure survey reports per-degree sign tallies") {
  SuiteReport rep = run_closure_suite(4001, 50);
  CHECK(contains(rep.text, "sign survey"));
  CHECK(contains(rep.text, "deg 0:"));
  CHECK(contains(rep.text, "deg 1:"));
  CHECK(contains(rep.text, "first neither-sign sample"));
}

} // TEST_SUITE
