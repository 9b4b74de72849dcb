// The verification-suite plumbing itself: item/report invariants and the
// cheap suites end to end. The expensive suites run in the acceptance
// binary.

#include <catch2/catch_amalgamated.hpp>

#include "periharm/verify.hpp"

using namespace periharm;

namespace {

void check_report_invariants(const VerificationReport& report) {
  bool all = true;
  for (const auto& item : report.items) {
    CHECK(std::isfinite(item.max_abs_error));
    CHECK(item.max_abs_error >= 0.0);
    CHECK(item.tolerance > 0.0);
    CHECK(item.pass == (item.max_abs_error < item.tolerance));
    all = all && item.pass;
  }
  CHECK(report.overall_pass == all);
  CHECK(report.wall_seconds >= 0.0);
}

}  // namespace

TEST_CASE("det suite item layout") {
  const VerificationReport report = suite_det(6);
  CHECK(report.suite == "det");
  // 2 families x 6 sizes + the exact spot checks
  CHECK(report.items.size() == 13);
  CHECK(report.overall_pass);
  check_report_invariants(report);
}

TEST_CASE("truncation suite passes") {
  const VerificationReport report = suite_truncation();
  CHECK(report.overall_pass);
  CHECK(report.items.size() == 3);
  check_report_invariants(report);
}

TEST_CASE("operators suite passes") {
  const VerificationReport report = suite_operators();
  CHECK(report.overall_pass);
  check_report_invariants(report);
}

TEST_CASE("unknown suite throws") {
  CHECK_THROWS_AS(run_suite("nope"), std::invalid_argument);
}
