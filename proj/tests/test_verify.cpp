#include "hexmo/report.hpp"
#include "hexmo/verify.hpp"

#include <doctest.h>

#include <set>

using namespace hexmo;

TEST_CASE("verification rows all pass for r = 2..8") {
  const VerificationReport rep = verify_claims();
  CHECK(rep.failed() == 0);
  std::set<std::string> ids;
  for (const ClaimRow& row : rep.rows) {
    ids.insert(row.id);
    CHECK_FALSE(row.anchor.empty());
    if (!row.pass) MESSAGE(row.id << " r=" << row.r << " " << to_string(row.setting) << ": " << row.observed);
  }
  for (const char* id : {"link.crossings", "link.components", "link.alternating", "link.crossing_changes",
                         "knot.certified", "knot.schedule", "closures.standard", "adjacent_sides.saturated",
                         "adjacent_sides.windows", "adjacent_sides.sampled"})
    CHECK(ids.count(id) == 1);
}

TEST_CASE("verification is deterministic and schedule-independent") {
  VerifyOptions opt;
  opt.r_max = 5;
  opt.parallel = true;
  const auto a = verification_json(verify_claims(opt));
  opt.parallel = false;
  const auto b = verification_json(verify_claims(opt));
  CHECK(a == b);
  CHECK(a == verification_json(verify_claims(opt)));
}

TEST_CASE("adjacent-sides checks") {
  const auto sat = adjacent_sides_saturated(4);
  CHECK(sat.configurations == 8192);
  CHECK(sat.with_adjacent == sat.counterexamples);  // nothing to witness with a full interior
  CHECK(sat.counterexamples == 0);
  const auto win = adjacent_sides_windows(4);
  CHECK(win.configurations == 6 * 2 * 2);
  CHECK(win.counterexamples == 0);
  const auto smp = adjacent_sides_sampled(5, 500, 3);
  CHECK(smp.with_adjacent > 0);
  CHECK(smp.counterexamples == 0);
  CHECK(crossing_change_agreements(6, Setting::hex_standard, 20, 4) == 20);
}
