#include "hexmo/harness.hpp"
#include "hexmo/families.hpp"

#include <doctest.h>

using namespace hexmo;

TEST_CASE("complement harness is well formed and thread-count independent") {
  for (const BoardSpec spec : {BoardSpec::hex(4), BoardSpec::rect(5)}) {
    const ComplementStats par = complement_harness(spec, 60, 5, 4, true);
    const ComplementStats ser = complement_harness(spec, 60, 5, 4, false);
    CHECK(par.mosaics == 60);
    CHECK(par.problems == 0);
    CHECK(par.decompose_mismatches == 0);
    CHECK(par.computed >= 2 * par.mosaics);
    CHECK(par.with_arcs > 0);
    CHECK(par.mosaics == ser.mosaics);
    CHECK(par.with_loops == ser.with_loops);
    CHECK(par.with_arcs == ser.with_arcs);
    CHECK(par.computed == ser.computed);
  }
}

TEST_CASE("pipeline harness counts only nontrivial complements") {
  const BoardSpec spec = BoardSpec::hex(4);
  const PipelineStats par = pipeline_harness(spec, 25, 11, true);
  const PipelineStats ser = pipeline_harness(spec, 25, 11, false);
  CHECK(par.knots == 25);
  CHECK(par.violations == 0);
  CHECK(par.reductions_ok + par.reductions_failed == par.knots);
  CHECK(par.eliminations_ok <= par.eliminations);
  CHECK(par.knots == ser.knots);
  CHECK(par.eliminations == ser.eliminations);
  CHECK(par.eliminations_ok == ser.eliminations_ok);
  CHECK(par.reductions_ok == ser.reductions_ok);
  CHECK(par.failure_stages == ser.failure_stages);
}

TEST_CASE("postcondition checks flag a tampered reduction") {
  const Mosaic k = gen_knot(4, Setting::hex_standard).knot;
  Reduction r = reduce_to_trivial(k);
  CHECK(reduction_problems(k, r).empty());
  r.sw_history.push_back({0, 1});
  CHECK_FALSE(reduction_problems(k, r).empty());
  Reduction empty = reduce_to_trivial(k);
  empty.sw_history.clear();
  CHECK_FALSE(reduction_problems(k, empty).empty());
}
