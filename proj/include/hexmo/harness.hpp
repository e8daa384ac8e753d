#pragma once

// Property harnesses over randomly sampled mosaics. Each sample is drawn from its own
// generator (sample_rng(seed, index)), so results do not depend on the thread count.

#include "hexmo/complement.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace hexmo {

struct ComplementStats {
  std::uint64_t mosaics = 0;
  std::uint64_t with_loops = 0;      // canonical complement has a loop
  std::uint64_t with_arcs = 0;       // canonical complement has an arc
  std::uint64_t computed = 0;        // complements checked (both policies plus enumerated)
  std::uint64_t problems = 0;        // complements failing coverage, crossing or under checks
  std::uint64_t decompose_mismatches = 0;  // enumerated arcs that trace to a different (s, w)
  std::string first_problem;
};

/// Canonical and loop-minimizing complements of `samples` random valid mosaics, plus up to
/// `enumerate_limit` enumerated complements of each.
ComplementStats complement_harness(const BoardSpec& spec, std::uint64_t samples, std::uint64_t seed,
                                   std::size_t enumerate_limit = 8, bool parallel = true);

struct PipelineStats {
  std::uint64_t knots = 0;               // knot mosaics with a nontrivial complement
  std::uint64_t eliminations = 0;        // loop-free inputs handed to eliminate_outermost_arc
  std::uint64_t eliminations_ok = 0;
  std::uint64_t reductions_ok = 0;
  std::uint64_t reductions_failed = 0;   // structured precondition failures
  std::uint64_t loop_merges = 0;
  std::uint64_t violations = 0;          // postcondition failures (must stay zero)
  std::map<std::string, std::uint64_t> failure_stages;
  std::string first_violation;

  void merge(const PipelineStats& o);
};

/// Runs eliminate_outermost_arc (when the complement has no loops) and reduce_to_trivial on
/// `knots` random knot mosaics whose canonical complement is nontrivial, checking every
/// postcondition of both.
PipelineStats pipeline_harness(const BoardSpec& spec, std::uint64_t knots, std::uint64_t seed, bool parallel = true);

/// Postcondition failures of one elimination; empty when the trace is sound.
std::vector<std::string> trace_problems(const Mosaic& input, const ComplementDecomposition& c, const PipelineTrace& t);
/// Postcondition failures of one reduction.
std::vector<std::string> reduction_problems(const Mosaic& input, const Reduction& r);

}  // namespace hexmo
