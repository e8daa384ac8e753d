#include "hexmo/harness.hpp"

#include "hexmo/diagram.hpp"
#include "hexmo/search.hpp"

#include <sstream>

namespace hexmo {

namespace {

template <class T>
std::string describe(const Mosaic& m, const T& what) {
  std::ostringstream os;
  os << to_string(m.spec().geometry) << " r=" << m.spec().r << " " << to_string(m.spec().setting) << ": " << what;
  return os.str();
}

void note(std::string& first, const std::string& what) {
  if (first.empty()) first = what;
}

ComplementStats complement_sample(const BoardSpec& spec, std::uint64_t seed, std::uint64_t i, std::size_t limit) {
  ComplementStats st;
  auto rng = sample_rng(seed, i);
  const Mosaic m = sample_mosaic(spec, rng);
  st.mosaics = 1;
  auto check = [&](const ComplementDecomposition& c) {
    ++st.computed;
    const auto problems = complement_problems(m, c);
    if (!problems.empty()) {
      ++st.problems;
      note(st.first_problem, describe(m, problems.front()));
    }
  };
  const auto canonical = compute_complement(m, ComplementPolicy::canonical);
  if (canonical.loop_count() > 0) st.with_loops = 1;
  if (canonical.arc_count() > 0) st.with_arcs = 1;
  check(canonical);
  const auto minimizing = compute_complement(m, ComplementPolicy::loop_minimizing);
  check(minimizing);
  if (minimizing.sw() > canonical.sw()) {
    ++st.problems;
    note(st.first_problem, describe(m, "loop-minimizing complement is worse than canonical"));
  }
  for (const ComplementDecomposition& c : enumerate_complements(m, limit)) {
    check(c);
    const ComplementDecomposition again = decompose(m, c.arcs);
    if (again.sw() != c.sw()) {
      ++st.decompose_mismatches;
      note(st.first_problem, describe(m, "re-traced complement differs"));
    }
  }
  return st;
}

void merge(ComplementStats& a, const ComplementStats& b) {
  a.mosaics += b.mosaics;
  a.with_loops += b.with_loops;
  a.with_arcs += b.with_arcs;
  a.computed += b.computed;
  a.problems += b.problems;
  a.decompose_mismatches += b.decompose_mismatches;
  note(a.first_problem, b.first_problem);
}

unsigned full_mask(const Mosaic& m) { return (1U << m.board().slots()) - 1U; }

struct PipelineSample {
  bool skipped = true;
  PipelineStats stats;
};

PipelineSample pipeline_sample(const BoardSpec& spec, std::uint64_t seed, std::uint64_t i) {
  PipelineSample out;
  auto rng = sample_rng(seed, i);
  const Mosaic k = sample_knot(spec, rng, 1);
  const ComplementDecomposition c = compute_complement(k);
  if (c.sw() == std::pair(0, 0)) return out;
  out.skipped = false;
  PipelineStats& st = out.stats;
  st.knots = 1;
  auto violation = [&](const std::vector<std::string>& problems) {
    if (problems.empty()) return;
    st.violations += problems.size();
    note(st.first_violation, describe(k, problems.front()));
  };
  if (c.loop_count() == 0) {
    ++st.eliminations;
    const Elimination e = eliminate_outermost_arc(k, c);
    if (const auto* t = std::get_if<PipelineTrace>(&e)) {
      ++st.eliminations_ok;
      violation(trace_problems(k, c, *t));
    } else {
      ++st.failure_stages["eliminate/" + std::get<PreconditionFailed>(e).stage];
    }
  }
  const Reduction r = reduce_to_trivial(k);
  st.loop_merges += static_cast<std::uint64_t>(r.loop_merges);
  if (r.failure) {
    ++st.reductions_failed;
    ++st.failure_stages["reduce/" + r.failure->stage];
  } else {
    ++st.reductions_ok;
  }
  violation(reduction_problems(k, r));
  return out;
}

}  // namespace

void PipelineStats::merge(const PipelineStats& o) {
  knots += o.knots;
  eliminations += o.eliminations;
  eliminations_ok += o.eliminations_ok;
  reductions_ok += o.reductions_ok;
  reductions_failed += o.reductions_failed;
  loop_merges += o.loop_merges;
  violations += o.violations;
  for (const auto& [k, v] : o.failure_stages) failure_stages[k] += v;
  note(first_violation, o.first_violation);
}

std::vector<std::string> trace_problems(const Mosaic& input, const ComplementDecomposition& c, const PipelineTrace& t) {
  std::vector<std::string> p;
  if (t.stages.size() != 5) p.push_back("trace does not record five stages");
  if (t.stages.empty()) return p;
  if (!(t.input() == input)) p.push_back("first stage is not the input");
  const Mosaic& out = t.output();
  if (!is_valid(out)) {
    p.push_back("output is not a valid mosaic");
    return p;
  }
  if (extract(out).component_count() != 1) p.push_back("output is not a knot");
  if (out.crossing_count() < input.crossing_count()) p.push_back("crossings dropped");
  if (t.sw_before != c.sw()) p.push_back("recorded (s, w) before does not match the complement");
  if (!(t.sw_after < t.sw_before)) p.push_back("(s, w) did not decrease");
  if (t.complement.sw() != t.sw_after) p.push_back("recorded (s, w) after does not match the output complement");
  for (const auto* cells : {&t.region.inside, &t.region.inside_ring})
    for (CellId x : *cells)
      if (out.at(x) != input.at(x)) {
        p.push_back("a cell inside the arc changed");
        break;
      }
  if (input.spec().setting == Setting::hex_enhanced) {
    if (t.lost_boundary_crossings > input.board().radius() - 2) p.push_back("too many boundary crossings lost");
    if (t.outside_edges < t.lost_boundary_crossings) p.push_back("fewer outside edges than lost crossings");
  }
  for (const std::string& q : complement_problems(out, t.complement)) p.push_back("output complement: " + q);
  return p;
}

std::vector<std::string> reduction_problems(const Mosaic& input, const Reduction& r) {
  std::vector<std::string> p;
  if (r.sw_history.empty()) return {"empty (s, w) history"};
  if (r.sw_history.front() != compute_complement(input).sw()) p.push_back("history does not start at the input");
  for (std::size_t j = 1; j < r.sw_history.size(); ++j)
    if (!(r.sw_history[j] < r.sw_history[j - 1])) p.push_back("(s, w) did not decrease");
  if (!is_valid(r.mosaic)) return p.push_back("result is not a valid mosaic"), p;
  if (extract(r.mosaic).component_count() != 1) p.push_back("result is not a knot");
  if (r.mosaic.crossing_count() < input.crossing_count()) p.push_back("crossings dropped");
  if (!r.failure) {
    if (r.sw_history.back() != std::pair(0, 0)) p.push_back("success with a nontrivial complement");
    if (compute_complement(r.mosaic).sw() != std::pair(0, 0)) p.push_back("result complement is nontrivial");
    for (CellId x : r.mosaic.board().interior())
      if (r.mosaic.catalog().used(r.mosaic.at(x)) != full_mask(r.mosaic)) {
        p.push_back("an interior cell has an unused connection point");
        break;
      }
  }
  for (const PipelineTrace& t : r.traces)
    if (t.stages.size() != 5) p.push_back("reduction trace does not record five stages");
  return p;
}

ComplementStats complement_harness(const BoardSpec& spec, std::uint64_t samples, std::uint64_t seed,
                                   std::size_t enumerate_limit, bool parallel) {
  std::vector<ComplementStats> parts(samples);
  const long n = static_cast<long>(samples);
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
  for (long i = 0; i < n; ++i)
    parts[static_cast<std::size_t>(i)] =
        complement_sample(spec, seed, static_cast<std::uint64_t>(i), enumerate_limit);
  ComplementStats out;
  for (const auto& p : parts) merge(out, p);
  return out;
}

PipelineStats pipeline_harness(const BoardSpec& spec, std::uint64_t knots, std::uint64_t seed, bool parallel) {
  PipelineStats out;
  const std::uint64_t block = std::max<std::uint64_t>(64, knots);
  for (std::uint64_t start = 0; out.knots < knots; start += block) {
    if (start > 200 * block) throw SearchError(describe(Mosaic(spec), "too few knots with a nontrivial complement"));
    std::vector<PipelineSample> parts(block);
    const long n = static_cast<long>(block);
#pragma omp parallel for schedule(dynamic, 4) if (parallel)
    for (long i = 0; i < n; ++i)
      parts[static_cast<std::size_t>(i)] = pipeline_sample(spec, seed, start + static_cast<std::uint64_t>(i));
    for (const auto& p : parts) {
      if (out.knots == knots) break;
      if (!p.skipped) out.merge(p.stats);
    }
  }
  return out;
}

}  // namespace hexmo
