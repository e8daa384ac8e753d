#include "hexmo/verify.hpp"

#include "hexmo/complement.hpp"
#include "hexmo/diagram.hpp"
#include "hexmo/families.hpp"
#include "hexmo/search.hpp"

#include <algorithm>
#include <functional>

namespace hexmo {

std::size_t VerificationReport::passed() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const ClaimRow& r) { return r.pass; }));
}

std::size_t VerificationReport::failed() const { return rows.size() - passed(); }

namespace {

std::uint64_t instance_seed(std::uint64_t seed, int r, Setting s) {
  return seed * 1000003ULL + static_cast<std::uint64_t>(r) * 17ULL + static_cast<std::uint64_t>(s);
}

Mosaic random_states(const Mosaic& m, std::mt19937_64& rng) {
  Mosaic out = m;
  for (CellId c = 0; c < m.size(); ++c) {
    TileFace f = m.face(c);
    for (int x = 0; x < f.crossing_count(); ++x)
      if (rng() & 1U) f = f.flipped(x);
    out.set_face(c, f);
  }
  return out;
}

int flips_keeping_alternation(const Mosaic& link) {
  int kept = 0;
  for (CellId c = 0; c < link.size(); ++c)
    for (int x = 0; x < link.catalog().crossings(link.at(c)); ++x) {
      Mosaic m = link;
      m.set_face(c, link.face(c).flipped(x));
      if (is_alternating(extract(m))) ++kept;
    }
  return kept;
}

bool crossings_on_adjacent_sides(const Mosaic& m) {
  const auto sides = hex_sides(m.board());
  if (sides.size() != 6) return false;
  auto carries = [&](int s) {
    return std::any_of(sides[static_cast<std::size_t>(s)].begin(), sides[static_cast<std::size_t>(s)].end(),
                       [&](CellId x) { return m.catalog().crossings(m.at(x)) > 0; });
  };
  for (int s = 0; s < 6; ++s)
    if (carries(s) && carries((s + 1) % 6)) return true;
  return false;
}

int slot_toward(const Board& b, CellId from, CellId to) {
  for (int k = 0; k < b.slots(); ++k)
    if (b.neighbor(from, k) == to) return k;
  return -1;
}

using Rows = std::vector<ClaimRow>;

void add(Rows& rows, std::string id, std::string anchor, int r, Setting s, long expected, long observed) {
  rows.push_back({std::move(id), std::move(anchor), r, s, expected, observed, expected == observed});
}

Rows instance_rows(int r, Setting s, const VerifyOptions& opt) {
  Rows rows;
  const Prediction p = (link_supported(r, s) || knot_supported(r, s)) ? predicted(r, s) : Prediction{};
  if (link_supported(r, s)) {
    const Mosaic link = gen_link(r, s);
    const LinkDiagram d = extract(link);
    add(rows, "link.valid", "saturated link is suitably connected and legal in its setting", r, s, 1, is_valid(link));
    add(rows, "link.saturated", "saturated link has maximal crossings on every interior tile", r, s, 1,
        is_saturated(link));
    add(rows, "link.crossings", "saturated link crossings equal the closed-form count", r, s, p.saturated_crossings,
        d.crossing_count());
    if (p.link_components)
      add(rows, "link.components", "saturated link component count", r, s, *p.link_components, d.component_count());
    add(rows, "link.alternating", "saturated link is alternating", r, s, 1, is_alternating(d));
    add(rows, "link.crossing_changes", "random over/under states keep the component count", r, s,
        opt.crossing_variants, crossing_change_agreements(r, s, opt.crossing_variants, instance_seed(opt.seed, r, s)));
    add(rows, "link.single_flips", "no single crossing change keeps the link alternating", r, s, 0,
        flips_keeping_alternation(link));
  }
  if (knot_supported(r, s)) {
    const KnotWithSchedule k = gen_knot(r, s);
    const LinkDiagram d = extract(k.knot);
    const CrossingCertificate cert = certify_crossing_number(d);
    add(rows, "knot.valid", "reduced alternating knot is suitably connected and legal", r, s, 1, is_valid(k.knot));
    add(rows, "knot.components", "reduced alternating knot has one component", r, s, 1, d.component_count());
    add(rows, "knot.nugatory", "reduced alternating knot has no nugatory crossing", r, s, 0,
        static_cast<long>(nugatory_crossings(d).size()));
    add(rows, "knot.certified", "certified crossing number equals the closed-form bound", r, s, p.knot_crossing_bound,
        cert.certified ? cert.crossings : -1);
    add(rows, "knot.schedule", "smoothing schedule replays onto the emitted knot", r, s, 1,
        apply_schedule(k.parent, k.schedule) == k.knot);
  }
  if (s == Setting::hex_standard && r >= 2) {
    const Mosaic interior = saturated_interior(BoardSpec::hex(r, s));
    add(rows, "closures.standard", "saturated standard interior has exactly two boundary closures", r, s, 2,
        static_cast<long>(count_boundary_closures(interior)));
  }
  if (s == Setting::hex_enhanced && r == 4) {
    const auto sat = adjacent_sides_saturated(r, false);
    add(rows, "adjacent_sides.saturated", "no saturated closure has crossings on adjacent sides without a complement end between",
        r, s, 0, static_cast<long>(sat.counterexamples));
  }
  if (s == Setting::hex_enhanced && (r == 4 || r == 5)) {
    const auto win = adjacent_sides_windows(r);
    add(rows, "adjacent_sides.windows", "no ring stretch between crossings on adjacent sides fills every interior-facing point",
        r, s, 0, static_cast<long>(win.counterexamples));
  }
  if (s == Setting::hex_enhanced && r == 5) {
    const auto smp = adjacent_sides_sampled(r, static_cast<std::size_t>(opt.adjacent_side_samples),
                                            instance_seed(opt.seed, r, s), false);
    add(rows, "adjacent_sides.sampled", "sampled mosaics with crossings on adjacent sides show a complement end between",
        r, s, 0, static_cast<long>(smp.counterexamples));
  }
  return rows;
}

}  // namespace

int crossing_change_agreements(int r, Setting s, int variants, std::uint64_t seed) {
  const Mosaic link = gen_link(r, s);
  const int components = extract(link).component_count();
  int agree = 0;
  for (int i = 0; i < variants; ++i) {
    auto rng = sample_rng(seed, static_cast<std::uint64_t>(i));
    if (extract(random_states(link, rng)).component_count() == components) ++agree;
  }
  return agree;
}

AdjacentSidesCheck adjacent_sides_saturated(int r, bool parallel) {
  const Mosaic interior = saturated_interior(BoardSpec::hex(r, Setting::hex_enhanced));
  const std::vector<Mosaic> closures = boundary_closures(interior);
  const long n = static_cast<long>(closures.size());
  std::size_t with_adjacent = 0, bad = 0;
#pragma omp parallel for schedule(static) reduction(+ : with_adjacent, bad) if (parallel)
  for (long i = 0; i < n; ++i) {
    const Mosaic& m = closures[static_cast<std::size_t>(i)];
    if (crossings_on_adjacent_sides(m)) ++with_adjacent;
    if (!adjacent_side_counterexamples(m).empty()) ++bad;
  }
  return {closures.size(), with_adjacent, bad};
}

AdjacentSidesCheck adjacent_sides_windows(int r) {
  const BoardSpec spec = BoardSpec::hex(r, Setting::hex_enhanced);
  const Board& b = *Board::get(spec);
  const Catalog& cat = Catalog::get(Geometry::hex);
  const auto sides = hex_sides(b);
  const auto& ring = b.ring();
  const int R = static_cast<int>(ring.size());
  AdjacentSidesCheck out;

  // Faces allowed on a ring cell: legal, nothing off board, every interior-facing point used.
  auto candidates = [&](CellId x, bool crossing) {
    std::vector<FaceId> fs;
    unsigned off = 0, inner = 0;
    for (int k = 0; k < 6; ++k) {
      const CellId nb = b.neighbor(x, k);
      if (nb == kOffBoard) off |= 1U << k;
      else if (b.is_interior(nb)) inner |= 1U << k;
    }
    for (int f = 0; f < cat.size(); ++f) {
      const auto id = static_cast<FaceId>(f);
      if ((cat.used(id) & off) || (cat.used(id) & inner) != inner) continue;
      if ((cat.crossings(id) > 0) != crossing || !setting_allows(spec.setting, b, x, id)) continue;
      fs.push_back(id);
    }
    return fs;
  };

  for (int s = 0; s < 6; ++s) {
    const auto& first_side = sides[static_cast<std::size_t>(s)];
    const auto& next_side = sides[static_cast<std::size_t>((s + 1) % 6)];
    for (CellId from : first_side)
      for (CellId to : next_side) {
        std::vector<CellId> window;
        for (int i = b.ring_index(from);; i = (i + 1) % R) {
          window.push_back(ring[static_cast<std::size_t>(i)]);
          if (ring[static_cast<std::size_t>(i)] == to) break;
        }
        std::vector<std::vector<FaceId>> options;
        for (std::size_t i = 0; i < window.size(); ++i)
          options.push_back(candidates(window[i], i == 0 || i + 1 == window.size()));
        // Consecutive window cells must agree on their shared connection point.
        std::function<bool(std::size_t, FaceId)> fill = [&](std::size_t i, FaceId prev) {
          if (i == window.size()) return true;
          for (FaceId f : options[i]) {
            if (i > 0) {
              const int out_slot = slot_toward(b, window[i - 1], window[i]);
              const int in_slot = slot_toward(b, window[i], window[i - 1]);
              if (((cat.used(prev) >> out_slot) & 1U) != ((cat.used(f) >> in_slot) & 1U)) continue;
            }
            if (fill(i + 1, f)) return true;
          }
          return false;
        };
        ++out.configurations;
        ++out.with_adjacent;
        if (fill(0, 0)) ++out.counterexamples;
      }
  }
  return out;
}

AdjacentSidesCheck adjacent_sides_sampled(int r, std::size_t samples, std::uint64_t seed, bool parallel) {
  const BoardSpec spec = BoardSpec::hex(r, Setting::hex_enhanced);
  const long n = static_cast<long>(samples);
  std::size_t with_adjacent = 0, bad = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : with_adjacent, bad) if (parallel)
  for (long i = 0; i < n; ++i) {
    auto rng = sample_rng(seed, static_cast<std::uint64_t>(i));
    const Mosaic m = sample_mosaic(spec, rng);
    if (crossings_on_adjacent_sides(m)) ++with_adjacent;
    if (!adjacent_side_counterexamples(m).empty()) ++bad;
  }
  return {samples, with_adjacent, bad};
}

VerificationReport verify_claims(const VerifyOptions& opt) {
  std::vector<std::pair<Setting, int>> instances;
  for (Setting s : opt.settings)
    for (int r = opt.r_min; r <= opt.r_max; ++r) instances.emplace_back(s, r);
  std::vector<Rows> parts(instances.size());
  const long n = static_cast<long>(instances.size());
#pragma omp parallel for schedule(dynamic) if (opt.parallel)
  for (long i = 0; i < n; ++i)
    parts[static_cast<std::size_t>(i)] = instance_rows(instances[static_cast<std::size_t>(i)].second,
                                                       instances[static_cast<std::size_t>(i)].first, opt);
  VerificationReport report;
  for (auto& p : parts) report.rows.insert(report.rows.end(), p.begin(), p.end());
  return report;
}

}  // namespace hexmo
