#include "hexmo/families.hpp"

#include <algorithm>
#include <functional>

namespace hexmo {

std::string_view to_string(ScheduleRole r) {
  switch (r) {
    case ScheduleRole::boundary_merge: return "boundary-merge";
    case ScheduleRole::central_merge: return "central-merge";
    case ScheduleRole::nugatory_removal: return "nugatory-removal";
  }
  return "?";
}

bool link_supported(int r, Setting s) {
  if (s == Setting::rect) return r >= 4 && r % 2 == 0;
  return r >= 2;
}

bool knot_supported(int r, Setting s) {
  if (s == Setting::rect) return r >= 4;
  return r >= 2;
}

namespace {

long ceil_half(int r) { return (r + 1) / 2; }

BoardSpec spec_for(int r, Setting s) {
  return s == Setting::rect ? BoardSpec::rect(r) : BoardSpec::hex(r, s);
}

Mosaic with_setting(const Mosaic& m, Setting s) {
  Mosaic out(spec_for(m.spec().r, s));
  for (CellId c = 0; c < m.size(); ++c) out.set(c, m.at(c));
  return out;
}

// Crossing pairing {k, k+2}{k+1, k+3} on the four consecutive slots used by a
// standard boundary tile.
TileFace crossing_on_same_slots(const TileFace& t) {
  const unsigned used = t.used_mask();
  for (int k = 0; k < 6; ++k) {
    unsigned m = 0;
    for (int i = 0; i < 4; ++i) m |= 1U << ((k + i) % 6);
    if (m == used) return TileFace::make(Geometry::hex, {{k, (k + 2) % 6}, {(k + 1) % 6, (k + 3) % 6}});
  }
  throw TileError("face " + tile_code(t) + " does not use four consecutive slots");
}

TileFace band_on_same_slots(const TileFace& t) {
  const unsigned used = t.used_mask();
  for (int k = 0; k < 6; ++k) {
    unsigned m = 0;
    for (int i = 0; i < 4; ++i) m |= 1U << ((k + i) % 6);
    if (m == used) return TileFace::make(Geometry::hex, {{k, (k + 3) % 6}, {(k + 1) % 6, (k + 2) % 6}});
  }
  throw TileError("face " + tile_code(t) + " does not use four consecutive slots");
}

// Non-reducible saturated closures in deterministic order.
std::vector<Mosaic> reduced_closures(const Mosaic& interior) {
  std::vector<Mosaic> out;
  for (auto& m : boundary_closures(interior)) {
    const auto d = extract(m);
    if (nugatory_crossings(d).empty()) out.push_back(m);
  }
  return out;
}

Mosaic standard_link(int r) {
  const auto cands = reduced_closures(saturated_interior(BoardSpec::hex(r, Setting::hex_standard)));
  for (const auto& m : cands)
    if (is_alternating(extract(m))) return m;
  throw UnsupportedError("no alternating non-reducible standard closure");
}

Mosaic enhanced_link(int r) {
  const Mosaic base = standard_link(r);
  if (r == 2) return with_setting(base, Setting::hex_enhanced);
  for (const auto& closure : boundary_closures(saturated_interior(BoardSpec::hex(r, Setting::hex_standard)))) {
    Mosaic m = with_setting(closure, Setting::hex_enhanced);
    std::vector<char> free_cell(static_cast<std::size_t>(m.size()), 0);
    for (const auto& side : hex_sides(m.board()))
      for (CellId c : side)
        if (m.face(c).strand_count() == 2) {
          m.set_face(c, crossing_on_same_slots(m.face(c)));
          free_cell[static_cast<std::size_t>(c)] = 1;
        }
    auto alt = make_alternating(m, free_cell);
    if (!alt) continue;
    if (nugatory_crossings(extract(*alt)).empty()) return *alt;
  }
  throw UnsupportedError("no enhanced closure with alternating boundary crossings");
}

// Greedy band swaps on the standard link, in ring order, kept when they lower the
// component count.
Mosaic semi_link_from(const Mosaic& standard) {
  Mosaic m = with_setting(standard, Setting::hex_semi_enhanced);
  int comps = extract(m).component_count();
  for (CellId c : m.board().ring()) {
    if (!is_standard_pairing(m.face(c))) continue;
    Mosaic trial = m;
    trial.set_face(c, band_on_same_slots(m.face(c)));
    const int k = extract(trial).component_count();
    if (k < comps) {
      m = trial;
      comps = k;
    }
  }
  if (!is_alternating(extract(m))) {
    std::vector<char> all(static_cast<std::size_t>(m.size()), 1);
    auto alt = make_alternating(m, all);
    if (!alt) throw UnsupportedError("semi-enhanced link cannot be made alternating");
    m = *alt;
  }
  return m;
}

struct StepSpec {
  std::vector<CellId> cells;
  bool merge = true;            // joins two components; otherwise removes a nugatory crossing
  bool allow_nugatory = false;  // whether the result may keep nugatory crossings
};

struct ScheduleSearch {
  std::vector<StepSpec> steps;
  std::function<bool(const LinkDiagram&)> accept;
  long budget = 200000;
};

bool run_search(Mosaic& m, const LinkDiagram& d, std::size_t depth, ScheduleSearch& plan, SmoothingSchedule& out) {
  if (depth == plan.steps.size()) return plan.accept(d);
  if (--plan.budget < 0) return false;
  const StepSpec& step = plan.steps[depth];
  const Catalog& cat = m.catalog();
  const Board& b = m.board();
  std::vector<char> nug;
  if (!step.merge) {
    nug.assign(static_cast<std::size_t>(d.crossing_count()), 0);
    for (int x : nugatory_crossings(d)) nug[static_cast<std::size_t>(x)] = 1;
  }
  // global crossing id per (cell, local id)
  std::vector<std::vector<int>> global(static_cast<std::size_t>(m.size()));
  if (!step.merge)
    for (int x = 0; x < d.crossing_count(); ++x) {
      auto& v = global[static_cast<std::size_t>(d.crossings[static_cast<std::size_t>(x)].cell)];
      v.resize(std::max<std::size_t>(v.size(), static_cast<std::size_t>(d.crossings[static_cast<std::size_t>(x)].local) + 1), -1);
      v[static_cast<std::size_t>(d.crossings[static_cast<std::size_t>(x)].local)] = x;
    }
  for (CellId c : step.cells) {
    const FaceId f = m.at(c);
    for (int x = 0; x < cat.crossings(f); ++x) {
      const Crossing& cr = cat.crossing_list(f)[static_cast<std::size_t>(x)];
      const int cs = d.component_of(c, cr.s), ct = d.component_of(c, cr.t);
      if (step.merge && cs == ct) continue;
      if (!step.merge && !nug[static_cast<std::size_t>(global[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)])]) continue;
      for (int choice = 0; choice < 2; ++choice) {
        const int nf = cat.smooth(f, x, choice);
        if (nf < 0) continue;
        m.set(c, static_cast<FaceId>(nf));
        const LinkDiagram d2 = extract(m);
        const int want = step.merge ? d.component_count() - 1 : d.component_count();
        if (d2.component_count() == want && (step.allow_nugatory || nugatory_crossings(d2).empty())) {
          const ScheduleRole role = !step.merge        ? ScheduleRole::nugatory_removal
                                    : b.is_boundary(c) ? ScheduleRole::boundary_merge
                                                       : ScheduleRole::central_merge;
          out.push_back({c, x, choice, role});
          if (run_search(m, d2, depth + 1, plan, out)) return true;
          out.pop_back();
        }
        m.set(c, f);
      }
    }
  }
  return false;
}

std::vector<CellId> cells_of(const Board& b, std::initializer_list<CellClass> classes) {
  std::vector<CellId> out;
  for (CellClass k : classes)
    for (CellId c = 0; c < b.size(); ++c)
      if (b.classify(c) == k) out.push_back(c);
  return out;
}

bool certified_knot(const LinkDiagram& d) {
  return d.component_count() == 1 && certify_crossing_number(d).certified;
}

KnotWithSchedule finish(const Mosaic& parent, ScheduleSearch plan) {
  Mosaic m = parent;
  SmoothingSchedule sched;
  if (!run_search(m, extract(m), 0, plan, sched))
    throw UnsupportedError("no smoothing schedule found for " + std::string(to_string(parent.spec().setting)) +
                           " r=" + std::to_string(parent.spec().r));
  return {parent, m, sched};
}

std::vector<StepSpec> merges(int count, const std::vector<CellId>& cells) {
  return std::vector<StepSpec>(static_cast<std::size_t>(std::max(count, 0)), StepSpec{cells, true, false});
}

// Semi-enhanced r = 3: no band swap lowers the component count, so the link is
// chosen among the non-reducible two-component semi-enhanced closures as the first
// one admitting a single smoothing into a reduced alternating knot.
std::optional<KnotWithSchedule> semi_three() {
  const Mosaic interior = saturated_interior(BoardSpec::hex(3, Setting::hex_semi_enhanced));
  const auto& b = interior.board();
  const auto cells = cells_of(b, {CellClass::central, CellClass::penultimate});
  for (const auto& m : boundary_closures(interior)) {
    const auto d = extract(m);
    if (d.component_count() != 2 || !nugatory_crossings(d).empty() || !is_alternating(d)) continue;
    ScheduleSearch plan{merges(1, cells), certified_knot};
    Mosaic work = m;
    SmoothingSchedule sched;
    if (run_search(work, d, 0, plan, sched)) return KnotWithSchedule{m, work, sched};
  }
  return std::nullopt;
}

}  // namespace

Mosaic saturated_interior(const BoardSpec& spec) {
  Mosaic m(spec);
  const Board& b = m.board();
  if (spec.geometry == Geometry::hex) {
    for (CellId c : b.interior()) m.set_face(c, saturated_hex_tile());
  } else {
    const TileFace t = saturated_rect_tile();
    for (CellId c : b.interior()) {
      auto [row, col] = b.row_col(c);
      m.set_face(c, (row + col) % 2 == 0 ? t : t.flipped(0));
    }
  }
  return m;
}

Mosaic gen_link(int r, Setting s) {
  if (!link_supported(r, s))
    throw UnsupportedError("L_r is not defined for " + std::string(to_string(s)) + " r=" + std::to_string(r));
  switch (s) {
    case Setting::hex_standard: return standard_link(r);
    case Setting::hex_enhanced: return enhanced_link(r);
    case Setting::hex_semi_enhanced: {
      if (r == 3) {
        if (auto k = semi_three()) return k->parent;
        throw UnsupportedError("no semi-enhanced 3-mosaic link with a reduced smoothing");
      }
      return semi_link_from(standard_link(r));
    }
    case Setting::rect: {
      for (const auto& m : reduced_closures(saturated_interior(BoardSpec::rect(r))))
        if (is_alternating(extract(m))) return m;
      throw UnsupportedError("no alternating non-reducible rectangular closure");
    }
  }
  throw UnsupportedError("unknown setting");
}

KnotWithSchedule gen_knot(int r, Setting s) {
  if (!knot_supported(r, s))
    throw UnsupportedError("A_r is not defined for " + std::string(to_string(s)) + " r=" + std::to_string(r));
  if (s == Setting::rect && r % 2 == 1) {
    // Knot closure of the saturated odd board, then remove the two corner kinks.
    for (const auto& m : boundary_closures(saturated_interior(BoardSpec::rect(r)))) {
      if (extract(m).component_count() != 1) continue;
      const Board& b = m.board();
      std::vector<CellId> all = b.interior();
      ScheduleSearch plan{{StepSpec{all, false, true}, StepSpec{all, false, false}}, certified_knot};
      try {
        return finish(m, plan);
      } catch (const UnsupportedError&) {
      }
    }
    throw UnsupportedError("no knot closure of the odd rectangular board");
  }
  if (s == Setting::hex_semi_enhanced && r == 3) {
    if (auto k = semi_three()) return *k;
    throw UnsupportedError("no semi-enhanced 3-mosaic knot");
  }
  const Mosaic link = gen_link(r, s);
  const Board& b = link.board();
  const int comps = extract(link).component_count();
  ScheduleSearch plan;
  plan.accept = certified_knot;
  if (s == Setting::hex_standard && r == 3) {
    const auto cells = cells_of(b, {CellClass::central, CellClass::penultimate});
    plan.steps = {StepSpec{cells, true, true}, StepSpec{cells, false, false}};
  } else if (s == Setting::hex_enhanced) {
    std::vector<CellId> cells;
    for (CellId c : b.ring())
      if (link.catalog().crossings(link.at(c)) > 0) cells.push_back(c);
    for (CellId c : cells_of(b, {CellClass::central, CellClass::penultimate})) cells.push_back(c);
    plan.steps = merges(comps - 1, cells);
  } else if (s == Setting::rect) {
    plan.steps = merges(comps - 1, cells_of(b, {CellClass::central, CellClass::penultimate}));
  } else {
    plan.steps = merges(comps - 1, cells_of(b, {CellClass::central}));
  }
  return finish(link, plan);
}

Prediction predicted(int r, Setting s) {
  if (!knot_supported(r, s))
    throw UnsupportedError("no prediction for " + std::string(to_string(s)) + " r=" + std::to_string(r));
  const long R = r;
  Prediction p;
  switch (s) {
    case Setting::hex_standard:
      p.saturated_crossings = 9 * R * R - 27 * R + 21;
      p.link_components = r - 1;
      p.knot_crossing_bound = r == 2 ? 3 : r == 3 ? 19 : 9 * R * R - 28 * R + 23;
      break;
    case Setting::hex_semi_enhanced:
      p.saturated_crossings = 9 * R * R - 27 * R + 21;
      p.link_components = r == 2 ? 1 : static_cast<int>(ceil_half(r));
      p.knot_crossing_bound = r == 2 ? 3 : 9 * R * R - 27 * R + 22 - ceil_half(r);
      break;
    case Setting::hex_enhanced:
      p.saturated_crossings = 9 * R * R - 24 * R + 15;
      p.link_components = r == 2 ? 1 : r + 1;
      p.knot_crossing_bound = r == 2 ? 3 : 9 * R * R - 25 * R + 15;
      break;
    case Setting::rect:
      p.saturated_crossings = (R - 2) * (R - 2);
      if (r % 2 == 0) {
        p.link_components = r - 2;
        p.knot_crossing_bound = (R - 2) * (R - 2) - (R - 3);
      } else {
        p.knot_crossing_bound = (R - 2) * (R - 2) - 2;
      }
      break;
  }
  return p;
}

Mosaic apply_schedule(const Mosaic& link, const SmoothingSchedule& schedule) {
  Mosaic m = link;
  for (const auto& st : schedule) m.set_face(st.cell, smooth_tile(m.face(st.cell), st.crossing, st.choice));
  return m;
}

std::optional<Mosaic> make_alternating(const Mosaic& m, const std::vector<char>& free_cell) {
  const LinkDiagram d = extract(m);
  const int n = d.crossing_count();
  const int konst = n;  // node fixed to value 0
  std::vector<int> parent(static_cast<std::size_t>(n + 1));
  std::vector<int> parity(static_cast<std::size_t>(n + 1), 0);  // value(x) xor value(parent)
  for (int i = 0; i <= n; ++i) parent[static_cast<std::size_t>(i)] = i;
  std::function<std::pair<int, int>(int)> find = [&](int x) -> std::pair<int, int> {
    if (parent[static_cast<std::size_t>(x)] == x) return {x, 0};
    auto [root, p] = find(parent[static_cast<std::size_t>(x)]);
    parent[static_cast<std::size_t>(x)] = root;
    parity[static_cast<std::size_t>(x)] ^= p;
    return {root, parity[static_cast<std::size_t>(x)]};
  };
  auto unite = [&](int a, int b, int rel) {  // value(a) xor value(b) = rel
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return ((pa ^ pb) == rel);
    // the smaller root (constant node last) stays the representative
    if (rb == konst || (ra != konst && rb < ra)) {
      std::swap(ra, rb);
      std::swap(pa, pb);
    }
    parent[static_cast<std::size_t>(rb)] = ra;
    parity[static_cast<std::size_t>(rb)] = pa ^ pb ^ rel;
    return true;
  };
  // value(x) is the s_over bit of crossing x
  for (int x = 0; x < n; ++x) {
    const auto& cr = d.crossings[static_cast<std::size_t>(x)];
    if (!free_cell[static_cast<std::size_t>(cr.cell)] && !unite(x, konst, cr.s_over ? 1 : 0)) return std::nullopt;
  }
  for (const auto& comp : d.components) {
    const auto& ps = comp.passages;
    if (ps.size() < 2) continue;
    for (std::size_t i = 0; i < ps.size(); ++i) {
      const Passage& p = ps[i];
      const Passage& q = ps[(i + 1) % ps.size()];
      // over = value xor tau, tau = 1 on the strand that is over exactly when s_over is 0
      const int tp = p.over ^ d.crossings[static_cast<std::size_t>(p.crossing)].s_over;
      const int tq = q.over ^ d.crossings[static_cast<std::size_t>(q.crossing)].s_over;
      if (!unite(p.crossing, q.crossing, 1 ^ tp ^ tq)) return std::nullopt;
    }
  }
  Mosaic out = m;
  std::vector<std::vector<bool>> bits(static_cast<std::size_t>(m.size()));
  for (CellId c = 0; c < m.size(); ++c) bits[static_cast<std::size_t>(c)].assign(static_cast<std::size_t>(m.catalog().crossings(m.at(c))), false);
  for (int x = 0; x < n; ++x) {
    auto [root, p] = find(x);
    const int root_value = root == konst ? 0 : 1;
    const auto& cr = d.crossings[static_cast<std::size_t>(x)];
    bits[static_cast<std::size_t>(cr.cell)][static_cast<std::size_t>(cr.local)] = (p ^ root_value) != 0;
  }
  for (CellId c = 0; c < m.size(); ++c) {
    if (!free_cell[static_cast<std::size_t>(c)] || m.catalog().crossings(m.at(c)) == 0) continue;
    std::vector<std::pair<int, int>> pairs;
    for (const auto& st : m.face(c).strands()) pairs.emplace_back(st.a, st.b);
    out.set_face(c, TileFace::make(m.spec().geometry, pairs, bits[static_cast<std::size_t>(c)]));
  }
  return out;
}

}  // namespace hexmo
