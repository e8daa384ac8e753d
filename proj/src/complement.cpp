#include "hexmo/complement.hpp"

#include "hexmo/diagram.hpp"
#include "hexmo/families.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace hexmo {

std::string_view to_string(ComplementPolicy p) {
  switch (p) {
    case ComplementPolicy::canonical: return "canonical";
    case ComplementPolicy::loop_minimizing: return "loop-minimizing";
  }
  return "?";
}

ComplementPolicy parse_complement_policy(std::string_view text) {
  if (text == "canonical") return ComplementPolicy::canonical;
  if (text == "loop-minimizing" || text == "greedy") return ComplementPolicy::loop_minimizing;
  throw ComplementError("unknown complement policy '" + std::string(text) + "'");
}

std::string arc_code(const std::vector<SlotPair>& arcs) {
  if (arcs.empty()) return "-";
  auto sorted = arcs;
  std::sort(sorted.begin(), sorted.end());
  std::string s;
  for (auto [a, b] : sorted) s += "(" + std::to_string(a) + "-" + std::to_string(b) + ")";
  return s;
}

namespace {

SlotPair norm(int a, int b) { return a < b ? SlotPair{a, b} : SlotPair{b, a}; }

void noncrossing_matchings(std::vector<int> free, std::vector<SlotPair>& cur, std::vector<std::vector<SlotPair>>& out) {
  if (free.empty()) {
    auto m = cur;
    std::sort(m.begin(), m.end());
    out.push_back(std::move(m));
    return;
  }
  // the first free slot pairs with a slot leaving an even block on each side
  const int a = free[0];
  for (std::size_t i = 1; i < free.size(); i += 2) {
    // non-crossing: the two blocks (inside and outside the chord) are matched separately
    std::vector<int> in(free.begin() + 1, free.begin() + static_cast<long>(i));
    std::vector<int> outside(free.begin() + static_cast<long>(i) + 1, free.end());
    std::vector<std::vector<SlotPair>> left, right;
    std::vector<SlotPair> tmp;
    noncrossing_matchings(in, tmp, left);
    noncrossing_matchings(outside, tmp, right);
    for (const auto& l : left)
      for (const auto& r : right) {
        auto m = cur;
        m.push_back({a, free[i]});
        m.insert(m.end(), l.begin(), l.end());
        m.insert(m.end(), r.begin(), r.end());
        std::sort(m.begin(), m.end());
        out.push_back(std::move(m));
      }
  }
}

// Builds a face from slot pairs; `lower_over(p, q)` decides a crossing of p and q
// where p has the lesser least slot.
TileFace assemble(Geometry g, std::vector<SlotPair> pairs, const std::function<bool(SlotPair, SlotPair)>& lower_over) {
  for (auto& p : pairs) p = norm(p.first, p.second);
  std::sort(pairs.begin(), pairs.end());
  std::vector<bool> bits;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j)
      if (interleave(pairs[i].first, pairs[i].second, pairs[j].first, pairs[j].second))
        bits.push_back(lower_over(pairs[i], pairs[j]));
  return TileFace::make(g, pairs, bits);
}

// The four slots of two chords in increasing order.
std::array<int, 4> four(SlotPair x, SlotPair y) {
  std::array<int, 4> s{x.first, x.second, y.first, y.second};
  std::sort(s.begin(), s.end());
  return s;
}

// Replaces strands `x` and `y` of `t` (given by their least slots) with `repl`.
// Crossings of a new strand with an untouched strand copy the relation of the old
// strand holding the new strand's lower slot, falling back to the other end.
TileFace repair(const TileFace& t, int x, int y, const std::array<SlotPair, 2>& repl) {
  std::vector<SlotPair> pairs;
  std::set<int> replaced{x, y};
  for (const Strand& s : t.strands())
    if (!replaced.count(s.a)) pairs.emplace_back(s.a, s.b);
  std::vector<SlotPair> fresh{norm(repl[0].first, repl[0].second), norm(repl[1].first, repl[1].second)};
  pairs.insert(pairs.end(), fresh.begin(), fresh.end());
  auto origin = [&](int slot) { return std::min(slot, t.partner(slot)); };
  auto is_fresh = [&](SlotPair p) { return std::find(fresh.begin(), fresh.end(), p) != fresh.end(); };
  auto relation = [&](SlotPair n, SlotPair w) {  // whether new strand n passes over w
    for (int end : {n.first, n.second}) {
      const int o = origin(end);
      if (interleave(o, t.partner(o), w.first, w.second)) return t.over(o, w.first);
    }
    return false;
  };
  return assemble(t.geometry(), pairs, [&](SlotPair p, SlotPair q) {
    const bool fp = is_fresh(p), fq = is_fresh(q);
    if (fp && fq) return true;
    if (fp) return relation(p, q);
    if (fq) return !relation(q, p);
    return t.over(p.first, q.first);
  });
}

bool sw_less(std::pair<int, int> a, std::pair<int, int> b) { return a < b; }

}  // namespace

std::vector<std::vector<SlotPair>> complement_options(const TileFace& link) {
  const int n = link.slots();
  std::vector<int> free;
  for (int k = 0; k < n; ++k)
    if (!link.uses(k)) free.push_back(k);
  std::vector<std::vector<SlotPair>> all;
  std::vector<SlotPair> cur;
  noncrossing_matchings(free, cur, all);
  if (link.strand_count() == 0) {
    std::erase_if(all, [&](const std::vector<SlotPair>& m) {
      return !std::all_of(m.begin(), m.end(), [&](SlotPair p) { return p.second - p.first == 1 || (p.first == 0 && p.second == n - 1); });
    });
  }
  std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) { return arc_code(x) < arc_code(y); });
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

TileFace overlay_face(const TileFace& link, const std::vector<SlotPair>& arcs) {
  std::vector<SlotPair> pairs;
  for (const Strand& s : link.strands()) pairs.emplace_back(s.a, s.b);
  std::set<SlotPair> comp;
  for (auto [a, b] : arcs) {
    pairs.push_back(norm(a, b));
    comp.insert(norm(a, b));
  }
  return assemble(link.geometry(), pairs, [&](SlotPair p, SlotPair q) {
    const bool cp = comp.count(p) > 0, cq = comp.count(q) > 0;
    if (cp != cq) return cq;  // the link strand passes over
    if (cp) return true;
    return link.over(p.first, q.first);
  });
}

int ComplementDecomposition::loop_count() const {
  return static_cast<int>(std::count_if(components.begin(), components.end(), [](const auto& c) { return c.loop; }));
}

int ComplementDecomposition::arc_count() const {
  return static_cast<int>(components.size()) - loop_count();
}

int ComplementDecomposition::component_at(CellId cell, int slot) const {
  for (std::size_t i = 0; i < components.size(); ++i)
    for (const auto& p : components[i].walk)
      if (p.cell == cell && (p.from == slot || p.to == slot)) return static_cast<int>(i);
  return -1;
}

ComplementDecomposition decompose(const Mosaic& m, std::vector<std::vector<SlotPair>> arcs, ComplementPolicy policy) {
  const Board& b = m.board();
  ComplementDecomposition d;
  d.policy = policy;
  arcs.resize(static_cast<std::size_t>(b.size()));
  d.arcs = std::move(arcs);
  d.choice.assign(static_cast<std::size_t>(b.size()), -1);
  const int n = b.slots();
  // partner slot of each (cell, slot) within the complement, -1 when unused
  std::vector<int> partner(static_cast<std::size_t>(b.size() * n), -1);
  for (CellId c = 0; c < b.size(); ++c)
    for (auto [p, q] : d.arcs[static_cast<std::size_t>(c)]) {
      partner[static_cast<std::size_t>(c * n + p)] = q;
      partner[static_cast<std::size_t>(c * n + q)] = p;
    }
  std::vector<char> seen(static_cast<std::size_t>(b.size() * n), 0);
  auto walk_from = [&](CellId cell, int entry, bool loop) {
    ComplementComponent comp;
    comp.loop = loop;
    comp.ends[0] = {cell, entry};
    while (true) {
      const std::size_t key = static_cast<std::size_t>(cell * n + entry);
      if (seen[key]) break;
      const int exit = partner[key];
      if (exit < 0) throw ComplementError("complement arc enters an unused connection point");
      seen[key] = seen[static_cast<std::size_t>(cell * n + exit)] = 1;
      comp.walk.push_back({cell, entry, exit});
      const CellId nb = b.neighbor(cell, exit);
      if (nb == kOffBoard || b.is_boundary(nb)) {
        if (loop) throw ComplementError("complement loop reaches the boundary ring");
        comp.ends[1] = {cell, exit};
        break;
      }
      cell = nb;
      entry = b.opposite(exit);
    }
    return comp;
  };
  for (CellId c = 0; c < b.size(); ++c)
    for (int k = 0; k < n; ++k) {
      if (partner[static_cast<std::size_t>(c * n + k)] < 0 || seen[static_cast<std::size_t>(c * n + k)]) continue;
      const CellId nb = b.neighbor(c, k);
      if (nb != kOffBoard && !b.is_boundary(nb)) continue;
      d.components.push_back(walk_from(c, k, false));
    }
  for (CellId c = 0; c < b.size(); ++c)
    for (auto [p, q] : d.arcs[static_cast<std::size_t>(c)]) {
      if (seen[static_cast<std::size_t>(c * n + p)]) continue;
      d.components.push_back(walk_from(c, p, true));
    }
  return d;
}

namespace {

std::vector<std::vector<std::vector<SlotPair>>> all_options(const Mosaic& m) {
  const Board& b = m.board();
  std::vector<std::vector<std::vector<SlotPair>>> opts(static_cast<std::size_t>(b.size()));
  for (CellId c : b.interior()) opts[static_cast<std::size_t>(c)] = complement_options(m.face(c));
  return opts;
}

ComplementDecomposition with_choices(const Mosaic& m, const std::vector<std::vector<std::vector<SlotPair>>>& opts,
                                     const std::vector<int>& pick, ComplementPolicy policy) {
  std::vector<std::vector<SlotPair>> arcs(opts.size());
  for (std::size_t c = 0; c < opts.size(); ++c)
    if (!opts[c].empty()) arcs[c] = opts[c][static_cast<std::size_t>(std::max(pick[c], 0))];
  auto d = decompose(m, std::move(arcs), policy);
  for (std::size_t c = 0; c < opts.size(); ++c) d.choice[c] = opts[c].size() > 1 ? pick[c] : -1;
  return d;
}

}  // namespace

ComplementDecomposition compute_complement(const Mosaic& m, ComplementPolicy policy) {
  const auto opts = all_options(m);
  std::vector<int> pick(opts.size(), 0);
  auto best = with_choices(m, opts, pick, policy);
  if (policy != ComplementPolicy::loop_minimizing) return best;
  bool improved = true;
  while (improved) {
    improved = false;
    for (std::size_t c = 0; c < opts.size(); ++c) {
      for (int o = 0; o < static_cast<int>(opts[c].size()); ++o) {
        if (o == pick[c]) continue;
        auto trial = pick;
        trial[c] = o;
        auto d = with_choices(m, opts, trial, policy);
        if (sw_less(d.sw(), best.sw())) {
          best = std::move(d);
          pick = std::move(trial);
          improved = true;
        }
      }
    }
  }
  return best;
}

std::vector<ComplementDecomposition> enumerate_complements(const Mosaic& m, std::size_t limit) {
  const auto opts = all_options(m);
  std::vector<std::size_t> amb;
  for (std::size_t c = 0; c < opts.size(); ++c)
    if (opts[c].size() > 1) amb.push_back(c);
  std::vector<int> pick(opts.size(), 0);
  std::vector<ComplementDecomposition> out;
  while (true) {
    out.push_back(with_choices(m, opts, pick, ComplementPolicy::canonical));
    if (limit && out.size() >= limit) break;
    // odometer with the last ambiguous cell fastest
    std::size_t i = amb.size();
    while (i > 0) {
      const std::size_t c = amb[i - 1];
      if (++pick[c] < static_cast<int>(opts[c].size())) break;
      pick[c] = 0;
      --i;
    }
    if (i == 0) break;
  }
  return out;
}

std::vector<std::string> complement_problems(const Mosaic& m, const ComplementDecomposition& c) {
  const Board& b = m.board();
  std::vector<std::string> out;
  const int n = b.slots();
  auto where = [&](CellId cell) { return "cell " + std::to_string(b.row_col(cell).first) + "," + std::to_string(b.row_col(cell).second); };
  if (static_cast<int>(c.arcs.size()) != b.size()) return {"complement table has the wrong size"};
  for (CellId cell = 0; cell < b.size(); ++cell) {
    const auto& arcs = c.arcs[static_cast<std::size_t>(cell)];
    if (b.is_boundary(cell)) {
      if (!arcs.empty()) out.push_back(where(cell) + ": complement on a boundary tile");
      continue;
    }
    const TileFace& link = m.face(cell);
    std::vector<int> hits(static_cast<std::size_t>(n), 0);
    for (int k = 0; k < n; ++k) hits[static_cast<std::size_t>(k)] += link.uses(k) ? 1 : 0;
    for (auto [p, q] : arcs) {
      if (p < 0 || q >= n || p >= q) {
        out.push_back(where(cell) + ": malformed complement arc");
        continue;
      }
      ++hits[static_cast<std::size_t>(p)];
      ++hits[static_cast<std::size_t>(q)];
    }
    for (int k = 0; k < n; ++k)
      if (hits[static_cast<std::size_t>(k)] != 1)
        out.push_back(where(cell) + ": connection point " + std::to_string(k) + " met " + std::to_string(hits[static_cast<std::size_t>(k)]) + " times");
    for (std::size_t i = 0; i < arcs.size(); ++i)
      for (std::size_t j = i + 1; j < arcs.size(); ++j)
        if (interleave(arcs[i].first, arcs[i].second, arcs[j].first, arcs[j].second))
          out.push_back(where(cell) + ": complement arcs " + arc_code({arcs[i]}) + " and " + arc_code({arcs[j]}) + " cross");
    bool well_formed = true;
    for (int k = 0; k < n; ++k) well_formed = well_formed && hits[static_cast<std::size_t>(k)] == 1;
    if (!well_formed) continue;
    const TileFace over = overlay_face(link, arcs);
    std::set<int> comp_lows;
    for (auto [p, q] : arcs) comp_lows.insert(p);
    const auto ss = over.strands();
    for (const Crossing& x : over.crossings()) {
      const int a = ss[static_cast<std::size_t>(x.s)].a, bb = ss[static_cast<std::size_t>(x.t)].a;
      const bool ca = comp_lows.count(a) > 0, cb = comp_lows.count(bb) > 0;
      if (ca == cb) continue;
      const bool comp_over = ca ? x.s_over : !x.s_over;
      if (comp_over) out.push_back(where(cell) + ": complement passes over the link");
    }
    for (auto [p, q] : arcs)
      for (int k : {p, q}) {
        const CellId nb = b.neighbor(cell, k);
        if (nb == kOffBoard || b.is_boundary(nb)) continue;
        const auto& other = c.arcs[static_cast<std::size_t>(nb)];
        const int back = b.opposite(k);
        const bool matched = std::any_of(other.begin(), other.end(), [&](SlotPair s) { return s.first == back || s.second == back; });
        if (!matched) out.push_back(where(cell) + ": complement arc stops at connection point " + std::to_string(k));
      }
  }
  return out;
}

LoopMerge merge_loop(const Mosaic& m, const ComplementDecomposition& c, int loop) {
  if (loop < 0 || loop >= static_cast<int>(c.components.size()) || !c.components[static_cast<std::size_t>(loop)].loop)
    throw ComplementError("no complement loop with id " + std::to_string(loop));
  const Board& b = m.board();
  const Catalog& cat = m.catalog();
  const auto& lp = c.components[static_cast<std::size_t>(loop)];
  auto arcs = c.arcs;
  // remove the loop's pieces from the complement table
  std::map<CellId, std::vector<SlotPair>> pieces;
  for (const auto& p : lp.walk) {
    const SlotPair s = norm(p.from, p.to);
    pieces[p.cell].push_back(s);
    auto& v = arcs[static_cast<std::size_t>(p.cell)];
    v.erase(std::find(v.begin(), v.end(), s));
  }

  const auto link_cell = std::find_if(lp.walk.begin(), lp.walk.end(), [&](const ComplementPiece& p) { return cat.strands(m.at(p.cell)) > 0; });
  if (link_cell != lp.walk.end()) {
    Mosaic out = m;
    for (const auto& [cell, ps] : pieces) out.set_face(cell, overlay_face(m.face(cell), ps));
    // smooth a crossing between the loop and the link when there is one
    const LinkDiagram d = extract(out);
    const int loop_comp = [&] {
      const auto& p = lp.walk.front();
      return d.component_of(p.cell, out.face(p.cell).strand_at(p.from));
    }();
    for (const auto& [cell, ps] : pieces) {
      const auto& xs = cat.crossing_list(out.at(cell));
      for (int id = 0; id < static_cast<int>(xs.size()); ++id) {
        const int cs = d.component_of(cell, xs[static_cast<std::size_t>(id)].s);
        const int ct = d.component_of(cell, xs[static_cast<std::size_t>(id)].t);
        if ((cs == loop_comp) == (ct == loop_comp)) continue;
        for (int choice = 0; choice < 2; ++choice) {
          const int f = cat.smooth(out.at(cell), id, choice);
          if (f < 0) continue;
          out.set(cell, static_cast<FaceId>(f));
          return {out, decompose(out, arcs, c.policy), true, cell};
        }
      }
    }
    // otherwise band the loop into a link strand, adding a crossing
    const CellId cell = link_cell->cell;
    const TileFace& t = out.face(cell);
    const SlotPair piece = norm(link_cell->from, link_cell->to);
    for (const Strand& s : m.face(cell).strands()) {
      if (interleave(s.a, s.b, piece.first, piece.second)) continue;
      const auto q = four(piece, {s.a, s.b});
      out.set_face(cell, repair(t, piece.first, s.a, {SlotPair{q[0], q[2]}, SlotPair{q[1], q[3]}}));
      return {out, decompose(out, arcs, c.policy), true, cell};
    }
    throw ComplementError("loop shares a tile with the link but neither crosses nor bands into it");
  }

  // reband with another complement component inside a link-free tile
  for (const auto& p : lp.walk) {
    const SlotPair mine = norm(p.from, p.to);
    for (const SlotPair& other : c.arcs[static_cast<std::size_t>(p.cell)]) {
      if (other == mine || c.component_at(p.cell, other.first) == loop) continue;
      const auto q = four(mine, other);
      const bool caps01 = (mine == SlotPair{q[0], q[1]} || mine == SlotPair{q[2], q[3]});
      std::array<SlotPair, 2> repl = caps01 ? std::array<SlotPair, 2>{SlotPair{q[1], q[2]}, SlotPair{q[0], q[3]}}
                                            : std::array<SlotPair, 2>{SlotPair{q[0], q[1]}, SlotPair{q[2], q[3]}};
      auto& v = arcs[static_cast<std::size_t>(p.cell)];
      v.erase(std::find(v.begin(), v.end(), other));
      // put back the loop's other pieces, then replace this pair
      for (const auto& [cell, ps] : pieces)
        for (const SlotPair& s : ps)
          if (!(cell == p.cell && s == mine)) arcs[static_cast<std::size_t>(cell)].push_back(s);
      v.push_back(repl[0]);
      v.push_back(repl[1]);
      for (auto& cell_arcs : arcs) std::sort(cell_arcs.begin(), cell_arcs.end());
      return {m, decompose(m, arcs, c.policy), false, p.cell};
    }
  }
  (void)b;
  throw ComplementError("loop meets neither the link nor another complement component");
}

namespace {

bool inside_polygon(const std::vector<Point>& poly, Point p) {
  bool in = false;
  for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
    const Point a = poly[i], c = poly[j];
    if ((a.y > p.y) != (c.y > p.y) && p.x < (c.x - a.x) * (p.y - a.y) / (c.y - a.y) + a.x) in = !in;
  }
  return in;
}

}  // namespace

RegionPartition region_partition(const Mosaic& m, const ComplementDecomposition& c, int arc) {
  if (arc < 0 || arc >= static_cast<int>(c.components.size()) || c.components[static_cast<std::size_t>(arc)].loop)
    throw ComplementError("no complement arc with id " + std::to_string(arc));
  const Board& b = m.board();
  const auto& comp = c.components[static_cast<std::size_t>(arc)];
  RegionPartition p;
  p.arc = arc;
  p.ends = comp.ends;
  std::set<CellId> acells;
  for (const auto& w : comp.walk) acells.insert(w.cell);
  p.arc_cells.assign(acells.begin(), acells.end());
  const CellId e0 = b.neighbor(comp.ends[0].cell, comp.ends[0].slot);
  const CellId e1 = b.neighbor(comp.ends[1].cell, comp.ends[1].slot);
  p.arc_ends = {e0};
  if (e1 != e0) p.arc_ends.push_back(e1);
  const auto& ring = b.ring();
  const int R = static_cast<int>(ring.size());
  const int i0 = b.ring_index(e0), i1 = b.ring_index(e1);
  auto between = [&](int from, int to) {  // ring cells strictly clockwise from `from` to `to`
    std::vector<CellId> out;
    if (from == to) {
      for (int k = 1; k < R; ++k) out.push_back(ring[static_cast<std::size_t>((from + k) % R)]);
      return out;
    }
    for (int k = (from + 1) % R; k != to; k = (k + 1) % R) out.push_back(ring[static_cast<std::size_t>(k)]);
    return out;
  };
  std::vector<CellId> side_a = between(i0, i1);  // clockwise from e0 to e1
  std::vector<CellId> side_b = i0 == i1 ? std::vector<CellId>{} : between(i1, i0);
  auto sum = [](const std::vector<CellId>& v) { return std::accumulate(v.begin(), v.end(), 0L); };
  bool a_outside;
  if (side_a.size() != side_b.size())
    a_outside = side_a.size() < side_b.size();
  else
    a_outside = sum(side_a) <= sum(side_b);
  p.outside_ring = a_outside ? side_a : side_b;
  p.inside_ring = a_outside ? side_b : side_a;

  // polygon: the arc from end 0 to end 1, then back along the outside ring
  std::vector<Point> poly;
  poly.push_back(b.slot_point(comp.ends[0].cell, comp.ends[0].slot));
  for (const auto& w : comp.walk) {
    poly.push_back(b.center(w.cell));
    poly.push_back(b.slot_point(w.cell, w.to));
  }
  poly.push_back(b.center(e1));
  std::vector<CellId> back = p.outside_ring;
  if (a_outside) std::reverse(back.begin(), back.end());  // side_a runs e0 -> e1
  for (CellId x : back) poly.push_back(b.center(x));
  if (e1 != e0) poly.push_back(b.center(e0));
  for (CellId x : b.interior()) {
    if (acells.count(x)) continue;
    (inside_polygon(poly, b.center(x)) ? p.outside : p.inside).push_back(x);
  }
  std::sort(p.outside_ring.begin(), p.outside_ring.end());
  std::sort(p.inside_ring.begin(), p.inside_ring.end());

  const std::set<CellId> out_cells(p.outside.begin(), p.outside.end());
  const std::set<CellId> out_ring(p.outside_ring.begin(), p.outside_ring.end());
  p.outermost = true;
  for (std::size_t k = 0; k < c.components.size() && p.outermost; ++k) {
    const auto& o = c.components[k];
    if (static_cast<int>(k) == arc || o.loop) continue;
    for (const auto& w : o.walk)
      if (out_cells.count(w.cell)) p.outermost = false;
    for (const auto& e : o.ends)
      if (out_ring.count(b.neighbor(e.cell, e.slot))) p.outermost = false;
  }
  return p;
}

int outermost_arc(const Mosaic& m, const ComplementDecomposition& c) {
  int best = -1;
  std::tuple<int, std::size_t, EdgeRef> best_key{};
  const Board& b = m.board();
  for (int k = 0; k < static_cast<int>(c.components.size()); ++k) {
    if (c.components[static_cast<std::size_t>(k)].loop) continue;
    const auto p = region_partition(m, c, k);
    const EdgeRef e = std::min(b.canonical(p.ends[0]), b.canonical(p.ends[1]));
    const std::tuple<int, std::size_t, EdgeRef> key{p.outermost ? 0 : 1, p.outside_ring.size(), e};
    if (best < 0 || key < best_key) {
      best = k;
      best_key = key;
    }
  }
  return best;
}

namespace {

int components_of(const Mosaic& m) { return extract(m).component_count(); }

StageRecord record(std::string name, const Mosaic& m) {
  return {std::move(name), m, m.crossing_count(), components_of(m)};
}

std::string cell_name(const Board& b, CellId c) {
  auto [row, col] = b.row_col(c);
  return "T" + std::to_string(row) + "," + std::to_string(col);
}

// A band move: re-pair two non-crossing strands of one cell into crossing strands.
struct Band {
  CellId cell;
  int x, y;  // least slots of the two strands
};

std::vector<Band> band_moves(const Mosaic& m, const std::vector<CellId>& cells) {
  std::vector<Band> out;
  for (CellId c : cells) {
    const auto ss = m.face(c).strands();
    for (std::size_t i = 0; i < ss.size(); ++i)
      for (std::size_t j = i + 1; j < ss.size(); ++j)
        if (!interleave(ss[i].a, ss[i].b, ss[j].a, ss[j].b)) out.push_back({c, ss[i].a, ss[j].a});
  }
  return out;
}

Mosaic apply_band(const Mosaic& m, const Band& band) {
  const TileFace& t = m.face(band.cell);
  const auto q = four({band.x, t.partner(band.x)}, {band.y, t.partner(band.y)});
  Mosaic out = m;
  out.set_face(band.cell, repair(t, band.x, band.y, {SlotPair{q[0], q[2]}, SlotPair{q[1], q[3]}}));
  return out;
}

int crossings_on(const Mosaic& m, const std::vector<CellId>& cells) {
  int n = 0;
  for (CellId c : cells) n += m.catalog().crossings(m.at(c));
  return n;
}

}  // namespace

Elimination eliminate_outermost_arc(const Mosaic& knot, const ComplementDecomposition& c) {
  const Board& b = knot.board();
  const Catalog& cat = knot.catalog();
  const Setting setting = knot.spec().setting;
  if (!is_valid(knot)) return PreconditionFailed{"input", "mosaic is not valid"};
  if (components_of(knot) != 1) return PreconditionFailed{"input", "mosaic is not a knot"};
  if (c.loop_count() > 0) return PreconditionFailed{"input", "complement has loops"};
  if (c.arc_count() == 0) return PreconditionFailed{"input", "complement has no arcs"};

  PipelineTrace tr;
  tr.sw_before = c.sw();
  const int a = outermost_arc(knot, c);
  tr.region = region_partition(knot, c, a);
  const RegionPartition& P = tr.region;
  if (!P.outermost) return PreconditionFailed{"partition", "no complement arc is outermost"};
  tr.stages.push_back(record("K1", knot));
  const auto& apieces = c.components[static_cast<std::size_t>(a)].walk;

  // Step 1: add the arc to the link and re-close the ring outside it.
  Mosaic interior = knot;
  std::map<CellId, std::vector<SlotPair>> by_cell;
  for (const auto& w : apieces) by_cell[w.cell].push_back(norm(w.from, w.to));
  for (const auto& [cell, ps] : by_cell) interior.set_face(cell, overlay_face(knot.face(cell), ps));
  ClosureOptions opt;
  for (CellId x : P.inside_ring) opt.pinned[x] = knot.at(x);
  std::vector<CellId> outer_ring = P.outside_ring;
  outer_ring.insert(outer_ring.end(), P.arc_ends.begin(), P.arc_ends.end());
  std::optional<Mosaic> L1;
  if (setting == Setting::hex_enhanced) {
    opt.projections_only = true;
    int best = -1;
    for_each_boundary_closure(interior, opt, [&](const Mosaic& m) {
      const int x = crossings_on(m, outer_ring);
      if (x > best) {
        best = x;
        L1 = m;
      }
      return true;
    });
  } else {
    if (setting == Setting::hex_semi_enhanced) opt.setting = Setting::hex_standard;
    opt.limit = 1;
    for_each_boundary_closure(interior, opt, [&](const Mosaic& m) {
      L1 = m;
      return false;
    });
    if (!L1 && opt.setting) {
      opt.setting.reset();
      for_each_boundary_closure(interior, opt, [&](const Mosaic& m) {
        L1 = m;
        return false;
      });
      if (L1) tr.actions.push_back("step1: closure needs the band tile");
    }
  }
  if (!L1) return PreconditionFailed{"step1", "no boundary closure keeps the inside ring"};
  tr.stages.push_back(record("L1", *L1));

  // Step 2: saturate the outside and copy the crossing states of L_r there.
  Mosaic L2 = *L1;
  const FaceId full = b.geometry() == Geometry::hex ? cat.id(saturated_hex_tile()) : cat.id(saturated_rect_tile());
  const unsigned all = (1U << b.slots()) - 1;
  for (CellId x : P.outside) {
    if (cat.used(L2.at(x)) != all) return PreconditionFailed{"step2", "outside tile " + cell_name(b, x) + " meets the complement"};
    L2.set(x, full);
  }
  {
    std::vector<Mosaic> refs;
    if (link_supported(b.radius(), setting)) {
      const Mosaic Lr = gen_link(b.radius(), setting);
      const int turns = b.geometry() == Geometry::hex ? 6 : 4;
      for (int k = 0; k < turns; ++k) refs.push_back(rotate_mosaic(Lr, k));
    } else {
      refs.push_back(saturated_interior(knot.spec()));
    }
    std::vector<CellId> region = P.outside;
    region.insert(region.end(), P.outside_ring.begin(), P.outside_ring.end());
    auto same_shape = [&](FaceId f, FaceId g) {
      for (int k = 0; k < b.slots(); ++k)
        if (cat.partner(f, k) != cat.partner(g, k)) return false;
      return true;
    };
    std::size_t best = 0;
    int best_hits = -1;
    for (std::size_t i = 0; i < refs.size(); ++i) {
      int hits = 0;
      for (CellId x : region) hits += same_shape(L2.at(x), refs[i].at(x)) ? 1 : 0;
      if (hits > best_hits) {
        best_hits = hits;
        best = i;
      }
    }
    for (CellId x : region)
      if (same_shape(L2.at(x), refs[best].at(x))) {
        L2.set(x, refs[best].at(x));
        ++tr.aligned_cells;
      }
  }
  tr.stages.push_back(record("L2", L2));

  // Step 3: join the components of L2 into a knot.
  Mosaic K = L2;
  const EdgeRef anchor = P.ends[0];
  std::set<std::pair<CellId, int>> aslots;
  for (const auto& w : apieces) {
    aslots.insert({w.cell, w.from});
    aslots.insert({w.cell, w.to});
  }
  std::vector<CellId> work_cells = P.arc_cells;
  std::vector<CellId> late_cells = P.arc_cells;
  late_cells.insert(late_cells.end(), P.outside.begin(), P.outside.end());
  for (int guard = 0; guard < 4 * b.size(); ++guard) {
    const LinkDiagram d = extract(K);
    if (d.component_count() <= 1) break;
    const int ca = d.component_of(anchor.cell, K.face(anchor.cell).strand_at(anchor.slot));
    auto touches_a = [&](CellId cell, int strand) {
      const Strand s = K.face(cell).strands()[static_cast<std::size_t>(strand)];
      return aslots.count({cell, s.a}) || aslots.count({cell, s.b});
    };
    bool done = false;
    // (a) smooth a crossing of the arc with another component
    for (int pass = 0; pass < 2 && !done; ++pass) {
      for (CellId cell : pass == 0 ? work_cells : late_cells) {
        const auto& xs = cat.crossing_list(K.at(cell));
        for (int id = 0; id < static_cast<int>(xs.size()) && !done; ++id) {
          const int cs = d.component_of(cell, xs[static_cast<std::size_t>(id)].s);
          const int ct = d.component_of(cell, xs[static_cast<std::size_t>(id)].t);
          if (cs == ct) continue;
          if (pass == 0 && !((cs == ca && touches_a(cell, xs[static_cast<std::size_t>(id)].s)) ||
                             (ct == ca && touches_a(cell, xs[static_cast<std::size_t>(id)].t))))
            continue;
          for (int choice = 0; choice < 2 && !done; ++choice) {
            const int f = cat.smooth(K.at(cell), id, choice);
            if (f < 0) continue;
            K.set(cell, static_cast<FaceId>(f));
            tr.actions.push_back(std::string(pass == 0 ? "step3: smooth arc crossing at " : "step3: smooth crossing at ") + cell_name(b, cell));
            done = true;
          }
        }
        if (done) break;
      }
      if (!done && pass == 0) {
        // (b) band the arc's component to another one inside A
        for (const Band& band : band_moves(K, work_cells)) {
          const TileFace& t = K.face(band.cell);
          const int cx = d.component_of(band.cell, t.strand_at(band.x));
          const int cy = d.component_of(band.cell, t.strand_at(band.y));
          if (cx == cy || (cx != ca && cy != ca)) continue;
          K = apply_band(K, band);
          tr.actions.push_back("step3: band at " + cell_name(b, band.cell));
          done = true;
          break;
        }
      }
    }
    if (!done) {
      for (const Band& band : band_moves(K, work_cells)) {
        const TileFace& t = K.face(band.cell);
        if (d.component_of(band.cell, t.strand_at(band.x)) == d.component_of(band.cell, t.strand_at(band.y))) continue;
        K = apply_band(K, band);
        tr.actions.push_back("step3: band two other components at " + cell_name(b, band.cell));
        done = true;
        break;
      }
    }
    if (!done) return PreconditionFailed{"step3", "a component of L2 never meets the arc's component"};
  }
  if (components_of(K) != 1) return PreconditionFailed{"step3", "components could not be joined"};
  tr.stages.push_back(record("K2", K));

  // Step 4: compensate boundary crossings lost on the outside ring.
  tr.lost_boundary_crossings = crossings_on(knot, P.outside_ring) - crossings_on(K, P.outside_ring);
  {
    std::set<CellId> outside_all(P.outside.begin(), P.outside.end());
    outside_all.insert(P.outside_ring.begin(), P.outside_ring.end());
    const std::set<CellId> acell_set(P.arc_cells.begin(), P.arc_cells.end());
    const LinkDiagram d = extract(K);
    for (const auto& comp : d.components) {
      const auto& w = comp.walk;
      const std::size_t n = w.size();
      std::size_t start = 0;
      while (start < n && outside_all.count(w[start].cell)) ++start;
      if (start == n) continue;
      for (std::size_t k = 1; k <= n; ++k) {
        const std::size_t i = (start + k) % n;
        if (!outside_all.count(w[i].cell)) continue;
        std::size_t j = i;
        while (outside_all.count(w[(j + 1) % n].cell)) j = (j + 1) % n;
        const CellId before = w[(i + n - 1) % n].cell, after = w[(j + 1) % n].cell;
        if (acell_set.count(before) && acell_set.count(after)) ++tr.outside_edges;
        k += (j + n - i) % n;
      }
    }
  }
  if (setting == Setting::hex_enhanced) {
    int deficit = knot.crossing_count() - K.crossing_count();
    while (deficit > 0) {
      bool done = false;
      const auto moves = band_moves(K, work_cells);
      for (const Band& band : moves) {
        Mosaic trial = apply_band(K, band);
        if (components_of(trial) != 1) continue;
        K = std::move(trial);
        tr.actions.push_back("step4: band at " + cell_name(b, band.cell));
        done = true;
        break;
      }
      for (std::size_t i = 0; i < moves.size() && !done; ++i)
        for (std::size_t j = i + 1; j < moves.size() && !done; ++j) {
          if (moves[i].cell == moves[j].cell) continue;
          Mosaic trial = apply_band(apply_band(K, moves[i]), moves[j]);
          if (components_of(trial) != 1) continue;
          K = std::move(trial);
          tr.actions.push_back("step4: double band at " + cell_name(b, moves[i].cell) + " and " + cell_name(b, moves[j].cell));
          done = true;
        }
      if (!done) return PreconditionFailed{"step4", "lost boundary crossings cannot be compensated inside the arc's tiles"};
      deficit = knot.crossing_count() - K.crossing_count();
    }
  }
  tr.stages.push_back(record("K3", K));

  // The complement of K3: the input complement without the eliminated arc.
  std::vector<std::vector<SlotPair>> arcs = c.arcs;
  for (const auto& w : apieces) {
    auto& v = arcs[static_cast<std::size_t>(w.cell)];
    v.erase(std::find(v.begin(), v.end(), norm(w.from, w.to)));
  }
  tr.complement = decompose(K, std::move(arcs), c.policy);
  tr.sw_after = tr.complement.sw();
  return tr;
}

Reduction reduce_to_trivial(const Mosaic& knot, ComplementPolicy policy) {
  Reduction red{knot, compute_complement(knot, policy), {}, 0, {}, std::nullopt};
  red.sw_history.push_back(red.complement.sw());
  const int cap = 4 * knot.size() + 8;
  for (int step = 0; step < cap; ++step) {
    const auto [s, w] = red.complement.sw();
    if (s == 0 && w == 0) return red;
    if (s > 0) {
      int loop = 0;
      while (!red.complement.components[static_cast<std::size_t>(loop)].loop) ++loop;
      try {
        auto merged = merge_loop(red.mosaic, red.complement, loop);
        red.mosaic = std::move(merged.mosaic);
        red.complement = std::move(merged.complement);
      } catch (const ComplementError& e) {
        red.failure = PreconditionFailed{"loop", e.what()};
        return red;
      }
      ++red.loop_merges;
    } else {
      auto out = eliminate_outermost_arc(red.mosaic, red.complement);
      if (auto* f = std::get_if<PreconditionFailed>(&out)) {
        red.failure = *f;
        return red;
      }
      auto& tr = std::get<PipelineTrace>(out);
      red.mosaic = tr.output();
      red.complement = tr.complement;
      red.traces.push_back(std::move(tr));
    }
    red.sw_history.push_back(red.complement.sw());
  }
  red.failure = PreconditionFailed{"reduce", "step limit reached"};
  return red;
}

std::vector<std::pair<int, int>> adjacent_side_counterexamples(const Mosaic& m) {
  const Board& b = m.board();
  const Catalog& cat = m.catalog();
  std::vector<std::pair<int, int>> out;
  const auto sides = hex_sides(b);
  if (sides.size() != 6) return out;
  const auto& ring = b.ring();
  const int R = static_cast<int>(ring.size());
  for (int s = 0; s < 6; ++s) {
    const int t = (s + 1) % 6;
    int last = -1, first = -1;
    for (CellId x : sides[static_cast<std::size_t>(s)])
      if (cat.crossings(m.at(x)) > 0) last = b.ring_index(x);
    for (CellId x : sides[static_cast<std::size_t>(t)])
      if (cat.crossings(m.at(x)) > 0 && first < 0) first = b.ring_index(x);
    if (last < 0 || first < 0) continue;
    bool witness = false;
    for (int i = last;; i = (i + 1) % R) {
      const CellId x = ring[static_cast<std::size_t>(i)];
      for (int k = 0; k < b.slots(); ++k) {
        const CellId nb = b.neighbor(x, k);
        if (nb != kOffBoard && b.is_interior(nb) && !(cat.used(m.at(x)) >> k & 1U)) witness = true;
      }
      if (i == first) break;
    }
    if (!witness) out.emplace_back(s, t);
  }
  return out;
}

}  // namespace hexmo
