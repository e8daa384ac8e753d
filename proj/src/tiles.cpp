#include "hexmo/tiles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>

namespace hexmo {

namespace {

// Crossing geometry: strands are straight chords between slot midpoints on the unit
// circle. The three-diameter tile would meet in a triple point, so every chord is
// nudged (lower endpoint clockwise, upper endpoint counter-clockwise); the three
// diameters then bound a small triangle, which fixes the order of crossings along
// each strand.
constexpr double kNudge = 0.08;

// The two consecutive-slot pairings of four boundary slots k..k+3 are the standard
// boundary tile {k, k+1}{k+2, k+3} and the band tile {k, k+3}{k+1, k+2}.
constexpr bool kStandardIsAdjacentCaps = true;

double slot_angle(Geometry g, int slot) {
  const double deg = g == Geometry::hex ? 60.0 - 60.0 * slot : 90.0 - 90.0 * slot;
  return deg * std::numbers::pi / 180.0;
}

struct Chord {
  double x1, y1, x2, y2;
};

Chord chord(Geometry g, const Strand& s) {
  const double a = slot_angle(g, s.a) - kNudge;
  const double b = slot_angle(g, s.b) + kNudge;
  return {std::cos(a), std::sin(a), std::cos(b), std::sin(b)};
}

// Parameters (along p, along q) of the intersection of two chords.
std::pair<double, double> intersect(const Chord& p, const Chord& q) {
  const double rx = p.x2 - p.x1, ry = p.y2 - p.y1;
  const double sx = q.x2 - q.x1, sy = q.y2 - q.y1;
  const double den = rx * sy - ry * sx;
  const double qpx = q.x1 - p.x1, qpy = q.y1 - p.y1;
  return {(qpx * sy - qpy * sx) / den, (qpx * ry - qpy * rx) / den};
}

// Builds a face from a partner table and an over-relation on least slots.
template <typename OverFn>
TileFace build(Geometry g, const std::vector<std::pair<int, int>>& pairs, OverFn over_fn) {
  std::vector<bool> bits;
  std::vector<std::pair<int, int>> sorted;
  for (auto [a, b] : pairs) sorted.emplace_back(std::min(a, b), std::max(a, b));
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = i + 1; j < sorted.size(); ++j)
      if (interleave(sorted[i].first, sorted[i].second, sorted[j].first, sorted[j].second))
        bits.push_back(over_fn(sorted[i], sorted[j]));
  return TileFace::make(g, sorted, bits);
}

int slot_distance(Geometry g, int a, int b) {
  const int n = slot_count(g);
  const int d = std::abs(a - b);
  return std::min(d, n - d);
}

// Whether the used slots are four cyclically consecutive slots; returns the first.
std::optional<int> consecutive_four(Geometry g, unsigned used) {
  const int n = slot_count(g);
  if (n != 6 || __builtin_popcount(used) != 4) return std::nullopt;
  for (int k = 0; k < n; ++k) {
    unsigned m = 0;
    for (int i = 0; i < 4; ++i) m |= 1U << ((k + i) % n);
    if (m == used) return k;
  }
  return std::nullopt;
}

}  // namespace

std::array<std::pair<double, double>, 2> strand_chord(Geometry g, int a, int b) {
  const Chord c = chord(g, Strand{std::min(a, b), std::max(a, b)});
  return {{{c.x1, c.y1}, {c.x2, c.y2}}};
}

bool interleave(int a, int b, int c, int d) {
  if (a > b) std::swap(a, b);
  const bool c_in = a < c && c < b;
  const bool d_in = a < d && d < b;
  return c_in != d_in && c != a && c != b && d != a && d != b;
}

TileFace::TileFace(Geometry g) : geometry_(g) {}

TileFace TileFace::make(Geometry g, std::vector<std::pair<int, int>> pairs, const std::vector<bool>& over) {
  TileFace t(g);
  const int n = slot_count(g);
  for (auto& [a, b] : pairs) {
    if (a > b) std::swap(a, b);
    if (a < 0 || b >= n) throw TileError("slot out of range in strand (" + std::to_string(a) + "-" + std::to_string(b) + ")");
    if (a == b) throw TileError("strand joins slot " + std::to_string(a) + " to itself");
    if (t.partner_[a] >= 0 || t.partner_[b] >= 0) throw TileError("slot used twice");
    t.partner_[a] = static_cast<std::int8_t>(b);
    t.partner_[b] = static_cast<std::int8_t>(a);
  }
  std::sort(pairs.begin(), pairs.end());
  std::size_t bit = 0;
  std::size_t expected = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j)
      if (interleave(pairs[i].first, pairs[i].second, pairs[j].first, pairs[j].second)) ++expected;
  if (!over.empty() && over.size() != expected)
    throw TileError("expected " + std::to_string(expected) + " crossing bits, got " + std::to_string(over.size()));
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j)
      if (interleave(pairs[i].first, pairs[i].second, pairs[j].first, pairs[j].second)) {
        const bool lower_over = over.empty() ? true : over[bit];
        ++bit;
        const int a = pairs[i].first, b = pairs[j].first;
        if (lower_over)
          t.over_ |= std::uint64_t{1} << (a * 6 + b);
        else
          t.over_ |= std::uint64_t{1} << (b * 6 + a);
      }
  return t;
}

unsigned TileFace::used_mask() const {
  unsigned m = 0;
  for (int k = 0; k < slots(); ++k)
    if (uses(k)) m |= 1U << k;
  return m;
}

std::vector<Strand> TileFace::strands() const {
  std::vector<Strand> out;
  for (int k = 0; k < slots(); ++k)
    if (partner(k) > k) out.push_back({k, partner(k)});
  return out;
}

std::vector<Crossing> TileFace::crossings() const {
  const auto ss = strands();
  std::vector<Crossing> out;
  for (std::size_t i = 0; i < ss.size(); ++i)
    for (std::size_t j = i + 1; j < ss.size(); ++j)
      if (interleave(ss[i].a, ss[i].b, ss[j].a, ss[j].b))
        out.push_back({static_cast<int>(i), static_cast<int>(j), over(ss[i].a, ss[j].a)});
  return out;
}

int TileFace::strand_count() const { return static_cast<int>(strands().size()); }
int TileFace::crossing_count() const { return static_cast<int>(crossings().size()); }

int TileFace::strand_at(int slot) const {
  const int p = partner(slot);
  if (p < 0) return -1;
  const int least = std::min(p, slot);
  int idx = 0;
  for (int k = 0; k < least; ++k)
    if (partner(k) > k) ++idx;
  return idx;
}

TileFace TileFace::flipped(int id) const {
  const auto ss = strands();
  const auto xs = crossings();
  if (id < 0 || id >= static_cast<int>(xs.size())) throw TileError("no crossing " + std::to_string(id));
  TileFace t = *this;
  const int a = ss[static_cast<std::size_t>(xs[static_cast<std::size_t>(id)].s)].a;
  const int b = ss[static_cast<std::size_t>(xs[static_cast<std::size_t>(id)].t)].a;
  t.over_ ^= (std::uint64_t{1} << (a * 6 + b)) | (std::uint64_t{1} << (b * 6 + a));
  return t;
}

std::uint64_t TileFace::key() const {
  std::uint64_t k = geometry_ == Geometry::hex ? 0 : 1;
  for (int s = 0; s < 6; ++s) k = (k << 3) | static_cast<std::uint64_t>(partner_[s] < 0 ? 7 : partner_[s]);
  return (k << 36) | over_;
}

std::string tile_code(const TileFace& t) {
  const auto ss = t.strands();
  if (ss.empty()) return "-";
  std::string out;
  for (const auto& s : ss) out += "(" + std::to_string(s.a) + "-" + std::to_string(s.b) + ")";
  const auto xs = t.crossings();
  if (!xs.empty()) {
    out += ':';
    for (const auto& x : xs) out += x.s_over ? 'o' : 'u';
  }
  return out;
}

TileFace parse_tile_code(Geometry g, std::string_view code) {
  auto fail = [&](std::size_t col, const std::string& what) -> TileError {
    return TileError("column " + std::to_string(col) + ": " + what, col);
  };
  if (code == "-") return TileFace(g);
  if (code.empty()) throw fail(0, "empty tile code");
  const int n = slot_count(g);
  std::vector<std::pair<int, int>> pairs;
  std::size_t i = 0;
  auto digit = [&](std::size_t at) {
    if (at >= code.size() || code[at] < '0' || code[at] > '9') throw fail(at, "expected slot digit");
    const int v = code[at] - '0';
    if (v >= n) throw fail(at, "slot " + std::to_string(v) + " out of range");
    return v;
  };
  while (i < code.size() && code[i] == '(') {
    const int a = digit(i + 1);
    if (i + 2 >= code.size() || code[i + 2] != '-') throw fail(i + 2, "expected '-'");
    const int b = digit(i + 3);
    if (i + 4 >= code.size() || code[i + 4] != ')') throw fail(i + 4, "expected ')'");
    if (a >= b) throw fail(i + 1, "strand slots must be increasing");
    if (!pairs.empty() && pairs.back().first >= a) throw fail(i + 1, "strands must be sorted by least slot");
    pairs.emplace_back(a, b);
    i += 5;
  }
  if (pairs.empty()) throw fail(i, "expected '(' or '-'");
  std::vector<bool> bits;
  if (i < code.size()) {
    if (code[i] != ':') throw fail(i, "expected ':' or end of code");
    ++i;
    if (i >= code.size()) throw fail(i, "missing crossing bits");
    for (; i < code.size(); ++i) {
      if (code[i] != 'o' && code[i] != 'u') throw fail(i, "crossing bit must be 'o' or 'u'");
      bits.push_back(code[i] == 'o');
    }
  }
  const TileFace probe = TileFace::make(g, pairs, {});
  if (static_cast<std::size_t>(probe.crossing_count()) != bits.size())
    throw fail(code.size(), "expected " + std::to_string(probe.crossing_count()) + " crossing bits, got " +
                                std::to_string(bits.size()));
  return TileFace::make(g, pairs, bits);
}

TileFace rotate(const TileFace& t, int k) {
  const int n = t.slots();
  k = ((k % n) + n) % n;
  if (k == 0) return t;
  std::vector<std::pair<int, int>> pairs;
  for (const auto& s : t.strands()) pairs.emplace_back((s.a + k) % n, (s.b + k) % n);
  // least slot of the rotated strand -> least slot of the original strand
  std::map<int, int> back;
  for (const auto& s : t.strands()) back[std::min((s.a + k) % n, (s.b + k) % n)] = s.a;
  return build(t.geometry(), pairs, [&](std::pair<int, int> x, std::pair<int, int> y) {
    return t.over(back.at(x.first), back.at(y.first));
  });
}

TileFace canonical_face(const TileFace& t) {
  TileFace best = t;
  std::string best_code = tile_code(t);
  for (int k = 1; k < t.slots(); ++k) {
    TileFace r = rotate(t, k);
    std::string c = tile_code(r);
    if (c < best_code) {
      best = r;
      best_code = c;
    }
  }
  return best;
}

std::optional<TileFace> try_smooth(const TileFace& t, int id, int choice) {
  const auto ss = t.strands();
  const auto xs = t.crossings();
  if (id < 0 || id >= static_cast<int>(xs.size())) throw TileError("no crossing " + std::to_string(id) + " in tile " + tile_code(t));
  if (choice != 0 && choice != 1) throw TileError("smoothing choice must be 0 or 1");
  const Crossing& x = xs[static_cast<std::size_t>(id)];
  const Strand s = ss[static_cast<std::size_t>(x.s)];
  const Strand u = ss[static_cast<std::size_t>(x.t)];
  const Geometry g = t.geometry();
  const Chord cs = chord(g, s), cu = chord(g, u);
  const auto [ps, pu] = intersect(cs, cu);

  // New arcs, identified by the endpoint slots of the pieces they are glued from.
  const std::pair<int, int> arc0 = choice == 0 ? std::pair{s.a, u.a} : std::pair{s.a, u.b};
  const std::pair<int, int> arc1 = choice == 0 ? std::pair{s.b, u.b} : std::pair{s.b, u.a};
  auto arc_of_endpoint = [&](int slot) { return slot == arc0.first || slot == arc0.second ? 0 : 1; };

  std::vector<std::pair<int, int>> pairs{arc0, arc1};
  std::vector<Strand> others;
  for (std::size_t i = 0; i < ss.size(); ++i)
    if (static_cast<int>(i) != x.s && static_cast<int>(i) != x.t) {
      others.push_back(ss[i]);
      pairs.emplace_back(ss[i].a, ss[i].b);
    }

  // over[arc][other least slot] for crossings carried over from the cut strands
  std::map<std::pair<int, int>, bool> carried;
  for (const Strand& w : others) {
    const Chord cw = chord(g, w);
    for (int which = 0; which < 2; ++which) {
      const Strand& cut = which == 0 ? s : u;
      if (!interleave(cut.a, cut.b, w.a, w.b)) continue;
      const auto [p, q] = intersect(which == 0 ? cs : cu, cw);
      (void)q;
      const double split = which == 0 ? ps : pu;
      const int endpoint = p < split ? cut.a : cut.b;
      const int arc = arc_of_endpoint(endpoint);
      const auto key = std::pair{arc, w.a};
      if (carried.count(key)) return std::nullopt;  // bigon between the new arc and w
      carried[key] = t.over(cut.a, w.a);
    }
  }
  // Every carried crossing must be a genuine crossing of the new face and vice versa.
  for (int arc = 0; arc < 2; ++arc) {
    const auto [p, q] = arc == 0 ? arc0 : arc1;
    for (const Strand& w : others)
      if (interleave(p, q, w.a, w.b) != (carried.count({arc, w.a}) > 0)) return std::nullopt;
  }
  auto least_arc = [&](int least) -> int {
    if (least == std::min(arc0.first, arc0.second)) return 0;
    if (least == std::min(arc1.first, arc1.second)) return 1;
    return -1;
  };
  return build(g, pairs, [&](std::pair<int, int> p, std::pair<int, int> q) {
    const int ap = least_arc(p.first), aq = least_arc(q.first);
    if (ap >= 0 && aq < 0) return carried.at({ap, q.first});
    if (aq >= 0 && ap < 0) return !carried.at({aq, p.first});
    return t.over(p.first, q.first);
  });
}

TileFace smooth_tile(const TileFace& t, int id, int choice) {
  auto r = try_smooth(t, id, choice);
  if (!r) throw TileError("smoothing crossing " + std::to_string(id) + " of " + tile_code(t) + " with choice " +
                          std::to_string(choice) + " does not yield a tile");
  return *r;
}

bool is_standard_pairing(const TileFace& t) {
  const auto ss = t.strands();
  if (ss.size() != 2 || t.crossing_count() != 0) return false;
  const auto k = consecutive_four(t.geometry(), t.used_mask());
  if (!k) return false;
  const int n = t.slots();
  const bool caps = t.partner(*k) == (*k + 1) % n;
  return caps == kStandardIsAdjacentCaps;
}

TileProperties tile_properties(const TileFace& t) {
  TileProperties p;
  const auto ss = t.strands();
  const auto xs = t.crossings();
  p.arc_count = static_cast<int>(ss.size());
  p.crossing_count = static_cast<int>(xs.size());
  p.used_slots = t.used_mask();
  if (ss.size() == 3 && xs.size() == 3) {
    std::array<int, 3> over_count{};
    for (const auto& x : xs) ++over_count[static_cast<std::size_t>(x.s_over ? x.s : x.t)];
    p.is_alternating_3crossing = over_count == std::array<int, 3>{1, 1, 1};
  }
  p.is_band_pairing = ss.size() == 2 && xs.empty() && consecutive_four(t.geometry(), p.used_slots) &&
                      !is_standard_pairing(t);
  return p;
}

TileFace keep_strands(const TileFace& t, unsigned mask) {
  std::vector<std::pair<int, int>> pairs;
  const auto ss = t.strands();
  for (std::size_t i = 0; i < ss.size(); ++i)
    if (mask & (1U << i)) pairs.emplace_back(ss[i].a, ss[i].b);
  return build(t.geometry(), pairs, [&](std::pair<int, int> p, std::pair<int, int> q) { return t.over(p.first, q.first); });
}

TileFace saturated_hex_tile() { return parse_tile_code(Geometry::hex, "(0-3)(1-4)(2-5):ouo"); }
TileFace saturated_rect_tile() { return parse_tile_code(Geometry::rect, "(0-2)(1-3):o"); }

namespace {

void matchings(int n, int from, std::vector<std::pair<int, int>>& cur, std::vector<bool>& used,
               std::vector<std::vector<std::pair<int, int>>>& out) {
  out.push_back(cur);
  for (int a = from; a < n; ++a) {
    if (used[static_cast<std::size_t>(a)]) continue;
    used[static_cast<std::size_t>(a)] = true;
    for (int b = a + 1; b < n; ++b) {
      if (used[static_cast<std::size_t>(b)]) continue;
      used[static_cast<std::size_t>(b)] = true;
      cur.emplace_back(a, b);
      matchings(n, a + 1, cur, used, out);
      cur.pop_back();
      used[static_cast<std::size_t>(b)] = false;
    }
    used[static_cast<std::size_t>(a)] = false;
  }
}

std::vector<TileFace> raw_faces(Geometry g) {
  const int n = slot_count(g);
  std::vector<std::vector<std::pair<int, int>>> ms;
  std::vector<std::pair<int, int>> cur;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  matchings(n, 0, cur, used, ms);
  std::vector<TileFace> out;
  for (const auto& m : ms) {
    const int xs = TileFace::make(g, m).crossing_count();
    for (int state = 0; state < (1 << xs); ++state) {
      std::vector<bool> bits;
      for (int i = 0; i < xs; ++i) bits.push_back((state >> i) & 1);
      out.push_back(TileFace::make(g, m, bits));
    }
  }
  auto order = [](const TileFace& f) { return std::tuple(f.strand_count(), f.crossing_count(), tile_code(f)); };
  std::sort(out.begin(), out.end(), [&](const TileFace& x, const TileFace& y) { return order(x) < order(y); });
  return out;
}

}  // namespace

Catalog::Catalog(Geometry g) : geometry_(g) {
  faces_ = raw_faces(g);
  const int n = slot_count(g);
  for (std::size_t i = 0; i < faces_.size(); ++i) index_.emplace_back(faces_[i].key(), static_cast<FaceId>(i));
  std::sort(index_.begin(), index_.end());
  by_used_.assign(1U << n, {});

  // Rotation classes.
  std::map<std::string, std::vector<FaceId>> groups;
  for (std::size_t i = 0; i < faces_.size(); ++i) groups[tile_code(canonical_face(faces_[i]))].push_back(static_cast<FaceId>(i));
  std::vector<std::pair<std::tuple<int, int, std::string>, std::vector<FaceId>>> ordered;
  for (auto& [code, members] : groups) {
    const TileFace& f = faces_[members.front()];
    ordered.push_back({{f.strand_count(), f.crossing_count(), code}, members});
  }
  std::sort(ordered.begin(), ordered.end());

  info_.resize(faces_.size());
  for (std::size_t c = 0; c < ordered.size(); ++c) {
    TileClass cls;
    cls.canonical = parse_tile_code(g, std::get<2>(ordered[c].first));
    cls.class_id = static_cast<int>(c);
    cls.orientations = static_cast<int>(ordered[c].second.size());
    classes_.push_back(cls);
    for (FaceId f : ordered[c].second) info_[f].class_id = static_cast<int>(c);
  }

  for (std::size_t i = 0; i < faces_.size(); ++i) {
    const TileFace& f = faces_[i];
    Info& in = info_[i];
    in.used = f.used_mask();
    in.crossing_list = f.crossings();
    in.crossings = static_cast<int>(in.crossing_list.size());
    const auto ss = f.strands();
    in.strands = static_cast<int>(ss.size());
    in.props = tile_properties(f);
    in.code = tile_code(f);
    by_used_[in.used].push_back(static_cast<FaceId>(i));

    in.order.assign(ss.size(), {});
    std::vector<std::vector<std::pair<double, int>>> along(ss.size());
    for (int x = 0; x < in.crossings; ++x) {
      const Crossing& cr = in.crossing_list[static_cast<std::size_t>(x)];
      const Chord p = chord(g, ss[static_cast<std::size_t>(cr.s)]);
      const Chord q = chord(g, ss[static_cast<std::size_t>(cr.t)]);
      const auto [tp, tq] = intersect(p, q);
      along[static_cast<std::size_t>(cr.s)].emplace_back(tp, x);
      along[static_cast<std::size_t>(cr.t)].emplace_back(tq, x);
      in.points.emplace_back(p.x1 + tp * (p.x2 - p.x1), p.y1 + tp * (p.y2 - p.y1));
    }
    for (std::size_t s = 0; s < ss.size(); ++s) {
      std::sort(along[s].begin(), along[s].end());
      for (auto [tpar, x] : along[s]) in.order[s].push_back(x);
    }
  }

  for (std::size_t i = 0; i < faces_.size(); ++i) {
    Info& in = info_[i];
    for (int k = 0; k < n; ++k) in.rot[static_cast<std::size_t>(k)] = id(hexmo::rotate(faces_[i], k));
    in.smooth.assign(static_cast<std::size_t>(in.crossings * 2), -1);
    for (int x = 0; x < in.crossings; ++x)
      for (int c = 0; c < 2; ++c)
        if (auto r = try_smooth(faces_[i], x, c)) in.smooth[static_cast<std::size_t>(x * 2 + c)] = id(*r);
  }

  // Best-effort aliases onto the published tile numbering.
  if (g == Geometry::rect) {
    for (auto& cls : classes_) {
      const auto ss = cls.canonical.strands();
      if (ss.empty()) cls.tile_number = 1;
      else if (ss.size() == 1) cls.tile_number = slot_distance(g, ss[0].a, ss[0].b) == 1 ? 2 : 3;
      else cls.tile_number = cls.canonical.crossing_count() == 0 ? 4 : 5;
    }
  } else {
    const FaceId sat = id(saturated_hex_tile());
    const int sat_class = info_[sat].class_id;
    const int mirror_class = info_[id(saturated_hex_tile().flipped(0).flipped(1).flipped(2))].class_id;
    std::set<int> smoothed_sat;
    for (int x = 0; x < 3; ++x)
      for (int c = 0; c < 2; ++c)
        if (int r = smooth(sat, x, c); r >= 0) smoothed_sat.insert(info_[static_cast<std::size_t>(r)].class_id);
    int next_nc2 = 7, next_c2 = 11, next_c2_other = 13, next_3 = 17, next_3x1 = 19, next_3x2 = 22, next_3x3 = 24;
    for (auto& cls : classes_) {
      const TileFace& f = cls.canonical;
      const auto ss = f.strands();
      const int xs = f.crossing_count();
      if (ss.empty()) {
        cls.tile_number = 1;
      } else if (ss.size() == 1) {
        cls.tile_number = 1 + slot_distance(g, ss[0].a, ss[0].b);
      } else if (ss.size() == 2 && xs == 0) {
        if (is_standard_pairing(f)) cls.tile_number = 5;
        else if (tile_properties(f).is_band_pairing) cls.tile_number = 6;
        else cls.tile_number = next_nc2++;
      } else if (ss.size() == 2) {
        cls.tile_number = consecutive_four(g, f.used_mask()) ? next_c2++ : next_c2_other++;
      } else if (xs == 0) {
        cls.tile_number = next_3++;
      } else if (xs == 1) {
        cls.tile_number = next_3x1++;
      } else if (xs == 2) {
        cls.tile_number = smoothed_sat.count(cls.class_id) ? 21 : next_3x2++;
      } else if (cls.class_id == sat_class) {
        cls.tile_number = 27;
      } else if (cls.class_id == mirror_class) {
        cls.tile_number = 26;
      } else {
        cls.tile_number = next_3x3++;
      }
    }
  }
}

const Catalog& Catalog::get(Geometry g) {
  static const Catalog hex(Geometry::hex);
  static const Catalog rect(Geometry::rect);
  return g == Geometry::hex ? hex : rect;
}

std::optional<FaceId> Catalog::find(const TileFace& t) const {
  const auto k = t.key();
  auto it = std::lower_bound(index_.begin(), index_.end(), std::pair{k, FaceId{0}});
  if (it == index_.end() || it->first != k) return std::nullopt;
  return it->second;
}

FaceId Catalog::id(const TileFace& t) const {
  if (auto f = find(t)) return *f;
  throw TileError("face " + tile_code(t) + " is not in the catalog");
}

FaceId Catalog::rotate(FaceId f, int k) const {
  const int n = slot_count(geometry_);
  k = ((k % n) + n) % n;
  return info_[f].rot[static_cast<std::size_t>(k)];
}

std::vector<TileClass> enumerate_catalog(Geometry g) { return Catalog::get(g).classes(); }

std::vector<TileFace> enumerate_faces(Geometry g) {
  const Catalog& cat = Catalog::get(g);
  std::vector<TileFace> out;
  for (int i = 0; i < cat.size(); ++i) out.push_back(cat.face(static_cast<FaceId>(i)));
  return out;
}

}  // namespace hexmo
