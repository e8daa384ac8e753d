#include "hexmo/tiles.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

using namespace hexmo;

namespace {

using Matching = std::vector<std::pair<int, int>>;

// Every partial matching of n slots, built by deciding slot by slot.
void matchings(int n, int at, std::vector<int>& partner, std::vector<Matching>& out) {
  if (at == n) {
    Matching m;
    for (int i = 0; i < n; ++i)
      if (partner[i] > i) m.emplace_back(i, partner[i]);
    out.push_back(m);
    return;
  }
  if (partner[at] >= 0) return matchings(n, at + 1, partner, out);
  matchings(n, at + 1, partner, out);  // leave unused
  for (int j = at + 1; j < n; ++j)
    if (partner[j] < 0) {
      partner[at] = j, partner[j] = at;
      matchings(n, at + 1, partner, out);
      partner[at] = -1, partner[j] = -1;
    }
}

bool crosses(std::pair<int, int> p, std::pair<int, int> q) {
  auto inside = [&](int x) { return p.first < x && x < p.second; };
  return inside(q.first) != inside(q.second);
}

int crossing_pairs(const Matching& m) {
  int c = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) c += crosses(m[i], m[j]);
  return c;
}

// Oriented faces: every matching times every over/under state.
int oriented_count(int n, int max_strands) {
  std::vector<int> partner(static_cast<std::size_t>(n), -1);
  std::vector<Matching> all;
  matchings(n, 0, partner, all);
  int total = 0;
  for (const auto& m : all)
    if (static_cast<int>(m.size()) <= max_strands) total += 1 << crossing_pairs(m);
  return total;
}

}  // namespace

TEST_CASE("oriented face totals match brute force") {
  CHECK(oriented_count(6, 3) == 113);
  CHECK(oriented_count(4, 2) == 11);
  CHECK(enumerate_faces(Geometry::hex).size() == 113);
  CHECK(enumerate_faces(Geometry::rect).size() == 11);
  CHECK(Catalog::get(Geometry::hex).size() == 113);
}

TEST_CASE("rotation classes: 27 hex, 5 rect, consistent with orbit counting") {
  for (Geometry g : {Geometry::hex, Geometry::rect}) {
    const auto faces = enumerate_faces(g);
    const int n = slot_count(g);
    // Burnside: average number of faces fixed by each rotation.
    long fixed = 0;
    for (int k = 0; k < n; ++k)
      for (const auto& f : faces) fixed += rotate(f, k) == f;
    const auto classes = enumerate_catalog(g);
    CHECK(static_cast<long>(classes.size()) * n == fixed);
    CHECK(classes.size() == (g == Geometry::hex ? 27U : 5U));
    int orbit_total = 0;
    for (const auto& c : classes) orbit_total += c.orientations;
    CHECK(orbit_total == static_cast<int>(faces.size()));
  }
}

TEST_CASE("hex strata 1/3/6/6/2/2/3/4") {
  std::map<std::pair<int, int>, int> strata;
  for (const auto& c : enumerate_catalog(Geometry::hex))
    ++strata[{c.canonical.strand_count(), c.canonical.crossing_count()}];
  CHECK(strata[{0, 0}] == 1);
  CHECK(strata[{1, 0}] == 3);
  CHECK(strata[{2, 0}] == 6);
  CHECK(strata[{2, 1}] == 6);
  CHECK(strata[{3, 0}] == 2);
  CHECK(strata[{3, 1}] == 2);
  CHECK(strata[{3, 2}] == 3);
  CHECK(strata[{3, 3}] == 4);
}

TEST_CASE("class ids ordered by arcs, crossings, code") {
  const auto classes = enumerate_catalog(Geometry::hex);
  for (std::size_t i = 1; i < classes.size(); ++i) {
    const auto& a = classes[i - 1].canonical;
    const auto& b = classes[i].canonical;
    const auto ka = std::tuple(a.strand_count(), a.crossing_count(), tile_code(a));
    const auto kb = std::tuple(b.strand_count(), b.crossing_count(), tile_code(b));
    CHECK(ka < kb);
    CHECK(classes[i].class_id == static_cast<int>(i));
  }
}

TEST_CASE("rotation preserves class and has the right order") {
  const Catalog& cat = Catalog::get(Geometry::hex);
  for (int f = 0; f < cat.size(); ++f) {
    const TileFace& t = cat.face(static_cast<FaceId>(f));
    CHECK(rotate(t, 0) == t);
    CHECK(rotate(rotate(t, 3), 3) == t);
    CHECK(rotate(t, 6) == t);
    const TileFace c = canonical_face(t);
    CHECK(canonical_face(c) == c);
    for (int k = 0; k < 6; ++k) {
      CHECK(canonical_face(rotate(t, k)) == c);
      CHECK(cat.class_id(cat.id(rotate(t, k))) == cat.class_id(static_cast<FaceId>(f)));
    }
  }
  CHECK(rotate(TileFace::blank(Geometry::hex), 2) == TileFace::blank(Geometry::hex));
}

TEST_CASE("tile codes round-trip and reject malformed input") {
  for (Geometry g : {Geometry::hex, Geometry::rect})
    for (const auto& f : enumerate_faces(g)) CHECK(parse_tile_code(g, tile_code(f)) == f);
  CHECK(tile_code(TileFace::blank(Geometry::hex)) == "-");
  CHECK(tile_code(saturated_hex_tile()) == "(0-3)(1-4)(2-5):ouo");
  CHECK_THROWS_AS(parse_tile_code(Geometry::hex, "(0-6)"), TileError);
  CHECK_THROWS_AS(parse_tile_code(Geometry::hex, "(0-1)(1-2)"), TileError);
  CHECK_THROWS_AS(parse_tile_code(Geometry::hex, "(0-3)(1-4)"), TileError);  // missing crossing bit
  CHECK_THROWS_AS(parse_tile_code(Geometry::rect, "(0-4)"), TileError);
  try {
    parse_tile_code(Geometry::hex, "(0-3)(1-x)");
    FAIL("expected a TileError");
  } catch (const TileError& e) {
    REQUIRE(e.column());
    CHECK(*e.column() == 8);
  }
}

TEST_CASE("exactly two states of the three-diameter tile are alternating") {
  int alternating = 0;
  for (int mask = 0; mask < 8; ++mask) {
    const std::vector<bool> bits{bool(mask & 1), bool(mask & 2), bool(mask & 4)};
    const TileFace t = TileFace::make(Geometry::hex, {{0, 3}, {1, 4}, {2, 5}}, bits);
    // Alternation within the tile: along each strand the two passages differ.
    bool alt = true;
    const auto& cat = Catalog::get(Geometry::hex);
    const FaceId f = cat.id(t);
    for (int s = 0; s < 3; ++s) {
      const auto& order = cat.order_along(f, s);
      REQUIRE(order.size() == 2);
      auto over_at = [&](int x) {
        const Crossing& c = cat.crossing_list(f)[static_cast<std::size_t>(x)];
        return c.s == s ? c.s_over : !c.s_over;
      };
      alt &= over_at(order[0]) != over_at(order[1]);
    }
    CHECK(alt == tile_properties(t).is_alternating_3crossing);
    alternating += alt;
  }
  CHECK(alternating == 2);
  CHECK(tile_properties(saturated_hex_tile()).is_alternating_3crossing);
}

TEST_CASE("smoothing removes one crossing and keeps slot usage") {
  int legal = 0, illegal = 0;
  for (const auto& f : enumerate_faces(Geometry::hex))
    for (int x = 0; x < f.crossing_count(); ++x)
      for (int choice = 0; choice < 2; ++choice) {
        const auto s = try_smooth(f, x, choice);
        if (!s) {
          ++illegal;
          CHECK(f.strand_count() == 3);
          CHECK(f.crossing_count() == 3);
          continue;
        }
        ++legal;
        CHECK(s->crossing_count() == f.crossing_count() - 1);
        CHECK(s->used_mask() == f.used_mask());
      }
  CHECK(legal > 0);
  CHECK(illegal > 0);
  // The saturated tile smooths to a two-crossing class.
  for (int x = 0; x < 3; ++x) {
    bool any = false;
    for (int choice = 0; choice < 2; ++choice)
      if (auto s = try_smooth(saturated_hex_tile(), x, choice)) {
        CHECK(s->crossing_count() == 2);
        any = true;
      }
    CHECK(any);
  }
  // One-crossing two-arc tiles smooth to non-crossing two-arc tiles.
  const TileFace one = parse_tile_code(Geometry::hex, "(0-2)(1-3):o");
  for (int choice = 0; choice < 2; ++choice) {
    const TileFace s = smooth_tile(one, 0, choice);
    CHECK(s.strand_count() == 2);
    CHECK(s.crossing_count() == 0);
  }
  CHECK_THROWS_AS(smooth_tile(TileFace::blank(Geometry::hex), 0, 0), TileError);
}

TEST_CASE("crossing bits cover exactly the interleaving pairs") {
  for (Geometry g : {Geometry::hex, Geometry::rect})
    for (const auto& f : enumerate_faces(g)) {
      const auto ss = f.strands();
      int expected = 0;
      for (std::size_t i = 0; i < ss.size(); ++i)
        for (std::size_t j = i + 1; j < ss.size(); ++j) expected += crosses({ss[i].a, ss[i].b}, {ss[j].a, ss[j].b});
      CHECK(f.crossing_count() == expected);
    }
}

TEST_CASE("standard and band pairings split the two caps pairings") {
  const TileFace caps = parse_tile_code(Geometry::hex, "(0-1)(2-3)");
  const TileFace band = parse_tile_code(Geometry::hex, "(0-3)(1-2)");
  CHECK(is_standard_pairing(caps));
  CHECK_FALSE(tile_properties(caps).is_band_pairing);
  CHECK(tile_properties(band).is_band_pairing);
  CHECK_FALSE(is_standard_pairing(band));
}
