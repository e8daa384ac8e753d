#include "hexmo/families.hpp"
#include "hexmo/mosaic.hpp"
#include "hexmo/search.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace hexmo;

namespace {

Mosaic with_setting(const Mosaic& m, Setting s) {
  Mosaic out(BoardSpec{m.spec().geometry, m.spec().r, s});
  for (CellId c = 0; c < m.size(); ++c) out.set(c, m.at(c));
  return out;
}

// Faces of the catalog that keep every strand on the board at cell c.
std::vector<FaceId> on_board_faces(const Board& b, CellId c) {
  const Catalog& cat = Catalog::get(b.geometry());
  std::vector<FaceId> out;
  for (int f = 0; f < cat.size(); ++f) {
    bool ok = true;
    for (int k = 0; k < b.slots(); ++k)
      if (b.neighbor(c, k) == kOffBoard && cat.used(static_cast<FaceId>(f)) >> k & 1U) ok = false;
    if (ok) out.push_back(static_cast<FaceId>(f));
  }
  return out;
}

}  // namespace

TEST_CASE("the trefoil 2-mosaic is valid in every hexagonal setting") {
  const Mosaic trefoil = gen_knot(2, Setting::hex_standard).knot;
  for (Setting s : {Setting::hex_standard, Setting::hex_semi_enhanced, Setting::hex_enhanced})
    CHECK(is_valid(with_setting(trefoil, s)));
  CHECK(trefoil.crossing_count() == 3);
}

TEST_CASE("a dangling connection point is named") {
  Mosaic m = gen_knot(2, Setting::hex_standard).knot;
  const CellId c = m.board().from_row_col(1, 1);
  const auto e = edit_replace(m, c, TileFace::blank(Geometry::hex));
  REQUIRE_FALSE(e.ok());
  std::set<EdgeRef> named;
  for (const auto& v : e.violations) named.insert(v.where);
  for (int k = 0; k < 6; ++k)
    if (m.face(c).uses(k)) CHECK(named.count(m.board().canonical({c, k})) == 1);
}

TEST_CASE("setting rules on the boundary") {
  const Mosaic link = gen_link(4, Setting::hex_enhanced);
  REQUIRE(is_valid(link));
  const auto std_view = validate(with_setting(link, Setting::hex_standard));
  REQUIRE_FALSE(std_view.empty());
  bool tile_level = false;
  for (const auto& v : std_view) tile_level |= v.where.slot == -1 && link.board().is_boundary(v.where.cell);
  CHECK(tile_level);
  CHECK_FALSE(is_valid(with_setting(link, Setting::hex_semi_enhanced)));

  // Band pairing on the boundary: legal in semi-enhanced, not in standard.
  const Mosaic semi = gen_link(7, Setting::hex_semi_enhanced);
  bool has_band = false;
  for (CellId c : semi.board().ring()) has_band |= semi.catalog().properties(semi.at(c)).is_band_pairing;
  CHECK(has_band);
  CHECK(is_valid(semi));
  CHECK_FALSE(is_valid(with_setting(semi, Setting::hex_standard)));
}

TEST_CASE("validate agrees with the connectivity oracle on random faces") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 3000; ++trial) {
    const BoardSpec spec = trial % 2 ? BoardSpec::hex(2, Setting::hex_enhanced) : BoardSpec::rect(3);
    Mosaic m(spec);
    const Board& b = m.board();
    for (CellId c = 0; c < b.size(); ++c) {
      const auto faces = on_board_faces(b, c);
      // Mostly blank so that valid mosaics show up too.
      m.set(c, rng() % 3 == 0 ? faces[rng() % faces.size()] : m.catalog().blank());
    }
    const bool rect_crossing_on_ring = [&] {
      if (spec.geometry != Geometry::rect) return false;
      for (CellId c : b.ring())
        if (m.catalog().crossings(m.at(c)) > 0) return true;
      return false;
    }();
    CHECK(is_valid(m) == (oracle::connected(m) && !rect_crossing_on_ring));
  }
}

TEST_CASE("closure counts match brute force on 2-mosaics") {
  const Board& b = *Board::get(BoardSpec::hex(2, Setting::hex_enhanced));
  const Catalog& cat = Catalog::get(Geometry::hex);
  const CellId center = b.interior().front();
  std::vector<std::vector<FaceId>> ring_faces;
  for (CellId c : b.ring()) ring_faces.push_back(on_board_faces(b, c));
  for (Setting s : {Setting::hex_standard, Setting::hex_semi_enhanced, Setting::hex_enhanced})
    for (int f = 0; f < cat.size(); ++f) {
      Mosaic interior(BoardSpec::hex(2, s));
      interior.set(center, static_cast<FaceId>(f));
      std::size_t brute = 0;
      std::vector<std::size_t> idx(ring_faces.size(), 0);
      while (true) {
        Mosaic m = interior;
        bool legal = true;
        for (std::size_t i = 0; i < idx.size(); ++i) {
          const FaceId g = ring_faces[i][idx[i]];
          legal &= setting_allows(s, b, b.ring()[i], g);
          m.set(b.ring()[i], g);
        }
        if (legal && oracle::connected(m)) ++brute;
        std::size_t i = 0;
        while (i < idx.size() && ++idx[i] == ring_faces[i].size()) idx[i++] = 0;
        if (i == idx.size()) break;
      }
      CHECK(count_boundary_closures(interior) == brute);
      for (const Mosaic& m : boundary_closures(interior)) CHECK(is_valid(m));
    }
}

TEST_CASE("saturated standard interiors admit exactly two closures") {
  for (int r = 2; r <= 8; ++r) {
    const Mosaic interior = saturated_interior(BoardSpec::hex(r));
    CHECK(count_boundary_closures(interior) == 2);
  }
}

TEST_CASE("enhanced closures include one with a crossing on every edge tile of three sides") {
  const Mosaic interior = saturated_interior(BoardSpec::hex(5, Setting::hex_enhanced));
  int best = 0;
  ClosureOptions opt;
  opt.projections_only = true;
  for_each_boundary_closure(interior, opt, [&](const Mosaic& m) {
    int x = 0;
    for (CellId c : m.board().ring()) x += m.catalog().crossings(m.at(c));
    best = std::max(best, x);
    return true;
  });
  CHECK(best == 3 * (5 - 2));
}

TEST_CASE("the all-blank interior closes with the all-blank ring") {
  const Mosaic blank(BoardSpec::hex(4));
  const auto closures = boundary_closures(blank);
  CHECK(std::find(closures.begin(), closures.end(), blank) != closures.end());
}

TEST_CASE("saturation predicate") {
  CHECK(is_saturated(gen_link(5, Setting::hex_standard)));
  CHECK_FALSE(is_saturated(gen_knot(5, Setting::hex_standard).knot));
  for (int r = 2; r <= 5; ++r) CHECK_FALSE(is_saturated(Mosaic(BoardSpec::hex(r))));
  CHECK(is_saturated(gen_link(6, Setting::rect)));
  CHECK(is_saturated(gen_link(5, Setting::hex_enhanced)));
}

TEST_CASE("edits") {
  const Mosaic link = gen_link(5, Setting::hex_standard);
  const Board& b = link.board();
  const CellId center = b.from_row_col(5, 5);
  const LinkDiagram d = extract(link);
  // A legal smoothing at a crossing between two components merges them.
  bool tested = false;
  for (const auto& x : d.crossings) {
    if (x.comp_s == x.comp_t) continue;
    for (int choice = 0; choice < 2; ++choice) {
      if (!try_smooth(link.face(x.cell), x.local, choice)) continue;
      const auto e = edit_smooth(link, x.cell, x.local, choice);
      CHECK(e.ok());
      CHECK(extract(e.mosaic).component_count() == d.component_count() - 1);
      tested = true;
    }
    if (tested) break;
  }
  CHECK(tested);
  const auto blanked = edit_replace(link, center, TileFace::blank(Geometry::hex));
  CHECK_FALSE(blanked.ok());
  // Every legal smoothing keeps the mosaic valid.
  for (CellId c : b.interior())
    for (int x = 0; x < 3; ++x)
      for (int choice = 0; choice < 2; ++choice)
        if (try_smooth(link.face(c), x, choice)) CHECK(edit_smooth(link, c, x, choice).ok());
}

TEST_CASE("semi-enhanced band swap on the boundary stays valid") {
  const Mosaic link = gen_link(4, Setting::hex_semi_enhanced);
  for (CellId c : link.board().ring()) {
    const TileFace f = link.face(c);
    if (!is_standard_pairing(f)) continue;
    // The band pairing of the same four slots.
    for (const auto& cand : enumerate_faces(Geometry::hex)) {
      if (cand.used_mask() != f.used_mask() || !tile_properties(cand).is_band_pairing) continue;
      CHECK(edit_replace(link, c, cand).ok());
    }
  }
}
