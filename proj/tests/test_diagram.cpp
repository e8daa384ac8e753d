#include "hexmo/diagram.hpp"
#include "hexmo/families.hpp"
#include "hexmo/search.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <map>

using namespace hexmo;

namespace {

std::vector<Mosaic> random_mosaics(const BoardSpec& spec, int n, std::uint64_t seed) {
  std::vector<Mosaic> out;
  for (int i = 0; i < n; ++i) {
    auto rng = sample_rng(seed, static_cast<std::uint64_t>(i));
    out.push_back(sample_mosaic(spec, rng));
  }
  return out;
}

const std::vector<BoardSpec> kSpecs{BoardSpec::hex(3), BoardSpec::hex(4, Setting::hex_enhanced),
                                    BoardSpec::hex(4, Setting::hex_semi_enhanced), BoardSpec::rect(5)};

}  // namespace

TEST_CASE("extract on known mosaics") {
  const LinkDiagram t = extract(gen_knot(2, Setting::hex_standard).knot);
  CHECK(t.component_count() == 1);
  CHECK(t.crossing_count() == 3);
  CHECK(extract(gen_link(3, Setting::hex_standard)).component_count() == 2);
  CHECK(extract(Mosaic(BoardSpec::hex(4))).component_count() == 0);
}

TEST_CASE("components and crossings agree with independent counts") {
  for (const auto& spec : kSpecs)
    for (const Mosaic& m : random_mosaics(spec, 150, 3)) {
      const LinkDiagram d = extract(m);
      CHECK(d.component_count() == oracle::components(m));
      CHECK(d.crossing_count() == m.crossing_count());
      // Every (cell, strand) lies on exactly one walk.
      std::map<std::pair<CellId, int>, int> seen;
      for (const auto& comp : d.components)
        for (const auto& st : comp.walk) ++seen[{st.cell, st.strand}];
      int strands = 0;
      for (CellId c = 0; c < m.size(); ++c) strands += m.face(c).strand_count();
      CHECK(static_cast<int>(seen.size()) == strands);
      for (auto& [k, v] : seen) CHECK(v == 1);
    }
}

TEST_CASE("Gauss codes: each label twice, once over and once under") {
  for (const auto& spec : kSpecs)
    for (const Mosaic& m : random_mosaics(spec, 60, 5)) {
      const LinkDiagram d = extract(m);
      std::map<int, std::pair<int, int>> count;  // label -> (over, under)
      for (const auto& comp : d.components)
        for (const auto& p : comp.passages) (p.over ? count[p.crossing].first : count[p.crossing].second)++;
      CHECK(static_cast<int>(count.size()) == d.crossing_count());
      for (auto& [k, v] : count) CHECK(v == std::pair(1, 1));
      const std::string g = gauss_code(d);
      int plus = 0, minus = 0;
      for (char ch : g) plus += ch == '+', minus += ch == '-';
      CHECK(plus == d.crossing_count());
      CHECK(minus == d.crossing_count());
    }
}

TEST_CASE("nugatory crossings agree with the definition-level oracle") {
  for (const auto& spec : kSpecs)
    for (const Mosaic& m : random_mosaics(spec, 200, 7)) {
      const LinkDiagram d = extract(m);
      CHECK(nugatory_crossings(d) == oracle::nugatory(d));
      CHECK(is_alternating(d) == oracle::alternating(d));
    }
}

TEST_CASE("a single kink is nugatory") {
  // One crossing tile on a 3x3 rectangular board closed into an unknot with a kink.
  Mosaic m(BoardSpec::rect(3));
  const Board& b = m.board();
  auto put = [&](int row, int col, const char* code) { m.set_face(b.from_row_col(row, col), parse_tile_code(Geometry::rect, code)); };
  put(1, 1, "(1-2)");
  put(1, 2, "(2-3)");
  put(2, 1, "(0-1)");
  put(2, 2, "(0-2)(1-3):o");
  put(2, 3, "(2-3)");
  put(3, 2, "(0-1)");
  put(3, 3, "(0-3)");
  REQUIRE(is_valid(m));
  const LinkDiagram d = extract(m);
  CHECK(d.component_count() == 1);
  CHECK(nugatory_crossings(d) == std::vector<int>{0});
  CHECK_FALSE(certify_crossing_number(d).certified);
}

TEST_CASE("the standard r=3 schedule passes through a single nugatory crossing") {
  const KnotWithSchedule k = gen_knot(3, Setting::hex_standard);
  REQUIRE(k.schedule.size() == 2);
  const Mosaic middle = apply_schedule(k.parent, {k.schedule.front()});
  const LinkDiagram d = extract(middle);
  CHECK(d.component_count() == 1);
  CHECK(nugatory_crossings(d).size() == 1);
  CHECK(k.schedule.back().role == ScheduleRole::nugatory_removal);
}

TEST_CASE("alternation and certification") {
  for (int r = 2; r <= 8; ++r) CHECK(is_alternating(extract(gen_link(r, Setting::hex_standard))));
  const Mosaic l5 = gen_link(5, Setting::hex_standard);
  Mosaic flipped = l5;
  const CellId center = l5.board().from_row_col(5, 5);
  flipped.set_face(center, l5.face(center).flipped(0));
  CHECK_FALSE(is_alternating(extract(flipped)));
  CHECK(certify_crossing_number(extract(gen_knot(5, Setting::hex_standard).knot)) == CrossingCertificate{true, 108});
  CHECK(certify_crossing_number(extract(gen_knot(3, Setting::hex_standard).knot)) == CrossingCertificate{true, 19});
  CHECK(nugatory_crossings(extract(gen_knot(5, Setting::hex_standard).knot)).empty());
}

TEST_CASE("smoothing changes components as expected") {
  for (const auto& spec : kSpecs)
    for (const Mosaic& m : random_mosaics(spec, 40, 9)) {
      const LinkDiagram d = extract(m);
      for (const auto& x : d.crossings)
        for (int choice = 0; choice < 2; ++choice) {
          if (!try_smooth(m.face(x.cell), x.local, choice)) continue;
          const int after = extract(edit_smooth(m, x.cell, x.local, choice).mosaic).component_count();
          if (x.comp_s != x.comp_t)
            CHECK(after == d.component_count() - 1);
          else
            CHECK((after == d.component_count() || after == d.component_count() + 1));
        }
    }
}

TEST_CASE("crossing changes never change the component count") {
  std::mt19937_64 rng(21);
  for (const auto& spec : kSpecs)
    for (const Mosaic& m : random_mosaics(spec, 40, 13)) {
      Mosaic v = m;
      for (CellId c = 0; c < m.size(); ++c) {
        TileFace f = m.face(c);
        for (int x = 0; x < f.crossing_count(); ++x)
          if (rng() & 1U) f = f.flipped(x);
        v.set_face(c, f);
      }
      CHECK(extract(v).component_count() == extract(m).component_count());
    }
}
