#include "hexmo/diagram.hpp"
#include "hexmo/families.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace hexmo;

namespace {

long ceil_half(long r) { return (r + 1) / 2; }

// Closed forms written out independently of the library.
long saturated_crossings(int r, Setting s) {
  const long q = static_cast<long>(r) * r;
  if (s == Setting::hex_enhanced) return r == 2 ? 3 : 9 * q - 24 * r + 15;
  return 9 * q - 27 * r + 21;
}

long link_components(int r, Setting s) {
  switch (s) {
    case Setting::hex_standard: return r - 1;
    case Setting::hex_enhanced: return r == 2 ? 1 : r + 1;
    case Setting::hex_semi_enhanced: return r <= 3 ? r - 1 : ceil_half(r);
    case Setting::rect: return r - 2;
  }
  return -1;
}

long knot_bound(int r, Setting s) {
  const long q = static_cast<long>(r) * r;
  switch (s) {
    case Setting::hex_standard:
      if (r == 2) return 3;
      if (r == 3) return 19;
      return 9 * q - 28 * r + 23;
    case Setting::hex_semi_enhanced:
      if (r == 2) return 3;
      if (r == 3) return 20;
      return 9 * q - 27 * r + 22 - ceil_half(r);
    case Setting::hex_enhanced:
      if (r == 2) return 3;
      return 9 * q - 25 * r + 15;
    case Setting::rect:
      return r % 2 == 0 ? (r - 2) * (r - 2) - (r - 3) : (r - 2) * (r - 2) - 2;
  }
  return -1;
}

}  // namespace

TEST_CASE("quoted values of the closed forms") {
  CHECK(predicted(5, Setting::hex_standard).saturated_crossings == 111);
  CHECK(predicted(4, Setting::hex_enhanced).saturated_crossings == 63);
  CHECK(predicted(3, Setting::hex_standard).knot_crossing_bound == 19);
  CHECK(predicted(2, Setting::hex_standard).knot_crossing_bound == 3);
  CHECK(predicted(7, Setting::hex_semi_enhanced).knot_crossing_bound == 270);
  CHECK(predicted(5, Setting::hex_enhanced).knot_crossing_bound == 115);
  CHECK(predicted(6, Setting::rect).knot_crossing_bound == 13);
  CHECK(predicted(4, Setting::hex_standard).knot_crossing_bound == 55);
  CHECK(predicted(5, Setting::hex_standard).knot_crossing_bound == 108);
}

TEST_CASE("predictions match the closed forms for r = 4..8") {
  for (int r = 4; r <= 8; ++r)
    for (Setting s : {Setting::hex_standard, Setting::hex_semi_enhanced, Setting::hex_enhanced}) {
      const Prediction p = predicted(r, s);
      CHECK(p.saturated_crossings == saturated_crossings(r, s));
      REQUIRE(p.link_components);
      CHECK(*p.link_components == link_components(r, s));
      CHECK(p.knot_crossing_bound == knot_bound(r, s));
    }
  for (int r = 4; r <= 9; ++r) CHECK(predicted(r, Setting::rect).knot_crossing_bound == knot_bound(r, Setting::rect));
}

TEST_CASE("generated links realize the predictions") {
  for (int r = 2; r <= 8; ++r)
    for (Setting s : {Setting::hex_standard, Setting::hex_semi_enhanced, Setting::hex_enhanced, Setting::rect}) {
      if (!link_supported(r, s)) continue;
      const Mosaic link = gen_link(r, s);
      const Prediction p = predicted(r, s);
      CAPTURE(r);
      CAPTURE(to_string(s));
      CHECK(is_valid(link));
      CHECK(is_saturated(link));
      CHECK(link.crossing_count() == p.saturated_crossings);
      CHECK(oracle::components(link) == p.link_components.value());
      CHECK(oracle::alternating(extract(link)));
    }
  CHECK(oracle::components(gen_link(5, Setting::hex_standard)) == 4);
  CHECK(oracle::components(gen_link(4, Setting::hex_enhanced)) == 5);
  CHECK(oracle::components(gen_link(7, Setting::hex_semi_enhanced)) == 4);
  CHECK(oracle::components(gen_link(6, Setting::rect)) == 4);
}

TEST_CASE("generated knots are reduced, alternating and certified") {
  for (int r = 2; r <= 8; ++r)
    for (Setting s : {Setting::hex_standard, Setting::hex_semi_enhanced, Setting::hex_enhanced, Setting::rect}) {
      if (!knot_supported(r, s)) continue;
      CAPTURE(r);
      CAPTURE(to_string(s));
      const KnotWithSchedule k = gen_knot(r, s);
      const LinkDiagram d = extract(k.knot);
      CHECK(is_valid(k.knot));
      CHECK(oracle::components(k.knot) == 1);
      CHECK(oracle::alternating(d));
      CHECK(oracle::nugatory(d).empty());
      CHECK(certify_crossing_number(d) == CrossingCertificate{true, static_cast<int>(knot_bound(r, s))});
      CHECK(apply_schedule(k.parent, k.schedule) == k.knot);
    }
}

TEST_CASE("schedules merge distinct components and respect their roles") {
  for (int r = 4; r <= 7; ++r)
    for (Setting s : {Setting::hex_standard, Setting::hex_semi_enhanced, Setting::hex_enhanced}) {
      const KnotWithSchedule k = gen_knot(r, s);
      const int before = oracle::components(k.parent);
      CHECK(k.schedule.size() == static_cast<std::size_t>(before - 1));
      Mosaic m = k.parent;
      for (const ScheduleStep& st : k.schedule) {
        const int c0 = oracle::components(m);
        m = apply_schedule(m, {st});
        if (st.role != ScheduleRole::nugatory_removal) CHECK(oracle::components(m) == c0 - 1);
        if (s != Setting::hex_enhanced && st.role == ScheduleRole::central_merge)
          CHECK(m.board().classify(st.cell) == CellClass::central);
      }
    }
}

TEST_CASE("unsupported requests are rejected") {
  CHECK_THROWS_AS(gen_link(1, Setting::hex_standard), UnsupportedError);
  CHECK_THROWS_AS(gen_link(5, Setting::rect), UnsupportedError);
  CHECK_THROWS_AS(gen_knot(3, Setting::rect), UnsupportedError);
}
