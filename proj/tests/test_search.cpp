#include "hexmo/diagram.hpp"
#include "hexmo/families.hpp"
#include "hexmo/search.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace hexmo;

namespace {

bool same(const SearchResult& a, const SearchResult& b) {
  return a.max_crossings == b.max_crossings && a.max_reduced == b.max_reduced && a.max_certified == b.max_certified &&
         a.witness == b.witness && a.raw_witness == b.raw_witness && a.mosaics == b.mosaics && a.knots == b.knots &&
         a.exceeded_bound == b.exceeded_bound;
}

}  // namespace

TEST_CASE("spiral order starts at the center and ends on the ring") {
  const Board& b = *Board::get(BoardSpec::hex(4));
  const auto order = spiral_order(b);
  CHECK(order.size() == static_cast<std::size_t>(b.size()));
  for (std::size_t i = 1; i < order.size(); ++i) CHECK(b.depth(order[i - 1]) >= b.depth(order[i]));
}

TEST_CASE("sampled mosaics are valid and reproducible") {
  for (const BoardSpec spec : {BoardSpec::hex(3), BoardSpec::hex(5, Setting::hex_enhanced), BoardSpec::rect(6)})
    for (std::uint64_t i = 0; i < 100; ++i) {
      auto a = sample_rng(5, i), b = sample_rng(5, i);
      const Mosaic m = sample_mosaic(spec, a);
      CHECK(is_valid(m));
      CHECK(sample_mosaic(spec, b) == m);
    }
  auto rng = sample_rng(1, 0);
  const Mosaic k = sample_knot(BoardSpec::hex(4), rng, 5);
  CHECK(oracle::components(k) == 1);
  CHECK(k.crossing_count() >= 5);
}

TEST_CASE("exhaustive maxima") {
  SearchOptions opt;
  opt.mode = SearchMode::exhaustive;
  const SearchResult h = search_max_knot(2, Setting::hex_standard, opt);
  CHECK(h.max_crossings == 3);
  CHECK(h.max_reduced == 3);
  CHECK(h.max_certified == 3);
  CHECK_FALSE(h.exceeded_bound);
  REQUIRE(h.witness);
  CHECK(certify_crossing_number(extract(*h.witness)).crossings == 3);

  const SearchResult r = search_max_knot(4, Setting::rect, opt);
  CHECK(r.max_reduced == 3);
  CHECK(r.max_certified == 3);
  CHECK(r.max_crossings == 4);  // a chain of kinks, every crossing nugatory
  REQUIRE(r.raw_witness);
  const LinkDiagram d = extract(*r.raw_witness);
  CHECK(static_cast<int>(oracle::nugatory(d).size()) == d.crossing_count());
  CHECK_FALSE(r.exceeded_bound);
}

TEST_CASE("serial and parallel searches agree") {
  SearchOptions opt;
  opt.mode = SearchMode::randomized;
  opt.samples = 600;
  opt.seed = 9;
  opt.parallel = false;
  const SearchResult s = search_max_knot(3, Setting::hex_standard, opt);
  opt.parallel = true;
  const SearchResult p = search_max_knot(3, Setting::hex_standard, opt);
  CHECK(same(s, p));
  CHECK(s.max_reduced <= 19);

  opt.mode = SearchMode::exhaustive;
  opt.parallel = false;
  const SearchResult es = search_max_knot(2, Setting::hex_enhanced, opt);
  opt.parallel = true;
  CHECK(same(es, search_max_knot(2, Setting::hex_enhanced, opt)));
}

TEST_CASE("saturated smoothing at r = 3 stays within the bounds") {
  SearchOptions opt;
  opt.mode = SearchMode::saturated_smoothing;
  for (Setting s : {Setting::hex_standard, Setting::hex_semi_enhanced, Setting::hex_enhanced}) {
    const SearchResult r = search_max_knot(3, s, opt);
    CHECK_FALSE(r.exceeded_bound);
    CHECK(r.max_reduced == r.bound);
  }
}

TEST_CASE("size guards") {
  SearchOptions opt;
  opt.mode = SearchMode::exhaustive;
  CHECK_THROWS_AS(search_max_knot(3, Setting::hex_standard, opt), SearchError);
  CHECK_THROWS_AS(search_max_knot(5, Setting::rect, opt), SearchError);
  opt.mode = SearchMode::saturated_smoothing;
  CHECK_THROWS_AS(search_max_knot(4, Setting::hex_standard, opt), SearchError);
  CHECK(parse_search_mode("saturated-smoothing") == SearchMode::saturated_smoothing);
  CHECK_THROWS(parse_search_mode("greedy"));
}
