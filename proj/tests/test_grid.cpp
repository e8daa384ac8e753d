#include "hexmo/grid.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

using namespace hexmo;

namespace {

// All cube coordinates with max-norm below r, independent of the board class.
std::vector<HexCell> brute_hex(int r) {
  std::vector<HexCell> out;
  for (int x = -(r - 1); x <= r - 1; ++x)
    for (int y = -(r - 1); y <= r - 1; ++y) {
      const int z = -x - y;
      if (std::abs(z) <= r - 1) out.push_back({x, y, z});
    }
  return out;
}

int norm(const HexCell& h) { return std::max({std::abs(h.x), std::abs(h.y), std::abs(h.z)}); }

// Cube steps per slot, clockwise from NE with rows growing downward.
const std::array<HexCell, 6> kDirs{{{1, 0, -1}, {1, -1, 0}, {0, -1, 1}, {-1, 0, 1}, {-1, 1, 0}, {0, 1, -1}}};

}  // namespace

TEST_CASE("hex cell counts match brute-force enumeration") {
  for (int r = 1; r <= 9; ++r) {
    const auto cells = board_cells(BoardSpec::hex(r));
    CHECK(cells.size() == brute_hex(r).size());
    CHECK(static_cast<int>(cells.size()) == 3 * r * r - 3 * r + 1);
    std::set<std::tuple<int, int, int>> seen;
    for (const auto& c : cells) {
      const auto& h = std::get<HexCell>(c);
      CHECK(h.x + h.y + h.z == 0);
      CHECK(norm(h) <= r - 1);
      seen.insert({h.x, h.y, h.z});
    }
    CHECK(seen.size() == cells.size());
  }
  CHECK(board_cells(BoardSpec::hex(2)).size() == 7);
  CHECK(board_cells(BoardSpec::hex(4)).size() == 37);
  CHECK(board_cells(BoardSpec::rect(6)).size() == 36);
}

TEST_CASE("corona t holds 6t cells") {
  const int r = 6;
  std::map<int, int> per;
  for (const auto& h : brute_hex(r)) ++per[norm(h)];
  const Board b(BoardSpec::hex(r));
  std::map<int, int> got;
  for (CellId c = 0; c < b.size(); ++c) ++got[b.corona(c)];
  CHECK(got == per);
  for (int t = 1; t < r; ++t) CHECK(got[t] == 6 * t);
}

TEST_CASE("zero radius is rejected") {
  CHECK_THROWS_AS(board_cells(BoardSpec::hex(0)), BoardError);
  CHECK_THROWS_AS(board_cells(BoardSpec::rect(0)), BoardError);
}

TEST_CASE("row lengths and row-major order") {
  const Board b(BoardSpec::hex(4));
  CHECK(b.row_count() == 7);
  CHECK(b.row_length(1) == 4);
  CHECK(b.row_length(4) == 7);
  for (int i = 1; i <= 7; ++i) CHECK(b.row_length(i) == (i <= 4 ? 4 + i - 1 : 3 * 4 - 1 - i));
  // Rows run top to bottom, columns left to right in the drawing.
  for (CellId c = 1; c < b.size(); ++c) {
    const Point p = b.center(c - 1), q = b.center(c);
    CHECK((q.y > p.y + 1e-9 || (std::abs(q.y - p.y) < 1e-9 && q.x > p.x)));
  }
  CHECK_THROWS_AS(b.from_row_col(1, 5), BoardError);
  CHECK_THROWS_AS(b.from_row_col(8, 1), BoardError);
}

TEST_CASE("row/col conversion round-trips") {
  for (int r = 1; r <= 7; ++r)
    for (const BoardSpec spec : {BoardSpec::hex(r), BoardSpec::rect(r)})
      for (const auto& c : board_cells(spec)) {
        auto [i, j] = to_row_col(c, spec);
        CHECK(from_row_col(i, j, spec) == c);
      }
}

TEST_CASE("classification of named cells") {
  const BoardSpec s4 = BoardSpec::hex(4);
  auto cls = [&](int i, int j) { return classify_cell(from_row_col(i, j, s4), s4); };
  CHECK(cls(1, 1) == CellClass::boundary_corner);
  CHECK(cls(1, 4) == CellClass::boundary_corner);
  CHECK(cls(4, 1) == CellClass::boundary_corner);
  CHECK(cls(7, 4) == CellClass::boundary_corner);
  CHECK(cls(1, 2) == CellClass::boundary_edge);
  CHECK(cls(1, 3) == CellClass::boundary_edge);
  CHECK(cls(4, 4) == CellClass::central);
  CHECK(cls(2, 2) == CellClass::penultimate);
  const BoardSpec s2 = BoardSpec::hex(2);
  CHECK(classify_cell(HexCell{0, 0, 0}, s2) == CellClass::central);
}

TEST_CASE("classification partitions the board by corona") {
  for (int r = 1; r <= 8; ++r) {
    const Board b(BoardSpec::hex(r));
    int corners = 0;
    for (CellId c = 0; c < b.size(); ++c) {
      const auto& h = std::get<HexCell>(b.coord(c));
      const int t = norm(h);
      const CellClass k = b.classify(c);
      if (r == 1) {
        CHECK(b.is_boundary(c));
      } else if (t == r - 1) {
        const int big = (std::abs(h.x) == r - 1) + (std::abs(h.y) == r - 1) + (std::abs(h.z) == r - 1);
        CHECK(k == (big >= 2 ? CellClass::boundary_corner : CellClass::boundary_edge));
        corners += k == CellClass::boundary_corner;
      } else if (b.interior().size() == 1) {
        CHECK(k == CellClass::central);
      } else {
        CHECK(k == (t == r - 2 ? CellClass::penultimate : CellClass::central));
      }
    }
    if (r >= 2) CHECK(corners == 6);
  }
}

TEST_CASE("neighbors agree with cube steps and are symmetric") {
  for (int r = 1; r <= 6; ++r) {
    const BoardSpec spec = BoardSpec::hex(r);
    const Board b(spec);
    for (CellId c = 0; c < b.size(); ++c) {
      const auto& h = std::get<HexCell>(b.coord(c));
      int on = 0;
      for (int k = 0; k < 6; ++k) {
        const HexCell t{h.x + kDirs[k].x, h.y + kDirs[k].y, h.z + kDirs[k].z};
        const CellId n = b.neighbor(c, k);
        if (norm(t) > r - 1) {
          CHECK(n == kOffBoard);
          continue;
        }
        ++on;
        REQUIRE(n != kOffBoard);
        CHECK(std::get<HexCell>(b.coord(n)) == t);
        CHECK(b.neighbor(n, (k + 3) % 6) == c);
        CHECK(b.canonical({c, k}) == b.canonical({n, (k + 3) % 6}));
      }
      if (b.classify(c) == CellClass::boundary_corner && r == 4) CHECK(on == 3);
      if (h == HexCell{0, 0, 0} && r >= 2) CHECK(on == 6);
    }
  }
  const BoardSpec rs = BoardSpec::rect(4);
  const auto ns = neighbors(RectCell{1, 1}, rs);
  REQUIRE(ns.size() == 4);
  CHECK(!ns[0].second);
  CHECK(ns[1].second == CellCoord{RectCell{1, 2}});
  CHECK(ns[2].second == CellCoord{RectCell{2, 1}});
  CHECK(!ns[3].second);
}

TEST_CASE("boundary ring runs clockwise from the first cell") {
  for (int r = 2; r <= 6; ++r)
    for (const BoardSpec spec : {BoardSpec::hex(r), BoardSpec::rect(r)}) {
      const Board b(spec);
      const auto& ring = b.ring();
      CHECK(ring.front() == b.from_row_col(1, 1));
      for (std::size_t i = 0; i < ring.size(); ++i) {
        const CellId a = ring[i], z = ring[(i + 1) % ring.size()];
        bool adjacent = false;
        for (int k = 0; k < b.slots(); ++k) adjacent |= b.neighbor(a, k) == z;
        CHECK(adjacent);
      }
      // Clockwise in drawing coordinates (y down): second cell lies to the right.
      CHECK(b.center(ring[1]).x > b.center(ring[0]).x);
    }
}
