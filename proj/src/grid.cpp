#include "hexmo/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

namespace hexmo {

namespace {

// Axial (dq, dz) step per hex slot, clockwise from NE.
constexpr std::array<std::pair<int, int>, 6> kHexStep = {{{1, -1}, {1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}}};
// (drow, dcol) per rect slot N, E, S, W.
constexpr std::array<std::pair<int, int>, 4> kRectStep = {{{-1, 0}, {0, 1}, {1, 0}, {0, -1}}};

int hex_norm(const HexCell& h) { return std::max({std::abs(h.x), std::abs(h.y), std::abs(h.z)}); }

double slot_angle(Geometry g, int slot) {
  const double deg = g == Geometry::hex ? 60.0 - 60.0 * slot : 90.0 - 90.0 * slot;
  return deg * std::numbers::pi / 180.0;
}

}  // namespace

std::string_view to_string(Geometry g) { return g == Geometry::hex ? "hex" : "rect"; }

std::string_view to_string(Setting s) {
  switch (s) {
    case Setting::rect: return "rect";
    case Setting::hex_standard: return "hex-standard";
    case Setting::hex_semi_enhanced: return "hex-semi-enhanced";
    case Setting::hex_enhanced: return "hex-enhanced";
  }
  return "?";
}

std::string_view to_string(CellClass c) {
  switch (c) {
    case CellClass::boundary_corner: return "boundary-corner";
    case CellClass::boundary_edge: return "boundary-edge";
    case CellClass::penultimate: return "penultimate";
    case CellClass::central: return "central";
  }
  return "?";
}

Geometry parse_geometry(std::string_view text) {
  if (text == "hex") return Geometry::hex;
  if (text == "rect") return Geometry::rect;
  throw BoardError("unknown geometry '" + std::string(text) + "'");
}

Setting parse_setting(std::string_view text) {
  for (Setting s : {Setting::rect, Setting::hex_standard, Setting::hex_semi_enhanced, Setting::hex_enhanced})
    if (to_string(s) == text) return s;
  // short aliases used on the command line
  if (text == "standard") return Setting::hex_standard;
  if (text == "semi" || text == "semi-enhanced") return Setting::hex_semi_enhanced;
  if (text == "enhanced") return Setting::hex_enhanced;
  throw BoardError("unknown setting '" + std::string(text) + "'");
}

Geometry geometry_of(Setting s) { return s == Setting::rect ? Geometry::rect : Geometry::hex; }

Board::Board(BoardSpec spec) : spec_(spec) {
  if (spec.r < 1) throw BoardError("board radius must be >= 1");
  if ((spec.geometry == Geometry::rect) != (spec.setting == Setting::rect))
    throw BoardError("setting " + std::string(to_string(spec.setting)) + " does not match geometry " +
                     std::string(to_string(spec.geometry)));
  const int r = spec.r;
  const int n = slots();

  if (spec.geometry == Geometry::hex) {
    for (int z = -(r - 1); z <= r - 1; ++z) {
      row_start_.push_back(static_cast<int>(coords_.size()));
      const int qmin = std::max(-(r - 1), -(r - 1) - z);
      const int qmax = std::min(r - 1, r - 1 - z);
      for (int q = qmin; q <= qmax; ++q) {
        HexCell h{q, -q - z, z};
        rowcol_.emplace_back(z + r, q - qmin + 1);
        depth_.push_back(r - 1 - hex_norm(h));
        coords_.emplace_back(h);
      }
    }
  } else {
    for (int row = 1; row <= r; ++row) {
      row_start_.push_back(static_cast<int>(coords_.size()));
      for (int col = 1; col <= r; ++col) {
        coords_.emplace_back(RectCell{row, col});
        rowcol_.emplace_back(row, col);
        depth_.push_back(std::min({row - 1, col - 1, r - row, r - col}));
      }
    }
  }

  nbr_.assign(coords_.size() * static_cast<std::size_t>(n), kOffBoard);
  for (CellId c = 0; c < size(); ++c) {
    for (int k = 0; k < n; ++k) {
      CellCoord target;
      if (const auto* h = std::get_if<HexCell>(&coords_[c])) {
        const int q = h->x + kHexStep[k].first;
        const int z = h->z + kHexStep[k].second;
        target = HexCell{q, -q - z, z};
      } else {
        const auto& rc = std::get<RectCell>(coords_[c]);
        target = RectCell{rc.row + kRectStep[k].first, rc.col + kRectStep[k].second};
      }
      if (auto t = find(target)) nbr_[static_cast<std::size_t>(c * n + k)] = *t;
    }
  }

  for (CellId c = 0; c < size(); ++c)
    if (depth_[c] > 0) interior_.push_back(c);

  class_.resize(coords_.size());
  for (CellId c = 0; c < size(); ++c) {
    if (depth_[c] == 0) {
      bool corner = false;
      if (const auto* h = std::get_if<HexCell>(&coords_[c])) {
        const int m = r - 1;
        const int hits = (std::abs(h->x) == m) + (std::abs(h->y) == m) + (std::abs(h->z) == m);
        corner = hits >= 2;
      } else {
        const auto& rc = std::get<RectCell>(coords_[c]);
        corner = (rc.row == 1 || rc.row == r) && (rc.col == 1 || rc.col == r);
      }
      class_[c] = corner ? CellClass::boundary_corner : CellClass::boundary_edge;
    } else if (depth_[c] == 1 && interior_.size() > 1) {
      class_[c] = CellClass::penultimate;
    } else {
      // A lone interior tile (hex r = 2, rect r = 3) counts as central.
      class_[c] = CellClass::central;
    }
  }

  // Boundary ring, clockwise from T_{1,1}.
  ring_pos_.assign(coords_.size(), -1);
  const CellId start = 0;
  ring_.push_back(start);
  ring_pos_[start] = 0;
  if (r > 1) {
    CellId prev = start;
    CellId cur = neighbor(start, 1);  // east along the top row
    while (cur != start) {
      ring_pos_[cur] = static_cast<int>(ring_.size());
      ring_.push_back(cur);
      CellId next = kOffBoard;
      for (int k = 0; k < n; ++k) {
        const CellId t = neighbor(cur, k);
        if (t == kOffBoard || t == prev || depth_[t] != 0) continue;
        if (t == start || ring_pos_[t] < 0) {
          next = t;
          if (t != start) break;
        }
      }
      if (next == kOffBoard) throw BoardError("internal: boundary ring is not a cycle");
      prev = cur;
      cur = next;
    }
  }

  rot1_.resize(coords_.size());
  for (CellId c = 0; c < size(); ++c) {
    CellCoord img;
    if (const auto* h = std::get_if<HexCell>(&coords_[c])) {
      img = HexCell{-h->z, -h->x, -h->y};
    } else {
      const auto& rc = std::get<RectCell>(coords_[c]);
      img = RectCell{rc.col, r + 1 - rc.row};
    }
    rot1_[c] = at(img);
  }
}

std::shared_ptr<const Board> Board::get(const BoardSpec& spec) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, std::shared_ptr<const Board>> cache;
  const auto key = std::make_tuple(static_cast<int>(spec.geometry), spec.r, static_cast<int>(spec.setting));
  std::lock_guard lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto board = std::make_shared<const Board>(spec);
  cache.emplace(key, board);
  return board;
}

std::optional<CellId> Board::find(const CellCoord& c) const {
  const int r = spec_.r;
  if (const auto* h = std::get_if<HexCell>(&c)) {
    if (spec_.geometry != Geometry::hex) return std::nullopt;
    if (h->x + h->y + h->z != 0 || hex_norm(*h) > r - 1) return std::nullopt;
    const int row = h->z + r;
    const int qmin = std::max(-(r - 1), -(r - 1) - h->z);
    return row_start_.empty() ? std::nullopt
                              : std::optional<CellId>(row_start_[static_cast<std::size_t>(row - 1)] + h->x - qmin);
  }
  const auto& rc = std::get<RectCell>(c);
  if (spec_.geometry != Geometry::rect) return std::nullopt;
  if (rc.row < 1 || rc.row > r || rc.col < 1 || rc.col > r) return std::nullopt;
  return (rc.row - 1) * r + (rc.col - 1);
}

CellId Board::at(const CellCoord& c) const {
  if (auto id = find(c)) return *id;
  throw BoardError("cell " + to_string(c) + " is not on the board");
}

int Board::row_length(int row) const {
  if (row < 1 || row > row_count()) throw BoardError("row index out of range");
  const int begin = row_start_[static_cast<std::size_t>(row - 1)];
  const int end = row == row_count() ? size() : row_start_[static_cast<std::size_t>(row)];
  return end - begin;
}

CellId Board::from_row_col(int row, int col) const {
  if (row < 1 || row > row_count()) throw BoardError("row " + std::to_string(row) + " out of range");
  if (col < 1 || col > row_length(row))
    throw BoardError("column " + std::to_string(col) + " out of range for row " + std::to_string(row));
  return row_start_[static_cast<std::size_t>(row - 1)] + col - 1;
}

EdgeRef Board::canonical(EdgeRef e) const {
  const CellId other = neighbor(e.cell, e.slot);
  if (other != kOffBoard && other < e.cell) return {other, opposite(e.slot)};
  return e;
}

Point Board::center(CellId c) const {
  if (const auto* h = std::get_if<HexCell>(&coords_[c])) {
    const double s3 = std::sqrt(3.0);
    return {s3 * (h->x + h->z / 2.0), 1.5 * h->z};
  }
  const auto& rc = std::get<RectCell>(coords_[c]);
  return {static_cast<double>(rc.col), static_cast<double>(rc.row)};
}

Point Board::slot_point(CellId c, int slot) const {
  const Point p = center(c);
  const double apothem = geometry() == Geometry::hex ? std::sqrt(3.0) / 2.0 : 0.5;
  const double a = slot_angle(geometry(), slot);
  return {p.x + apothem * std::cos(a), p.y - apothem * std::sin(a)};
}

CellId Board::rotate_cell(CellId c, int k) const {
  const int period = slots();
  k = ((k % period) + period) % period;
  for (int i = 0; i < k; ++i) c = rot1_[static_cast<std::size_t>(c)];
  return c;
}

std::vector<CellCoord> board_cells(const BoardSpec& spec) {
  auto board = Board::get(spec);
  std::vector<CellCoord> out;
  out.reserve(static_cast<std::size_t>(board->size()));
  for (CellId c = 0; c < board->size(); ++c) out.push_back(board->coord(c));
  return out;
}

CellClass classify_cell(const CellCoord& c, const BoardSpec& spec) {
  auto board = Board::get(spec);
  return board->classify(board->at(c));
}

std::vector<std::pair<int, std::optional<CellCoord>>> neighbors(const CellCoord& c, const BoardSpec& spec) {
  auto board = Board::get(spec);
  const CellId id = board->at(c);
  std::vector<std::pair<int, std::optional<CellCoord>>> out;
  for (int k = 0; k < board->slots(); ++k) {
    const CellId t = board->neighbor(id, k);
    out.emplace_back(k, t == kOffBoard ? std::nullopt : std::optional<CellCoord>(board->coord(t)));
  }
  return out;
}

std::pair<int, int> to_row_col(const CellCoord& c, const BoardSpec& spec) {
  auto board = Board::get(spec);
  return board->row_col(board->at(c));
}

CellCoord from_row_col(int row, int col, const BoardSpec& spec) {
  auto board = Board::get(spec);
  return board->coord(board->from_row_col(row, col));
}

std::string to_string(const CellCoord& c) {
  std::ostringstream os;
  if (const auto* h = std::get_if<HexCell>(&c))
    os << "(" << h->x << "," << h->y << "," << h->z << ")";
  else
    os << "(" << std::get<RectCell>(c).row << "," << std::get<RectCell>(c).col << ")";
  return os.str();
}

}  // namespace hexmo
