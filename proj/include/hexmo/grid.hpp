#pragma once

// Board geometry for hexagonal radius-r boards and rectangular r x r boards.
//
// Hexagonal tiles are pointy-top, so that the board is a flat-top hexagon whose
// rows run horizontally: row i of a radius-r board holds r+i-1 tiles for i <= r
// and 3r-1-i tiles afterwards. Slots (connection points) are numbered clockwise
// starting at the north-east edge:
//
//     0 = NE, 1 = E, 2 = SE, 3 = SW, 4 = W, 5 = NW
//
// Rectangular slots are 0 = N, 1 = E, 2 = S, 3 = W.

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace hexmo {

enum class Geometry : std::uint8_t { hex, rect };

enum class Setting : std::uint8_t { rect, hex_standard, hex_semi_enhanced, hex_enhanced };

std::string_view to_string(Geometry g);
std::string_view to_string(Setting s);
Geometry parse_geometry(std::string_view text);
Setting parse_setting(std::string_view text);
Geometry geometry_of(Setting s);

/// Number of connection slots on a tile of the given geometry.
constexpr int slot_count(Geometry g) { return g == Geometry::hex ? 6 : 4; }

constexpr int opposite_slot(Geometry g, int slot) {
  return g == Geometry::hex ? (slot + 3) % 6 : (slot + 2) % 4;
}

struct BoardSpec {
  Geometry geometry = Geometry::hex;
  int r = 1;
  Setting setting = Setting::hex_standard;

  static BoardSpec hex(int r, Setting s = Setting::hex_standard) { return {Geometry::hex, r, s}; }
  static BoardSpec rect(int r) { return {Geometry::rect, r, Setting::rect}; }

  friend bool operator==(const BoardSpec&, const BoardSpec&) = default;
};

/// Raised for malformed boards, off-board coordinates and similar contract violations.
class BoardError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct HexCell {
  int x = 0, y = 0, z = 0;  // cube coordinates, x + y + z == 0
  friend bool operator==(const HexCell&, const HexCell&) = default;
};

struct RectCell {
  int row = 1, col = 1;  // 1-based
  friend bool operator==(const RectCell&, const RectCell&) = default;
};

using CellCoord = std::variant<HexCell, RectCell>;

using CellId = int;
inline constexpr CellId kOffBoard = -1;

enum class CellClass : std::uint8_t { boundary_corner, boundary_edge, penultimate, central };

std::string_view to_string(CellClass c);

/// A tile edge, i.e. a connection point. Canonical refs name the shared edge from the
/// lower cell id; edges on the outer rim of the board keep their own cell.
struct EdgeRef {
  CellId cell = 0;
  int slot = 0;
  friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
  friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

struct Point {
  double x = 0.0, y = 0.0;
};

class Board {
 public:
  explicit Board(BoardSpec spec);

  /// Shared immutable instance for a spec; cached, safe to call concurrently.
  static std::shared_ptr<const Board> get(const BoardSpec& spec);

  const BoardSpec& spec() const { return spec_; }
  Geometry geometry() const { return spec_.geometry; }
  int radius() const { return spec_.r; }
  int size() const { return static_cast<int>(coords_.size()); }
  int slots() const { return slot_count(spec_.geometry); }
  int opposite(int slot) const { return opposite_slot(spec_.geometry, slot); }

  const CellCoord& coord(CellId c) const { return coords_.at(static_cast<std::size_t>(c)); }
  std::optional<CellId> find(const CellCoord& c) const;
  CellId at(const CellCoord& c) const;  // throws BoardError when off-board

  CellId neighbor(CellId c, int slot) const { return nbr_[static_cast<std::size_t>(c * slots() + slot)]; }

  /// Distance (in tiles) from the outer ring: 0 on the boundary, 1 on the penultimate ring.
  int depth(CellId c) const { return depth_[static_cast<std::size_t>(c)]; }
  /// Corona index measured from the center (hex); for rect boards r-1-depth.
  int corona(CellId c) const { return spec_.r - 1 - depth(c); }
  bool is_boundary(CellId c) const { return depth(c) == 0; }
  bool is_interior(CellId c) const { return depth(c) > 0; }
  CellClass classify(CellId c) const { return class_[static_cast<std::size_t>(c)]; }

  /// 1-based (row, col) in row-major order; T_{i,j} numbering.
  std::pair<int, int> row_col(CellId c) const { return rowcol_[static_cast<std::size_t>(c)]; }
  CellId from_row_col(int row, int col) const;
  int row_count() const { return static_cast<int>(row_start_.size()); }
  int row_length(int row) const;

  /// Boundary cells in clockwise order starting at T_{1,1}.
  const std::vector<CellId>& ring() const { return ring_; }
  /// Position of a boundary cell in ring(), or -1.
  int ring_index(CellId c) const { return ring_pos_[static_cast<std::size_t>(c)]; }
  const std::vector<CellId>& interior() const { return interior_; }

  EdgeRef canonical(EdgeRef e) const;

  /// Layout helpers for rendering; unit tile size.
  Point center(CellId c) const;
  Point slot_point(CellId c, int slot) const;

  /// Cell reached by rotating the board clockwise by k steps (60 or 90 degrees).
  CellId rotate_cell(CellId c, int k) const;

 private:
  BoardSpec spec_;
  std::vector<CellCoord> coords_;
  std::vector<CellId> nbr_;
  std::vector<int> depth_;
  std::vector<CellClass> class_;
  std::vector<std::pair<int, int>> rowcol_;
  std::vector<int> row_start_;
  std::vector<CellId> ring_;
  std::vector<int> ring_pos_;
  std::vector<CellId> interior_;
  std::vector<CellId> rot1_;
};

// Free-function surface over coordinates.
std::vector<CellCoord> board_cells(const BoardSpec& spec);
CellClass classify_cell(const CellCoord& c, const BoardSpec& spec);
/// (slot, neighbor) for every slot; neighbor is nullopt when it falls off the board.
std::vector<std::pair<int, std::optional<CellCoord>>> neighbors(const CellCoord& c, const BoardSpec& spec);
std::pair<int, int> to_row_col(const CellCoord& c, const BoardSpec& spec);
CellCoord from_row_col(int row, int col, const BoardSpec& spec);

std::string to_string(const CellCoord& c);

}  // namespace hexmo
