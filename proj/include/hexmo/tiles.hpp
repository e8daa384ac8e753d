#pragma once

// Tiles as planar matchings of connection slots with over/under bits.
//
// A face lists its strands (slot pairs). Two strands cross iff their endpoints
// interleave around the tile boundary; each such pair carries one bit naming the
// strand that passes over. Strands are indexed by their least slot, and crossings
// are ordered by (lower strand index, higher strand index).

#include "hexmo/grid.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hexmo {

class TileError : public std::invalid_argument {
 public:
  explicit TileError(const std::string& what, std::optional<std::size_t> column = std::nullopt)
      : std::invalid_argument(what), column_(column) {}
  /// 0-based column within a tile code, for parse errors.
  std::optional<std::size_t> column() const { return column_; }

 private:
  std::optional<std::size_t> column_;
};

struct Strand {
  int a = 0, b = 0;  // a < b
  friend bool operator==(const Strand&, const Strand&) = default;
};

struct Crossing {
  int s = 0, t = 0;     // strand indices, s < t
  bool s_over = false;  // true when strand s passes over strand t
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

class TileFace {
 public:
  TileFace() = default;
  explicit TileFace(Geometry g);

  /// Builds a face from slot pairs; `over` holds one bit per crossing in canonical
  /// order (true = lower-indexed strand over). Throws TileError on malformed input.
  static TileFace make(Geometry g, std::vector<std::pair<int, int>> pairs, const std::vector<bool>& over = {});
  static TileFace blank(Geometry g) { return TileFace(g); }

  Geometry geometry() const { return geometry_; }
  int slots() const { return slot_count(geometry_); }
  /// Slot joined to `slot`, or -1 when unused.
  int partner(int slot) const { return partner_[static_cast<std::size_t>(slot)]; }
  bool uses(int slot) const { return partner(slot) >= 0; }
  unsigned used_mask() const;

  std::vector<Strand> strands() const;
  std::vector<Crossing> crossings() const;
  int strand_count() const;
  int crossing_count() const;
  /// Index of the strand through `slot` in strands(), or -1.
  int strand_at(int slot) const;

  /// Whether strand with least slot `a` passes over the one with least slot `b`.
  bool over(int a, int b) const { return (over_ >> (a * 6 + b)) & 1U; }
  /// Returns a copy with the crossing `id` flipped.
  TileFace flipped(int id) const;

  std::uint64_t key() const;

  friend bool operator==(const TileFace& x, const TileFace& y) {
    return x.geometry_ == y.geometry_ && x.partner_ == y.partner_ && x.over_ == y.over_;
  }

 private:
  Geometry geometry_ = Geometry::hex;
  std::array<std::int8_t, 6> partner_{-1, -1, -1, -1, -1, -1};
  std::uint64_t over_ = 0;  // bit a*6+b: strand at least slot a over strand at least slot b
};

/// Whether chords (a,b) and (c,d) interleave around an n-slot boundary.
bool interleave(int a, int b, int c, int d);

/// Endpoints of the drawn chord of strand (a, b) in tile coordinates (unit circle, y up).
std::array<std::pair<double, double>, 2> strand_chord(Geometry g, int a, int b);

std::string tile_code(const TileFace& t);
/// Parses a tile code; throws TileError whose message names the offending column (0-based).
TileFace parse_tile_code(Geometry g, std::string_view code);

TileFace rotate(const TileFace& t, int k);
TileFace canonical_face(const TileFace& t);

/// Cuts the two strands at crossing `id` and reconnects them: choice 0 joins the
/// lower endpoints of both strands, choice 1 joins lower to upper. Returns nullopt
/// when the reconnection would create a bigon with a third strand (only possible in
/// the three-diameter tile), since the result would not be a tile.
std::optional<TileFace> try_smooth(const TileFace& t, int id, int choice);
/// As try_smooth, but throws TileError for a missing crossing or an illegal choice.
TileFace smooth_tile(const TileFace& t, int id, int choice);

struct TileProperties {
  int arc_count = 0;
  int crossing_count = 0;
  unsigned used_slots = 0;  // bit k set when slot k is used
  bool is_alternating_3crossing = false;
  bool is_band_pairing = false;
};

TileProperties tile_properties(const TileFace& t);

/// Keeps only the strands whose index bit is set in `mask`; surviving crossings keep their bits.
TileFace keep_strands(const TileFace& t, unsigned mask);

/// True for a non-crossing two-arc face using four consecutive slots paired as the
/// boundary tile of a standard closure.
bool is_standard_pairing(const TileFace& t);

struct TileClass {
  TileFace canonical;
  int class_id = 0;
  std::optional<int> tile_number;  // conventional tile number (1..27 hex, 1..5 rect), best effort
  int orientations = 0;            // distinct rotations
};

std::vector<TileClass> enumerate_catalog(Geometry g);
/// Every face, not quotiented by rotation (113 hex, 11 rect), in id order.
std::vector<TileFace> enumerate_faces(Geometry g);

/// The alternating three-diameter face used to saturate hexagonal interiors.
TileFace saturated_hex_tile();
/// The crossing face used on rectangular interiors.
TileFace saturated_rect_tile();

using FaceId = std::uint8_t;

/// Precomputed tables over all oriented faces of a geometry.
class Catalog {
 public:
  static const Catalog& get(Geometry g);

  Geometry geometry() const { return geometry_; }
  int size() const { return static_cast<int>(faces_.size()); }
  const TileFace& face(FaceId f) const { return faces_[f]; }
  FaceId id(const TileFace& t) const;
  std::optional<FaceId> find(const TileFace& t) const;
  FaceId blank() const { return 0; }

  int partner(FaceId f, int slot) const { return faces_[f].partner(slot); }
  unsigned used(FaceId f) const { return info_[f].used; }
  int crossings(FaceId f) const { return info_[f].crossings; }
  int strands(FaceId f) const { return info_[f].strands; }
  const std::vector<Crossing>& crossing_list(FaceId f) const { return info_[f].crossing_list; }
  /// Crossing ids met along strand s walked from its lower slot to its higher slot.
  const std::vector<int>& order_along(FaceId f, int s) const { return info_[f].order[static_cast<std::size_t>(s)]; }
  /// Crossing position in tile coordinates (unit circumradius, y up), for rendering.
  std::pair<double, double> crossing_point(FaceId f, int id) const { return info_[f].points[static_cast<std::size_t>(id)]; }
  FaceId rotate(FaceId f, int k) const;
  /// -1 when illegal.
  int smooth(FaceId f, int id, int choice) const { return info_[f].smooth[static_cast<std::size_t>(id * 2 + choice)]; }
  int class_id(FaceId f) const { return info_[f].class_id; }
  const TileProperties& properties(FaceId f) const { return info_[f].props; }
  const std::string& code(FaceId f) const { return info_[f].code; }
  const std::vector<TileClass>& classes() const { return classes_; }

  /// Faces whose used slots are exactly `mask`.
  const std::vector<FaceId>& with_used(unsigned mask) const { return by_used_[mask]; }

 private:
  explicit Catalog(Geometry g);

  struct Info {
    unsigned used = 0;
    int crossings = 0;
    int strands = 0;
    std::vector<Crossing> crossing_list;
    std::vector<std::vector<int>> order;
    std::vector<std::pair<double, double>> points;
    std::array<FaceId, 6> rot{};
    std::vector<int> smooth;
    int class_id = 0;
    TileProperties props;
    std::string code;
  };

  Geometry geometry_;
  std::vector<TileFace> faces_;
  std::vector<Info> info_;
  std::vector<TileClass> classes_;
  std::vector<std::vector<FaceId>> by_used_;
  std::vector<std::pair<std::uint64_t, FaceId>> index_;
};

}  // namespace hexmo
