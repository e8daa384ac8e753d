#pragma once

#include "hexmo/grid.hpp"
#include "hexmo/tiles.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hexmo {

/// A total assignment of faces to the cells of a board.
class Mosaic {
 public:
  explicit Mosaic(BoardSpec spec);  // all blank

  const BoardSpec& spec() const { return board_->spec(); }
  const Board& board() const { return *board_; }
  std::shared_ptr<const Board> board_ptr() const { return board_; }
  const Catalog& catalog() const { return *catalog_; }
  int size() const { return board_->size(); }

  FaceId at(CellId c) const { return faces_[static_cast<std::size_t>(c)]; }
  void set(CellId c, FaceId f) { faces_[static_cast<std::size_t>(c)] = f; }
  const TileFace& face(CellId c) const { return catalog_->face(at(c)); }
  void set_face(CellId c, const TileFace& t) { set(c, catalog_->id(t)); }
  const std::vector<FaceId>& faces() const { return faces_; }

  int crossing_count() const;

  friend bool operator==(const Mosaic& a, const Mosaic& b) {
    return a.spec() == b.spec() && a.faces_ == b.faces_;
  }

 private:
  std::shared_ptr<const Board> board_;
  const Catalog* catalog_;
  std::vector<FaceId> faces_;
};

/// A violation at a connection point; slot is -1 for a tile-level (setting) violation.
struct Violation {
  EdgeRef where;
  std::string reason;
};

std::vector<Violation> validate(const Mosaic& m);
inline bool is_valid(const Mosaic& m) { return validate(m).empty(); }

/// Whether the setting admits face f on cell c (only boundary cells are restricted).
bool setting_allows(Setting s, const Board& b, CellId c, FaceId f);

bool is_saturated(const Mosaic& m);

/// Boundary sides of a hexagonal board, clockwise from the top side; each holds the
/// r-2 edge cells between two corners. Empty for rectangular boards.
std::vector<std::vector<CellId>> hex_sides(const Board& b);

struct ClosureOptions {
  /// Boundary cells whose faces are kept as given instead of enumerated.
  std::map<CellId, FaceId> pinned;
  /// When set, crossing boundary faces are enumerated with only their first
  /// over/under state (closures then differ as projections).
  bool projections_only = false;
  /// Stop after this many closures (0 = unlimited).
  std::size_t limit = 0;
  /// Boundary legality to apply instead of the board's own setting.
  std::optional<Setting> setting;
};

/// Every completion of the boundary ring by setting-legal faces that makes the
/// mosaic suitably connected; interior faces of `interior` are kept. Deterministic
/// order (ring order from T_{1,1}, faces by catalog id).
std::vector<Mosaic> boundary_closures(const Mosaic& interior, const ClosureOptions& opt = {});
/// Visitor form; return false from the visitor to stop.
void for_each_boundary_closure(const Mosaic& interior, const ClosureOptions& opt,
                               const std::function<bool(const Mosaic&)>& visit);
/// Number of closures, counted without materializing them.
std::size_t count_boundary_closures(const Mosaic& interior, const ClosureOptions& opt = {});

struct EditResult {
  Mosaic mosaic;
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

EditResult edit_replace(const Mosaic& m, CellId c, const TileFace& t);
/// Smooths crossing `id` of the face at c; throws TileError when the choice is illegal.
EditResult edit_smooth(const Mosaic& m, CellId c, int id, int choice);

/// Rotates the whole mosaic clockwise by k steps.
Mosaic rotate_mosaic(const Mosaic& m, int k);

/// Removes every strand not in `keep` from the faces (used to cut a link down to one component).
/// Strands are identified as (cell, strand index).
Mosaic restrict_strands(const Mosaic& m, const std::vector<std::pair<CellId, int>>& keep);

}  // namespace hexmo
