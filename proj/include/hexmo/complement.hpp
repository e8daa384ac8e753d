#pragma once

// The complement of a link mosaic and the outermost-arc elimination pipeline.
//
// On every interior cell the complement adds non-crossing arcs so that link and
// complement together meet each connection point of the cell exactly once. The
// complement always passes under the link. Its components are loops and arcs whose
// ends sit on connection points between the interior and the boundary ring.

#include "hexmo/mosaic.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace hexmo {

class ComplementError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using SlotPair = std::pair<int, int>;  // first < second

enum class ComplementPolicy : std::uint8_t {
  canonical,        // least arc code on every ambiguous cell
  loop_minimizing,  // canonical, then greedy per-cell flips while (loops, arcs) drops
};

std::string_view to_string(ComplementPolicy p);
ComplementPolicy parse_complement_policy(std::string_view text);

/// Admissible complement arc sets for an interior cell carrying `link`, ordered by
/// their code. Blank cells admit the two all-caps matchings; one-arc cells admit both
/// non-crossing matchings of their four free slots; other cells have one option.
std::vector<std::vector<SlotPair>> complement_options(const TileFace& link);

/// Code of an arc set, e.g. "(0-1)(2-3)(4-5)"; "-" when empty.
std::string arc_code(const std::vector<SlotPair>& arcs);

struct ComplementPiece {
  CellId cell = 0;
  int from = 0, to = 0;
};

struct ComplementComponent {
  bool loop = false;
  std::vector<ComplementPiece> walk;
  /// For arcs: the connection points (interior cell, slot) where the arc meets the ring.
  std::array<EdgeRef, 2> ends{};
};

struct ComplementDecomposition {
  ComplementPolicy policy = ComplementPolicy::canonical;
  std::vector<std::vector<SlotPair>> arcs;  // per cell; boundary cells stay empty
  std::vector<int> choice;                  // option index per cell, -1 when unambiguous
  std::vector<ComplementComponent> components;

  int loop_count() const;
  int arc_count() const;
  std::pair<int, int> sw() const { return {loop_count(), arc_count()}; }
  /// Component through slot `slot` of `cell`, or -1.
  int component_at(CellId cell, int slot) const;
};

ComplementDecomposition compute_complement(const Mosaic& m, ComplementPolicy policy = ComplementPolicy::canonical);
/// Every combination of per-cell options (product order, last cell fastest); stops at `limit` when nonzero.
std::vector<ComplementDecomposition> enumerate_complements(const Mosaic& m, std::size_t limit = 0);
/// Traces components of the given per-cell arcs. Throws ComplementError when the
/// arcs do not continue across shared connection points.
ComplementDecomposition decompose(const Mosaic& m, std::vector<std::vector<SlotPair>> arcs,
                                  ComplementPolicy policy = ComplementPolicy::canonical);

/// The link face with the complement arcs added as strands passing under it.
TileFace overlay_face(const TileFace& link, const std::vector<SlotPair>& arcs);

/// Coverage, non-crossing and under-convention failures; empty when well formed.
std::vector<std::string> complement_problems(const Mosaic& m, const ComplementDecomposition& c);

struct LoopMerge {
  Mosaic mosaic;
  ComplementDecomposition complement;
  bool into_link = false;  // false: rebanded into another complement component
  CellId cell = 0;         // where the band or smoothing happened
};

/// Removes loop component `loop`: joins it to the link (crossings never drop) or,
/// when it meets no link tile, rebands it into another complement component.
LoopMerge merge_loop(const Mosaic& m, const ComplementDecomposition& c, int loop);

struct RegionPartition {
  int arc = 0;
  std::vector<CellId> arc_cells;     // A: interior cells the arc runs through
  std::vector<CellId> arc_ends;      // Ã: boundary cells at the arc's ends (one or two)
  std::vector<CellId> inside;        // I
  std::vector<CellId> inside_ring;   // Ĩ
  std::vector<CellId> outside;       // O
  std::vector<CellId> outside_ring;  // Õ
  std::array<EdgeRef, 2> ends{};     // the arc's ends as (interior cell, slot)
  bool outermost = false;
};

RegionPartition region_partition(const Mosaic& m, const ComplementDecomposition& c, int arc);
/// The outermost arc with the smallest outside, ties by least end; -1 without arcs.
int outermost_arc(const Mosaic& m, const ComplementDecomposition& c);

struct PreconditionFailed {
  std::string stage;
  std::string reason;
};

struct StageRecord {
  std::string name;  // K1, L1, L2, K2, K3
  Mosaic mosaic;
  int crossings = 0;
  int components = 0;
};

struct PipelineTrace {
  RegionPartition region;
  std::vector<StageRecord> stages;
  std::pair<int, int> sw_before{}, sw_after{};
  int lost_boundary_crossings = 0;  // n
  int outside_edges = 0;            // j: pieces of the link outside the arc with both ends on A
  int aligned_cells = 0;            // cells of O and Õ whose bits were copied from L_r
  std::vector<std::string> actions;
  ComplementDecomposition complement;  // complement of K3 inherited from the input

  const Mosaic& input() const { return stages.front().mosaic; }
  const Mosaic& output() const { return stages.back().mosaic; }
};

using Elimination = std::variant<PipelineTrace, PreconditionFailed>;

/// One elimination of an outermost complement arc from a knot mosaic whose
/// complement has no loops.
Elimination eliminate_outermost_arc(const Mosaic& knot, const ComplementDecomposition& c);

struct Reduction {
  Mosaic mosaic;
  ComplementDecomposition complement;
  std::vector<std::pair<int, int>> sw_history;  // (loops, arcs) after each step, starting with the input
  int loop_merges = 0;
  std::vector<PipelineTrace> traces;
  std::optional<PreconditionFailed> failure;
};

/// Merges loops, then eliminates outermost arcs until the complement is empty.
Reduction reduce_to_trivial(const Mosaic& knot, ComplementPolicy policy = ComplementPolicy::canonical);

/// Pairs of adjacent hexagonal sides that both carry crossing tiles with no unused
/// interior-facing connection point on the ring between the nearest crossing tiles.
std::vector<std::pair<int, int>> adjacent_side_counterexamples(const Mosaic& m);

}  // namespace hexmo
