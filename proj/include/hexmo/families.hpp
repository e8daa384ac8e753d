#pragma once

// The extremal saturated links L_r and the reduced alternating knots A_r obtained
// from them by smoothing, in the rectangular and the three hexagonal settings.

#include "hexmo/diagram.hpp"
#include "hexmo/mosaic.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace hexmo {

class UnsupportedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class ScheduleRole : std::uint8_t { boundary_merge, central_merge, nugatory_removal };

std::string_view to_string(ScheduleRole r);

struct ScheduleStep {
  CellId cell = 0;
  int crossing = 0;  // crossing id within the face at the time of the step
  int choice = 0;
  ScheduleRole role = ScheduleRole::central_merge;
  friend bool operator==(const ScheduleStep&, const ScheduleStep&) = default;
};

using SmoothingSchedule = std::vector<ScheduleStep>;

struct KnotWithSchedule {
  Mosaic parent;  // the mosaic the schedule starts from (L_r, or the knot closure for odd rect boards)
  Mosaic knot;
  SmoothingSchedule schedule;
};

struct Prediction {
  long saturated_crossings = 0;          // crossings of L_r (enhanced includes boundary crossings)
  std::optional<int> link_components;    // components of L_r; none for odd rectangular boards
  long knot_crossing_bound = 0;          // crossing number of A_r
};

bool link_supported(int r, Setting s);
bool knot_supported(int r, Setting s);

/// Interior filled with the saturated tile (hex) or with crossing tiles whose bits
/// alternate by cell parity (rect); boundary left blank.
Mosaic saturated_interior(const BoardSpec& spec);

Mosaic gen_link(int r, Setting s);
KnotWithSchedule gen_knot(int r, Setting s);
Prediction predicted(int r, Setting s);

/// Applies the smoothings in order; throws TileError on an illegal step.
Mosaic apply_schedule(const Mosaic& link, const SmoothingSchedule& schedule);

/// Re-chooses the over/under bits of every crossing on the cells marked free so that
/// the diagram alternates; bits elsewhere are kept. nullopt when impossible.
/// Free crossings not tied to any fixed crossing get the lower strand over at the
/// first crossing of their constraint class.
std::optional<Mosaic> make_alternating(const Mosaic& m, const std::vector<char>& free_cell);

}  // namespace hexmo
