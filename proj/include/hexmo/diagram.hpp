#pragma once

#include "hexmo/mosaic.hpp"

#include <string>
#include <vector>

namespace hexmo {

/// One strand traversal: enters the cell at `from` and leaves at `to`.
struct WalkStep {
  CellId cell = 0;
  int strand = 0;
  int from = 0, to = 0;
};

struct Passage {
  int crossing = 0;  // index into LinkDiagram::crossings
  bool over = false;
};

struct DiagramCrossing {
  CellId cell = 0;
  int local = 0;  // crossing id within the face
  int s = 0, t = 0;
  bool s_over = false;
  int comp_s = 0, comp_t = 0;  // components through each strand
};

struct LinkComponent {
  std::vector<WalkStep> walk;
  std::vector<Passage> passages;
};

struct LinkDiagram {
  std::vector<LinkComponent> components;
  std::vector<DiagramCrossing> crossings;  // numbered by first encounter along the walks

  int component_count() const { return static_cast<int>(components.size()); }
  int crossing_count() const { return static_cast<int>(crossings.size()); }
  /// Component through strand `strand` of `cell`, or -1 (table filled by extract).
  int component_of(CellId cell, int strand) const;

  std::vector<std::vector<int>> strand_component;  // [cell][strand]
};

/// Follows strands through matched connection points. Walks start at the least
/// unvisited (cell, strand) and first head toward that strand's lower slot.
/// Throws BoardError when a strand runs into an unmatched connection point.
LinkDiagram extract(const Mosaic& m);

/// Per component: comma-separated signed labels (+ over, - under), 1-based in
/// first-encounter order; components separated by '|'.
std::string gauss_code(const LinkDiagram& d);

/// Crossings at which some circle meets the diagram only there (cut vertices of the
/// projection graph), sorted.
std::vector<int> nugatory_crossings(const LinkDiagram& d);
bool is_reduced(const LinkDiagram& d);
bool is_alternating(const LinkDiagram& d);
/// Whether the projection is connected: every component is linked to the rest by crossings.
bool is_projection_connected(const LinkDiagram& d);

struct CrossingCertificate {
  bool certified = false;  // false means the count is only an upper bound
  int crossings = 0;
  friend bool operator==(const CrossingCertificate&, const CrossingCertificate&) = default;
};

/// Certified when the diagram is alternating, reduced and has a connected projection.
CrossingCertificate certify_crossing_number(const LinkDiagram& d);

std::string to_string(const CrossingCertificate& c);

}  // namespace hexmo
