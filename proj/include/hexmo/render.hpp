#pragma once

// SVG and text drawings of mosaics.

#include "hexmo/complement.hpp"
#include "hexmo/mosaic.hpp"

#include <optional>
#include <string>

namespace hexmo {

struct SvgOptions {
  double scale = 40.0;  // pixels per unit tile size
  double gap = 0.14;    // half-width of an under-strand gap, in tile units
  bool outline = true;
  std::string strand_color = "#1a1a1a";
  std::string complement_color = "#2b6cd6";
};

/// Tile outlines, one `<path class="strand">` per link component (its subpaths are the
/// pieces between under-crossing gaps) and, when `complement` is given, one
/// `<path class="complement">` per complement component.
/// Throws BoardError when the mosaic is not suitably connected.
std::string render_svg(const Mosaic& m, const std::optional<ComplementDecomposition>& complement = std::nullopt,
                       const SvgOptions& opt = {});

/// Tile codes laid out by rows; hexagonal rows are indented so adjacent rows interlock.
std::string render_ascii(const Mosaic& m);

}  // namespace hexmo
