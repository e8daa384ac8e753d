#pragma once

// Random mosaic sampling and maximum-crossing knot searches.

#include "hexmo/mosaic.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hexmo {

class SearchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Cells ordered center outward, each ring clockwise.
std::vector<CellId> spiral_order(const Board& b);

/// One attempt at filling the board in spiral order, each cell drawn uniformly from
/// the setting-legal faces that agree with already placed neighbors and leave no
/// strand at the outer edge. nullopt on a dead end.
std::optional<Mosaic> try_sample_mosaic(const BoardSpec& spec, std::mt19937_64& rng);
/// Retries try_sample_mosaic until it succeeds; throws SearchError after `attempts`.
Mosaic sample_mosaic(const BoardSpec& spec, std::mt19937_64& rng, int attempts = 10000);

/// The knot mosaics hiding in `m`: one per link component, other strands removed.
std::vector<Mosaic> component_knots(const Mosaic& m);

/// A random knot mosaic: a sampled mosaic cut down to one of its components,
/// uniformly chosen among components with at least `min_crossings` crossings.
Mosaic sample_knot(const BoardSpec& spec, std::mt19937_64& rng, int min_crossings = 0, int attempts = 100000);

/// Per-sample generator for sample index `i` of a run seeded with `seed`.
std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t i);

enum class SearchMode : std::uint8_t { exhaustive, saturated_smoothing, randomized };

std::string_view to_string(SearchMode m);
SearchMode parse_search_mode(std::string_view text);

struct SearchOptions {
  SearchMode mode = SearchMode::randomized;
  std::uint64_t seed = 1;
  std::uint64_t samples = 1000;
  int max_smoothings = 3;  // saturated-smoothing depth
  bool parallel = true;
};

struct KnotScore {
  int crossings = 0;
  int reduced = 0;  // crossings minus nugatory crossings
  bool certified = false;
};

KnotScore score_knot(const Mosaic& knot);

struct SearchResult {
  int max_crossings = -1;          // most crossings on any knot found
  int max_reduced = -1;            // most crossings after discounting nugatory ones
  int max_certified = -1;          // most crossings on a reduced alternating knot
  std::optional<Mosaic> witness;   // a knot attaining max_reduced
  std::optional<Mosaic> raw_witness;  // a knot attaining max_crossings
  long bound = 0;                  // predicted crossing-number bound
  bool exceeded_bound = false;     // a knot certified above the bound, or reduced above it
  std::uint64_t mosaics = 0;       // mosaics examined
  std::uint64_t knots = 0;         // knot mosaics examined
};

/// Exhaustive mode covers hexagonal 2-mosaics and rectangular boards up to 4;
/// saturated smoothing covers hexagonal boards up to 3. Larger requests throw SearchError.
SearchResult search_max_knot(int r, Setting setting, const SearchOptions& opt);

}  // namespace hexmo
