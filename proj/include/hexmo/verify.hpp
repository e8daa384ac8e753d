#pragma once

// Live re-computation of the family formulas and structural claims, one row per check.

#include "hexmo/grid.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace hexmo {

struct ClaimRow {
  std::string id;      // e.g. "link.crossings"
  std::string anchor;  // what the row checks, in words
  int r = 0;
  Setting setting = Setting::hex_standard;
  long expected = 0;
  long observed = 0;
  bool pass = false;
};

struct VerificationReport {
  std::vector<ClaimRow> rows;
  std::size_t passed() const;
  std::size_t failed() const;
  bool ok() const { return failed() == 0; }
};

struct VerifyOptions {
  int r_min = 2;
  int r_max = 8;
  std::vector<Setting> settings{Setting::hex_standard, Setting::hex_semi_enhanced, Setting::hex_enhanced, Setting::rect};
  int crossing_variants = 50;      // random over/under restatements per saturated link
  int adjacent_side_samples = 2000;  // random enhanced mosaics checked at r = 5
  std::uint64_t seed = 1;
  bool parallel = true;
};

/// Rows for every supported (r, setting) in range, ordered by setting, then r, then check.
/// Deterministic for fixed options; `parallel` only changes the schedule.
VerificationReport verify_claims(const VerifyOptions& opt = {});

/// Crossing-state variants of `link` with random bits on every crossing; counts how
/// many keep the component count of `link`.
int crossing_change_agreements(int r, Setting s, int variants, std::uint64_t seed);

struct AdjacentSidesCheck {
  std::size_t configurations = 0;  // mosaics or windows examined
  std::size_t with_adjacent = 0;   // of those, how many carry crossings on two adjacent sides
  std::size_t counterexamples = 0;
};

/// Every boundary closure of the saturated enhanced interior.
AdjacentSidesCheck adjacent_sides_saturated(int r, bool parallel = true);
/// Ring stretches from a crossing tile on one side to a crossing tile on the next side,
/// with every interior-facing connection point used and the interior left free.
/// A counterexample is a stretch that admits such a filling.
AdjacentSidesCheck adjacent_sides_windows(int r);
/// Randomly sampled enhanced mosaics.
AdjacentSidesCheck adjacent_sides_sampled(int r, std::size_t samples, std::uint64_t seed, bool parallel = true);

}  // namespace hexmo
