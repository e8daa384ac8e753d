#pragma once

// The "hexmo v1" text format:
//
//   hexmo v1
//   geometry: hex
//   r: 3
//   setting: hex-standard
//   cell 1 1: (1-3)
//   cell 1 2: -
//   ...
//
// One line per cell in row-major order; tile codes as produced by tile_code.
// Lines starting with '#' and blank lines are ignored on input.

#include "hexmo/mosaic.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hexmo {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);
  std::size_t line() const { return line_; }      // 1-based
  std::size_t column() const { return column_; }  // 1-based
  const std::string& detail() const { return detail_; }

 private:
  std::size_t line_, column_;
  std::string detail_;
};

std::string write_mosaic(const Mosaic& m);
/// Parses a mosaic; the result is not validated. Throws ParseError.
Mosaic read_mosaic(std::string_view text);

Mosaic read_mosaic_file(const std::string& path);
void write_mosaic_file(const Mosaic& m, const std::string& path);

}  // namespace hexmo
