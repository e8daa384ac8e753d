#include "hexmo/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace hexmo {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column),
      detail_(what) {}

std::string write_mosaic(const Mosaic& m) {
  const Board& b = m.board();
  std::string out = "hexmo v1\n";
  out += "geometry: " + std::string(to_string(b.geometry())) + "\n";
  out += "r: " + std::to_string(b.radius()) + "\n";
  out += "setting: " + std::string(to_string(b.spec().setting)) + "\n";
  for (CellId c = 0; c < b.size(); ++c) {
    auto [row, col] = b.row_col(c);
    out += "cell " + std::to_string(row) + " " + std::to_string(col) + ": " + m.catalog().code(m.at(c)) + "\n";
  }
  return out;
}

namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0, pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = text.find('\n', pos);
    std::string_view line = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    ++number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line.front() != '#') out.push_back({number, line});
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

// Parses "key: value" and returns the value with its 0-based column.
std::pair<std::string_view, std::size_t> header(const Line& l, std::string_view key) {
  const std::string prefix = std::string(key) + ": ";
  if (l.text.substr(0, prefix.size()) != prefix) throw ParseError(l.number, 1, "expected '" + prefix + "...'");
  return {l.text.substr(prefix.size()), prefix.size()};
}

int parse_int(std::string_view s, const Line& l, std::size_t col) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size() || s.empty()) throw ParseError(l.number, col + 1, "expected an integer");
  return v;
}

}  // namespace

Mosaic read_mosaic(std::string_view text) {
  const auto lines = content_lines(text);
  const std::size_t eof_line = static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) + 1;
  if (lines.empty() || lines[0].text != "hexmo v1")
    throw ParseError(lines.empty() ? 1 : lines[0].number, 1, "expected 'hexmo v1'");
  if (lines.size() < 4) throw ParseError(eof_line, 1, "missing header lines");

  auto [gtext, gcol] = header(lines[1], "geometry");
  Geometry g;
  try {
    g = parse_geometry(gtext);
  } catch (const std::exception& e) {
    throw ParseError(lines[1].number, gcol + 1, e.what());
  }
  auto [rtext, rcol] = header(lines[2], "r");
  const int r = parse_int(rtext, lines[2], rcol);
  auto [stext, scol] = header(lines[3], "setting");
  Setting s;
  try {
    s = parse_setting(stext);
  } catch (const std::exception& e) {
    throw ParseError(lines[3].number, scol + 1, e.what());
  }
  if (geometry_of(s) != g) throw ParseError(lines[3].number, scol + 1, "setting does not match the geometry");
  if (r < 1) throw ParseError(lines[2].number, rcol + 1, "r must be at least 1");

  std::optional<Mosaic> m;
  try {
    m.emplace(BoardSpec{g, r, s});
  } catch (const std::exception& e) {
    throw ParseError(lines[2].number, rcol + 1, e.what());
  }
  const Board& b = m->board();
  std::vector<char> seen(static_cast<std::size_t>(b.size()), 0);
  for (std::size_t i = 4; i < lines.size(); ++i) {
    const Line& l = lines[i];
    std::string_view t = l.text;
    if (t.substr(0, 5) != "cell ") throw ParseError(l.number, 1, "expected 'cell <row> <col>: <tile>'");
    const std::size_t sp = t.find(' ', 5);
    const std::size_t colon = t.find(':', 5);
    if (sp == std::string_view::npos || colon == std::string_view::npos || sp > colon)
      throw ParseError(l.number, 6, "expected 'cell <row> <col>: <tile>'");
    const int row = parse_int(t.substr(5, sp - 5), l, 5);
    const int col = parse_int(t.substr(sp + 1, colon - sp - 1), l, sp + 1);
    CellId c;
    try {
      c = b.from_row_col(row, col);
    } catch (const std::exception& e) {
      throw ParseError(l.number, 6, e.what());
    }
    if (seen[static_cast<std::size_t>(c)]) throw ParseError(l.number, 6, "cell listed twice");
    seen[static_cast<std::size_t>(c)] = 1;
    if (colon + 1 >= t.size() || t[colon + 1] != ' ') throw ParseError(l.number, colon + 2, "expected ' ' after ':'");
    const std::size_t code_col = colon + 2;
    try {
      m->set_face(c, parse_tile_code(g, t.substr(code_col)));
    } catch (const TileError& e) {
      std::string what = e.what();
      if (e.column() && what.rfind("column ", 0) == 0) what = what.substr(what.find(": ") + 2);
      throw ParseError(l.number, code_col + e.column().value_or(0) + 1, what);
    }
  }
  for (CellId c = 0; c < b.size(); ++c)
    if (!seen[static_cast<std::size_t>(c)]) {
      auto [row, col] = b.row_col(c);
      throw ParseError(eof_line, 1, "cell " + std::to_string(row) + " " + std::to_string(col) + " missing");
    }
  return *m;
}

Mosaic read_mosaic_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return read_mosaic(ss.str());
}

void write_mosaic_file(const Mosaic& m, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << write_mosaic(m);
}

}  // namespace hexmo
