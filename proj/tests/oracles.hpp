#pragma once

// Independent reference computations shared by the test suites.

#include "hexmo/diagram.hpp"
#include "hexmo/mosaic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using namespace hexmo;

// Suitable connectedness from slot usage alone: shared edges agree, nothing leaves the board.
inline bool connected(const Mosaic& m) {
  const Board& b = m.board();
  for (CellId c = 0; c < b.size(); ++c)
    for (int k = 0; k < b.slots(); ++k) {
      const bool used = m.face(c).uses(k);
      const CellId n = b.neighbor(c, k);
      if (n == kOffBoard) {
        if (used) return false;
      } else if (used != m.face(n).uses(b.opposite(k))) {
        return false;
      }
    }
  return true;
}

struct Dsu {
  std::vector<int> p;
  explicit Dsu(int n) : p(static_cast<std::size_t>(n)) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[static_cast<std::size_t>(x)] == x ? x : p[static_cast<std::size_t>(x)] = find(p[static_cast<std::size_t>(x)]); }
  void join(int a, int b) { p[static_cast<std::size_t>(find(a))] = find(b); }
};

// Link components by union-find over (cell, slot) points: strands join their two
// slots, shared edges join the two sides.
inline int components(const Mosaic& m) {
  const Board& b = m.board();
  const int n = b.slots();
  Dsu d(b.size() * n);
  std::vector<char> used(static_cast<std::size_t>(b.size() * n), 0);
  for (CellId c = 0; c < b.size(); ++c)
    for (const Strand& s : m.face(c).strands()) {
      d.join(c * n + s.a, c * n + s.b);
      used[static_cast<std::size_t>(c * n + s.a)] = used[static_cast<std::size_t>(c * n + s.b)] = 1;
    }
  for (CellId c = 0; c < b.size(); ++c)
    for (int k = 0; k < n; ++k) {
      const CellId nb = b.neighbor(c, k);
      if (nb != kOffBoard && used[static_cast<std::size_t>(c * n + k)]) d.join(c * n + k, nb * n + b.opposite(k));
    }
  std::set<int> roots;
  for (int i = 0; i < b.size() * n; ++i)
    if (used[static_cast<std::size_t>(i)]) roots.insert(d.find(i));
  return static_cast<int>(roots.size());
}

// Nugatory crossings by definition: a loop edge at the crossing, or removing it splits
// its part of the projection graph. Quadratic in the number of crossings.
inline std::vector<int> nugatory(const LinkDiagram& dg) {
  const int v = dg.crossing_count();
  std::vector<std::pair<int, int>> edges;
  for (const auto& comp : dg.components) {
    const auto& ps = comp.passages;
    for (std::size_t i = 0; i < ps.size(); ++i)
      edges.emplace_back(ps[i].crossing, ps[(i + 1) % ps.size()].crossing);
  }
  std::vector<int> out;
  for (int x = 0; x < v; ++x) {
    bool loop = false;
    for (auto [a, b] : edges) loop |= a == x && b == x;
    Dsu with(v), without(v);
    for (auto [a, b] : edges) {
      with.join(a, b);
      if (a != x && b != x) without.join(a, b);
    }
    std::set<int> parts;
    for (int y = 0; y < v; ++y)
      if (y != x && with.find(y) == with.find(x)) parts.insert(without.find(y));
    if (loop || parts.size() >= 2) out.push_back(x);
  }
  return out;
}

// Alternation: along every component, passages alternate over/under.
inline bool alternating(const LinkDiagram& dg) {
  for (const auto& comp : dg.components) {
    const auto& ps = comp.passages;
    for (std::size_t i = 0; i < ps.size(); ++i)
      if (ps.size() > 1 && ps[i].over == ps[(i + 1) % ps.size()].over) return false;
  }
  return true;
}

}  // namespace oracle
