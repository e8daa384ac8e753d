#include "hexmo/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hexmo {

int LinkDiagram::component_of(CellId cell, int strand) const {
  if (cell < 0 || cell >= static_cast<int>(strand_component.size())) return -1;
  const auto& row = strand_component[static_cast<std::size_t>(cell)];
  if (strand < 0 || strand >= static_cast<int>(row.size())) return -1;
  return row[static_cast<std::size_t>(strand)];
}

LinkDiagram extract(const Mosaic& m) {
  const Board& b = m.board();
  const Catalog& cat = m.catalog();
  LinkDiagram d;
  d.strand_component.resize(static_cast<std::size_t>(b.size()));
  for (CellId c = 0; c < b.size(); ++c)
    d.strand_component[static_cast<std::size_t>(c)].assign(static_cast<std::size_t>(cat.strands(m.at(c))), -1);

  // global crossing label per (cell, local id)
  std::vector<std::vector<int>> label(static_cast<std::size_t>(b.size()));
  for (CellId c = 0; c < b.size(); ++c) label[static_cast<std::size_t>(c)].assign(static_cast<std::size_t>(cat.crossings(m.at(c))), -1);

  for (CellId c0 = 0; c0 < b.size(); ++c0) {
    const FaceId f0 = m.at(c0);
    for (int s0 = 0; s0 < cat.strands(f0); ++s0) {
      if (d.strand_component[static_cast<std::size_t>(c0)][static_cast<std::size_t>(s0)] >= 0) continue;
      const int comp = d.component_count();
      LinkComponent lc;
      // head toward the lower slot of the starting strand
      const Strand st = cat.face(f0).strands()[static_cast<std::size_t>(s0)];
      CellId cell = c0;
      int entry = st.b;
      while (true) {
        const FaceId f = m.at(cell);
        const int strand = cat.face(f).strand_at(entry);
        if (strand < 0) throw BoardError("strand enters an unused connection point");
        auto& owner = d.strand_component[static_cast<std::size_t>(cell)][static_cast<std::size_t>(strand)];
        if (owner >= 0) break;
        owner = comp;
        const int exit = cat.partner(f, entry);
        lc.walk.push_back({cell, strand, entry, exit});
        const auto& order = cat.order_along(f, strand);
        const bool forward = entry < exit;
        for (std::size_t i = 0; i < order.size(); ++i) {
          const int x = order[forward ? i : order.size() - 1 - i];
          const Crossing& cr = cat.crossing_list(f)[static_cast<std::size_t>(x)];
          int& g = label[static_cast<std::size_t>(cell)][static_cast<std::size_t>(x)];
          if (g < 0) {
            g = d.crossing_count();
            d.crossings.push_back({cell, x, cr.s, cr.t, cr.s_over, -1, -1});
          }
          const bool is_s = cr.s == strand;
          lc.passages.push_back({g, is_s == cr.s_over});
        }
        const CellId nb = b.neighbor(cell, exit);
        if (nb == kOffBoard) throw BoardError("strand leaves the board");
        cell = nb;
        entry = b.opposite(exit);
      }
      if (cell != c0 || lc.walk.empty()) throw BoardError("strand walk did not close");
      d.components.push_back(std::move(lc));
    }
  }
  for (auto& x : d.crossings) {
    x.comp_s = d.component_of(x.cell, x.s);
    x.comp_t = d.component_of(x.cell, x.t);
  }
  return d;
}

std::string gauss_code(const LinkDiagram& d) {
  std::ostringstream os;
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    if (i) os << '|';
    const auto& ps = d.components[i].passages;
    for (std::size_t j = 0; j < ps.size(); ++j) {
      if (j) os << ',';
      os << (ps[j].over ? '+' : '-') << ps[j].crossing + 1;
    }
  }
  return os.str();
}

namespace {

// Projection graph: crossings as vertices, segments between consecutive passages as edges.
struct Edge {
  int u, v;
};

std::vector<Edge> projection_edges(const LinkDiagram& d) {
  std::vector<Edge> edges;
  for (const auto& comp : d.components) {
    const auto& ps = comp.passages;
    for (std::size_t i = 0; i < ps.size(); ++i) edges.push_back({ps[i].crossing, ps[(i + 1) % ps.size()].crossing});
  }
  return edges;
}

int find(std::vector<int>& p, int x) {
  while (p[static_cast<std::size_t>(x)] != x) x = p[static_cast<std::size_t>(x)] = p[static_cast<std::size_t>(p[static_cast<std::size_t>(x)])];
  return x;
}

}  // namespace

std::vector<int> nugatory_crossings(const LinkDiagram& d) {
  // Articulation points of the projection multigraph (iterative Tarjan over edge ids),
  // plus every vertex carrying a loop edge (a kink).
  const int n = d.crossing_count();
  const auto edges = projection_edges(d);
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n));  // (edge, other end)
  std::vector<char> nugatory(static_cast<std::size_t>(n), 0);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (edges[e].u == edges[e].v) {
      nugatory[static_cast<std::size_t>(edges[e].u)] = 1;
      continue;
    }
    adj[static_cast<std::size_t>(edges[e].u)].push_back({static_cast<int>(e), edges[e].v});
    adj[static_cast<std::size_t>(edges[e].v)].push_back({static_cast<int>(e), edges[e].u});
  }
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  int timer = 0;
  struct Frame {
    int v, parent_edge;
    std::size_t next;
    int children;
  };
  for (int root = 0; root < n; ++root) {
    if (disc[static_cast<std::size_t>(root)] >= 0) continue;
    std::vector<Frame> stack{{root, -1, 0, 0}};
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& nbrs = adj[static_cast<std::size_t>(f.v)];
      if (f.next < nbrs.size()) {
        auto [e, y] = nbrs[f.next++];
        if (e == f.parent_edge) continue;
        if (disc[static_cast<std::size_t>(y)] >= 0) {
          low[static_cast<std::size_t>(f.v)] = std::min(low[static_cast<std::size_t>(f.v)], disc[static_cast<std::size_t>(y)]);
        } else {
          disc[static_cast<std::size_t>(y)] = low[static_cast<std::size_t>(y)] = timer++;
          ++f.children;
          stack.push_back({y, e, 0, 0});
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (stack.empty()) {
        if (done.children >= 2) nugatory[static_cast<std::size_t>(done.v)] = 1;
        continue;
      }
      Frame& p = stack.back();
      low[static_cast<std::size_t>(p.v)] = std::min(low[static_cast<std::size_t>(p.v)], low[static_cast<std::size_t>(done.v)]);
      if (p.parent_edge >= 0 && low[static_cast<std::size_t>(done.v)] >= disc[static_cast<std::size_t>(p.v)])
        nugatory[static_cast<std::size_t>(p.v)] = 1;
    }
  }
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (nugatory[static_cast<std::size_t>(v)]) out.push_back(v);
  return out;
}

bool is_reduced(const LinkDiagram& d) { return nugatory_crossings(d).empty(); }

bool is_alternating(const LinkDiagram& d) {
  for (const auto& comp : d.components) {
    const auto& ps = comp.passages;
    for (std::size_t i = 0; i < ps.size(); ++i)
      if (ps.size() > 1 && ps[i].over == ps[(i + 1) % ps.size()].over) return false;
  }
  return true;
}

bool is_projection_connected(const LinkDiagram& d) {
  const int k = d.component_count();
  if (k <= 1) return true;
  std::vector<int> parent(static_cast<std::size_t>(k));
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& x : d.crossings) parent[static_cast<std::size_t>(find(parent, x.comp_s))] = find(parent, x.comp_t);
  const int root = find(parent, 0);
  for (int i = 1; i < k; ++i)
    if (find(parent, i) != root) return false;
  return true;
}

CrossingCertificate certify_crossing_number(const LinkDiagram& d) {
  CrossingCertificate c;
  c.crossings = d.crossing_count();
  c.certified = is_alternating(d) && is_reduced(d) && is_projection_connected(d);
  return c;
}

std::string to_string(const CrossingCertificate& c) {
  return (c.certified ? "certified(" : "upper_bound(") + std::to_string(c.crossings) + ")";
}

}  // namespace hexmo
