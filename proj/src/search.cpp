#include "hexmo/search.hpp"

#include "hexmo/diagram.hpp"
#include "hexmo/families.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>

#include <omp.h>

namespace hexmo {

std::vector<CellId> spiral_order(const Board& b) {
  std::vector<CellId> order(static_cast<std::size_t>(b.size()));
  for (CellId c = 0; c < b.size(); ++c) order[static_cast<std::size_t>(c)] = c;
  Point mid{0.0, 0.0};
  for (CellId c = 0; c < b.size(); ++c) {
    mid.x += b.center(c).x / b.size();
    mid.y += b.center(c).y / b.size();
  }
  auto key = [&](CellId c) {
    const Point p = b.center(c);
    // clockwise on screen (y down) starting from north
    double ang = std::atan2(p.x - mid.x, mid.y - p.y);
    if (ang < -1e-9) ang += 2 * M_PI;
    return std::pair{-b.depth(c), ang};
  };
  std::stable_sort(order.begin(), order.end(), [&](CellId x, CellId y) { return key(x) < key(y); });
  return order;
}

std::optional<Mosaic> try_sample_mosaic(const BoardSpec& spec, std::mt19937_64& rng) {
  Mosaic m(spec);
  const Board& b = m.board();
  const Catalog& cat = m.catalog();
  const int n = b.slots();
  std::vector<char> placed(static_cast<std::size_t>(b.size()), 0);
  std::vector<FaceId> cands;
  for (CellId c : spiral_order(b)) {
    unsigned fixed = 0, want = 0;
    for (int k = 0; k < n; ++k) {
      const CellId nb = b.neighbor(c, k);
      if (nb == kOffBoard) {
        fixed |= 1U << k;
      } else if (placed[static_cast<std::size_t>(nb)]) {
        fixed |= 1U << k;
        if (cat.used(m.at(nb)) >> b.opposite(k) & 1U) want |= 1U << k;
      }
    }
    cands.clear();
    for (int f = 0; f < cat.size(); ++f)
      if ((cat.used(static_cast<FaceId>(f)) & fixed) == want && setting_allows(spec.setting, b, c, static_cast<FaceId>(f)))
        cands.push_back(static_cast<FaceId>(f));
    if (cands.empty()) return std::nullopt;
    std::uniform_int_distribution<std::size_t> pick(0, cands.size() - 1);
    m.set(c, cands[pick(rng)]);
    placed[static_cast<std::size_t>(c)] = 1;
  }
  return m;
}

Mosaic sample_mosaic(const BoardSpec& spec, std::mt19937_64& rng, int attempts) {
  for (int i = 0; i < attempts; ++i)
    if (auto m = try_sample_mosaic(spec, rng)) return *m;
  throw SearchError("no mosaic sampled within " + std::to_string(attempts) + " attempts");
}

std::vector<Mosaic> component_knots(const Mosaic& m) {
  const LinkDiagram d = extract(m);
  std::vector<Mosaic> out;
  for (const auto& comp : d.components) {
    std::vector<std::pair<CellId, int>> keep;
    for (const auto& w : comp.walk) keep.emplace_back(w.cell, w.strand);
    out.push_back(restrict_strands(m, keep));
  }
  return out;
}

Mosaic sample_knot(const BoardSpec& spec, std::mt19937_64& rng, int min_crossings, int attempts) {
  for (int i = 0; i < attempts; ++i) {
    auto m = try_sample_mosaic(spec, rng);
    if (!m) continue;
    auto knots = component_knots(*m);
    std::erase_if(knots, [&](const Mosaic& k) { return k.crossing_count() < min_crossings; });
    if (knots.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, knots.size() - 1);
    return knots[pick(rng)];
  }
  throw SearchError("no knot sampled within " + std::to_string(attempts) + " attempts");
}

std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t i) {
  // splitmix64 of the pair keeps sample streams independent of thread scheduling
  std::uint64_t z = seed * 0x9E3779B97F4A7C15ULL + i + 0x632BE59BD9B4E019ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return std::mt19937_64(z);
}

std::string_view to_string(SearchMode m) {
  switch (m) {
    case SearchMode::exhaustive: return "exhaustive";
    case SearchMode::saturated_smoothing: return "saturated-smoothing";
    case SearchMode::randomized: return "randomized";
  }
  return "?";
}

SearchMode parse_search_mode(std::string_view text) {
  if (text == "exhaustive") return SearchMode::exhaustive;
  if (text == "saturated-smoothing" || text == "smoothing") return SearchMode::saturated_smoothing;
  if (text == "randomized" || text == "random") return SearchMode::randomized;
  throw SearchError("unknown search mode '" + std::string(text) + "'");
}

KnotScore score_knot(const Mosaic& knot) {
  const LinkDiagram d = extract(knot);
  KnotScore s;
  s.crossings = d.crossing_count();
  s.reduced = s.crossings - static_cast<int>(nugatory_crossings(d).size());
  s.certified = certify_crossing_number(d).certified;
  return s;
}

namespace {

// Partial result of a shard; merged in shard order so the outcome is independent
// of how shards were scheduled.
struct Partial {
  int max_crossings = -1, max_reduced = -1, max_certified = -1;
  std::optional<Mosaic> witness, raw_witness;
  std::uint64_t mosaics = 0, knots = 0;

  void offer(const Mosaic& knot) {
    ++knots;
    const KnotScore s = score_knot(knot);
    if (s.crossings > max_crossings) {
      max_crossings = s.crossings;
      raw_witness = knot;
    }
    if (s.reduced > max_reduced) {
      max_reduced = s.reduced;
      witness = knot;
    }
    if (s.certified) max_certified = std::max(max_certified, s.crossings);
  }

  void merge(Partial&& o) {
    if (o.max_crossings > max_crossings) {
      max_crossings = o.max_crossings;
      raw_witness = std::move(o.raw_witness);
    }
    if (o.max_reduced > max_reduced) {
      max_reduced = o.max_reduced;
      witness = std::move(o.witness);
    }
    max_certified = std::max(max_certified, o.max_certified);
    mosaics += o.mosaics;
    knots += o.knots;
  }
};

void offer_mosaic(Partial& p, const Mosaic& m) {
  ++p.mosaics;
  if (extract(m).component_count() == 1) p.offer(m);
}

// Runs `shard(i)` for i in [0, n) serially or with OpenMP and merges in index order.
Partial run_shards(std::size_t n, bool parallel, const std::function<Partial(std::size_t)>& shard) {
  std::vector<Partial> parts(n);
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(n); ++i) parts[static_cast<std::size_t>(i)] = shard(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < n; ++i) parts[i] = shard(i);
  }
  Partial all;
  for (auto& p : parts) all.merge(std::move(p));
  return all;
}

// All assignments of the interior cells that agree across interior edges.
std::vector<Mosaic> interior_fills(const BoardSpec& spec) {
  Mosaic m(spec);
  const Board& b = m.board();
  const Catalog& cat = m.catalog();
  const auto& cells = b.interior();
  std::vector<char> placed(static_cast<std::size_t>(b.size()), 0);
  std::vector<Mosaic> out;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == cells.size()) {
      out.push_back(m);
      return;
    }
    const CellId c = cells[i];
    for (int f = 0; f < cat.size(); ++f) {
      bool ok = true;
      for (int k = 0; k < b.slots() && ok; ++k) {
        const CellId nb = b.neighbor(c, k);
        if (nb == kOffBoard || !placed[static_cast<std::size_t>(nb)]) continue;
        ok = ((cat.used(static_cast<FaceId>(f)) >> k) & 1U) == ((cat.used(m.at(nb)) >> b.opposite(k)) & 1U);
      }
      if (!ok) continue;
      m.set(c, static_cast<FaceId>(f));
      placed[static_cast<std::size_t>(c)] = 1;
      rec(i + 1);
      placed[static_cast<std::size_t>(c)] = 0;
    }
    m.set(c, cat.blank());
  };
  rec(0);
  return out;
}

// Faces reachable from `f` by smoothing exactly j crossings, for j = 0..crossings(f).
std::vector<std::vector<FaceId>> smoothing_variants(const Catalog& cat, FaceId f) {
  std::vector<std::vector<FaceId>> by_depth(static_cast<std::size_t>(cat.crossings(f)) + 1);
  by_depth[0] = {f};
  for (std::size_t j = 1; j < by_depth.size(); ++j) {
    std::set<FaceId> next;
    for (FaceId g : by_depth[j - 1])
      for (int id = 0; id < cat.crossings(g); ++id)
        for (int choice = 0; choice < 2; ++choice)
          if (const int h = cat.smooth(g, id, choice); h >= 0) next.insert(static_cast<FaceId>(h));
    by_depth[j].assign(next.begin(), next.end());
  }
  return by_depth;
}

}  // namespace

SearchResult search_max_knot(int r, Setting setting, const SearchOptions& opt) {
  const Geometry g = geometry_of(setting);
  const BoardSpec spec{g, r, setting};
  if (r < 1) throw SearchError("board size must be at least 1");
  SearchResult res;
  res.bound = knot_supported(r, setting) ? predicted(r, setting).knot_crossing_bound : 0;
  Partial all;
  switch (opt.mode) {
    case SearchMode::exhaustive: {
      if ((g == Geometry::hex && r > 2) || (g == Geometry::rect && r > 4))
        throw SearchError("exhaustive search is limited to hexagonal 2-mosaics and rectangular 4-mosaics");
      const auto fills = interior_fills(spec);
      all = run_shards(fills.size(), opt.parallel, [&](std::size_t i) {
        Partial p;
        for_each_boundary_closure(fills[i], {}, [&](const Mosaic& m) {
          offer_mosaic(p, m);
          return true;
        });
        return p;
      });
      break;
    }
    case SearchMode::saturated_smoothing: {
      if (g != Geometry::hex || r > 3 || r < 2)
        throw SearchError("saturated-smoothing search is limited to hexagonal boards with r = 2 or 3");
      ClosureOptions copt;
      copt.projections_only = setting == Setting::hex_enhanced;
      const auto closures = boundary_closures(saturated_interior(spec), copt);
      const Catalog& cat = Catalog::get(g);
      const Board& b = *Board::get(spec);
      const auto variants = smoothing_variants(cat, cat.id(saturated_hex_tile()));
      const auto& cells = b.interior();
      const int depth = std::max(0, opt.max_smoothings);
      all = run_shards(closures.size(), opt.parallel, [&](std::size_t i) {
        Partial p;
        Mosaic m = closures[i];
        std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
          if (k == cells.size()) {
            offer_mosaic(p, m);
            return;
          }
          const FaceId keep = m.at(cells[k]);
          for (int j = 0; j <= left && j < static_cast<int>(variants.size()); ++j)
            for (FaceId f : variants[static_cast<std::size_t>(j)]) {
              m.set(cells[k], f);
              rec(k + 1, left - j);
            }
          m.set(cells[k], keep);
        };
        rec(0, depth);
        return p;
      });
      break;
    }
    case SearchMode::randomized: {
      constexpr std::uint64_t block = 256;
      const std::uint64_t blocks = (opt.samples + block - 1) / block;
      all = run_shards(blocks, opt.parallel, [&](std::size_t bi) {
        Partial p;
        const std::uint64_t end = std::min<std::uint64_t>(opt.samples, (bi + 1) * block);
        for (std::uint64_t i = bi * block; i < end; ++i) {
          auto rng = sample_rng(opt.seed, i);
          if (auto m = try_sample_mosaic(spec, rng)) {
            ++p.mosaics;
            for (const Mosaic& k : component_knots(*m)) p.offer(k);
          }
        }
        return p;
      });
      break;
    }
  }
  res.max_crossings = all.max_crossings;
  res.max_reduced = all.max_reduced;
  res.max_certified = all.max_certified;
  res.witness = std::move(all.witness);
  res.raw_witness = std::move(all.raw_witness);
  res.mosaics = all.mosaics;
  res.knots = all.knots;
  res.exceeded_bound = res.max_reduced > res.bound || res.max_certified > res.bound;
  return res;
}

}  // namespace hexmo
