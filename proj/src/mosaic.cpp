#include "hexmo/mosaic.hpp"

#include <algorithm>
#include <array>

namespace hexmo {

Mosaic::Mosaic(BoardSpec spec)
    : board_(Board::get(spec)),
      catalog_(&Catalog::get(spec.geometry)),
      faces_(static_cast<std::size_t>(board_->size()), Catalog::get(spec.geometry).blank()) {}

int Mosaic::crossing_count() const {
  int n = 0;
  for (FaceId f : faces_) n += catalog_->crossings(f);
  return n;
}

bool setting_allows(Setting s, const Board& b, CellId c, FaceId f) {
  if (!b.is_boundary(c)) return true;
  const Catalog& cat = Catalog::get(b.geometry());
  switch (s) {
    case Setting::rect:
    case Setting::hex_semi_enhanced:
      return cat.crossings(f) == 0;
    case Setting::hex_standard:
      return cat.crossings(f) == 0 && !cat.properties(f).is_band_pairing;
    case Setting::hex_enhanced:
      return true;
  }
  return false;
}

std::vector<Violation> validate(const Mosaic& m) {
  const Board& b = m.board();
  const Catalog& cat = m.catalog();
  std::vector<Violation> out;
  for (CellId c = 0; c < b.size(); ++c) {
    const FaceId f = m.at(c);
    for (int k = 0; k < b.slots(); ++k) {
      if (!(cat.used(f) >> k & 1U)) continue;
      const CellId nb = b.neighbor(c, k);
      if (nb == kOffBoard) {
        out.push_back({{c, k}, "strand reaches the outer edge of the board"});
      } else if (!(cat.used(m.at(nb)) >> b.opposite(k) & 1U)) {
        out.push_back({b.canonical({c, k}), "dangling connection point"});
      }
    }
    if (!setting_allows(b.spec().setting, b, c, f))
      out.push_back({{c, -1}, "face " + cat.code(f) + " is not allowed on the boundary in the " +
                                  std::string(to_string(b.spec().setting)) + " setting"});
  }
  return out;
}

std::vector<std::vector<CellId>> hex_sides(const Board& b) {
  std::vector<std::vector<CellId>> sides;
  if (b.geometry() != Geometry::hex || b.radius() < 2) return sides;
  const auto& ring = b.ring();
  for (CellId c : ring) {
    if (b.classify(c) == CellClass::boundary_corner)
      sides.emplace_back();
    else
      sides.back().push_back(c);
  }
  return sides;
}

bool is_saturated(const Mosaic& m) {
  const Board& b = m.board();
  const Catalog& cat = m.catalog();
  if (b.interior().empty()) return false;
  const int full = b.geometry() == Geometry::hex ? 3 : 1;
  for (CellId c : b.interior())
    if (cat.crossings(m.at(c)) != full) return false;
  if (b.spec().setting != Setting::hex_enhanced) return true;
  const auto sides = hex_sides(b);
  std::array<bool, 6> full_side{};
  std::array<bool, 6> any_crossing{};
  for (std::size_t s = 0; s < sides.size(); ++s) {
    full_side[s] = true;
    for (CellId c : sides[s]) {
      const bool x = cat.crossings(m.at(c)) > 0;
      full_side[s] = full_side[s] && x;
      any_crossing[s] = any_crossing[s] || x;
    }
  }
  for (int start = 0; start < 2; ++start) {
    bool ok = true;
    for (int s = 0; s < 6; ++s) {
      const bool want = (s % 2) == start;
      if (want ? !full_side[s] : any_crossing[s]) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

namespace {

// Per ring position: the cell, its slots toward the previous and next ring cells,
// and the candidate faces for each (prev bit, next bit).
struct RingPlan {
  std::vector<CellId> cells;
  std::vector<std::array<std::vector<FaceId>, 4>> cand;  // index prev_bit * 2 + next_bit
};

RingPlan plan_ring(const Mosaic& interior, const ClosureOptions& opt) {
  const Board& b = interior.board();
  const Catalog& cat = interior.catalog();
  const Setting setting = opt.setting.value_or(b.spec().setting);
  RingPlan plan;
  const auto& ring = b.ring();
  const int R = static_cast<int>(ring.size());
  plan.cells = ring;
  plan.cand.resize(ring.size());
  for (int i = 0; i < R; ++i) {
    const CellId c = ring[static_cast<std::size_t>(i)];
    const CellId prev = ring[static_cast<std::size_t>((i + R - 1) % R)];
    const CellId next = ring[static_cast<std::size_t>((i + 1) % R)];
    int slot_prev = -1, slot_next = -1;
    unsigned forced = 0;
    for (int k = 0; k < b.slots(); ++k) {
      const CellId nb = b.neighbor(c, k);
      if (nb == kOffBoard) continue;
      if (R > 1 && nb == prev) slot_prev = k;
      else if (R > 1 && nb == next) slot_next = k;
      else if (b.is_interior(nb) && (cat.used(interior.at(nb)) >> b.opposite(k) & 1U)) forced |= 1U << k;
    }
    for (int pb = 0; pb < 2; ++pb)
      for (int nb = 0; nb < 2; ++nb) {
        auto& list = plan.cand[static_cast<std::size_t>(i)][static_cast<std::size_t>(pb * 2 + nb)];
        if (R == 1 && (pb || nb)) continue;
        unsigned mask = forced;
        if (pb) mask |= 1U << slot_prev;
        if (nb) mask |= 1U << slot_next;
        if (auto it = opt.pinned.find(c); it != opt.pinned.end()) {
          if (cat.used(it->second) == mask) list.push_back(it->second);
          continue;
        }
        for (FaceId f : cat.with_used(mask)) {
          if (!setting_allows(setting, b, c, f)) continue;
          if (opt.projections_only) {
            bool first_state = true;
            for (const auto& x : cat.crossing_list(f)) first_state = first_state && x.s_over;
            if (!first_state) continue;
          }
          list.push_back(f);
        }
      }
  }
  return plan;
}

}  // namespace

void for_each_boundary_closure(const Mosaic& interior, const ClosureOptions& opt,
                               const std::function<bool(const Mosaic&)>& visit) {
  const RingPlan plan = plan_ring(interior, opt);
  const int R = static_cast<int>(plan.cells.size());
  Mosaic work = interior;
  bool stop = false;
  std::size_t emitted = 0;
  // bit0 = whether the first cell uses its slot toward the last cell
  std::function<void(int, int, int)> rec = [&](int i, int prev_bit, int bit0) {
    if (stop) return;
    if (i == R) {
      ++emitted;
      if (!visit(work) || (opt.limit && emitted >= opt.limit)) stop = true;
      return;
    }
    const auto& cands = plan.cand[static_cast<std::size_t>(i)];
    std::vector<std::pair<FaceId, int>> options;
    for (int nb = 0; nb < 2; ++nb) {
      if (i == R - 1 && nb != bit0) continue;
      for (FaceId f : cands[static_cast<std::size_t>(prev_bit * 2 + nb)]) options.emplace_back(f, nb);
    }
    std::sort(options.begin(), options.end());
    for (auto [f, nb] : options) {
      work.set(plan.cells[static_cast<std::size_t>(i)], f);
      rec(i + 1, nb, bit0);
      if (stop) return;
    }
  };
  if (R == 1) {
    for (FaceId f : plan.cand[0][0]) {
      work.set(plan.cells[0], f);
      if (!visit(work)) return;
    }
    return;
  }
  for (int bit0 = 0; bit0 < 2 && !stop; ++bit0) rec(0, bit0, bit0);
}

std::vector<Mosaic> boundary_closures(const Mosaic& interior, const ClosureOptions& opt) {
  std::vector<Mosaic> out;
  for_each_boundary_closure(interior, opt, [&](const Mosaic& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

std::size_t count_boundary_closures(const Mosaic& interior, const ClosureOptions& opt) {
  const RingPlan plan = plan_ring(interior, opt);
  const int R = static_cast<int>(plan.cells.size());
  if (R == 1) return plan.cand[0][0].size();
  std::size_t total = 0;
  for (int bit0 = 0; bit0 < 2; ++bit0) {
    std::array<std::size_t, 2> ways{};
    ways[static_cast<std::size_t>(bit0)] = 1;
    for (int i = 0; i < R; ++i) {
      std::array<std::size_t, 2> next{};
      for (int pb = 0; pb < 2; ++pb)
        for (int nb = 0; nb < 2; ++nb)
          next[static_cast<std::size_t>(nb)] +=
              ways[static_cast<std::size_t>(pb)] *
              plan.cand[static_cast<std::size_t>(i)][static_cast<std::size_t>(pb * 2 + nb)].size();
      ways = next;
    }
    total += ways[static_cast<std::size_t>(bit0)];
  }
  return total;
}

EditResult edit_replace(const Mosaic& m, CellId c, const TileFace& t) {
  Mosaic out = m;
  out.set_face(c, t);
  auto v = validate(out);
  return {std::move(out), std::move(v)};
}

EditResult edit_smooth(const Mosaic& m, CellId c, int id, int choice) {
  return edit_replace(m, c, smooth_tile(m.face(c), id, choice));
}

Mosaic rotate_mosaic(const Mosaic& m, int k) {
  const Board& b = m.board();
  Mosaic out(m.spec());
  for (CellId c = 0; c < b.size(); ++c) out.set(b.rotate_cell(c, k), m.catalog().rotate(m.at(c), k));
  return out;
}

Mosaic restrict_strands(const Mosaic& m, const std::vector<std::pair<CellId, int>>& keep) {
  std::vector<unsigned> masks(static_cast<std::size_t>(m.size()), 0);
  for (auto [c, s] : keep) masks[static_cast<std::size_t>(c)] |= 1U << s;
  Mosaic out = m;
  for (CellId c = 0; c < m.size(); ++c) out.set_face(c, keep_strands(m.face(c), masks[static_cast<std::size_t>(c)]));
  return out;
}

}  // namespace hexmo
