#include "hexmo/report.hpp"

#include "hexmo/diagram.hpp"
#include "hexmo/io.hpp"

namespace hexmo {

namespace {

Json cell_json(const Board& b, CellId c) {
  auto [row, col] = b.row_col(c);
  return Json{{"row", row}, {"col", col}};
}

Json cells_json(const Board& b, const std::vector<CellId>& cells) {
  Json out = Json::array();
  for (CellId c : cells) out.push_back(cell_json(b, c));
  return out;
}

Json sw_json(std::pair<int, int> sw) { return Json{{"loops", sw.first}, {"arcs", sw.second}}; }

}  // namespace

Json edge_json(const Board& b, EdgeRef e) {
  Json j = cell_json(b, e.cell);
  if (e.slot >= 0) j["slot"] = e.slot;
  return j;
}

Json violations_json(const Mosaic& m, const std::vector<Violation>& v) {
  Json out = Json::array();
  for (const Violation& x : v) {
    Json j = edge_json(m.board(), x.where);
    j["reason"] = x.reason;
    out.push_back(j);
  }
  return out;
}

Json catalog_json(Geometry g, bool oriented) {
  Json out = Json::array();
  if (oriented) {
    const Catalog& cat = Catalog::get(g);
    for (int f = 0; f < cat.size(); ++f) {
      const auto id = static_cast<FaceId>(f);
      out.push_back(Json{{"id", f},
                         {"code", cat.code(id)},
                         {"class", cat.class_id(id)},
                         {"arcs", cat.strands(id)},
                         {"crossings", cat.crossings(id)}});
    }
    return out;
  }
  for (const TileClass& c : enumerate_catalog(g)) {
    const TileProperties p = tile_properties(c.canonical);
    Json j{{"class", c.class_id},
           {"code", tile_code(c.canonical)},
           {"tile_number", c.tile_number ? Json(*c.tile_number) : Json(nullptr)},
           {"orientations", c.orientations},
           {"arcs", p.arc_count},
           {"crossings", p.crossing_count},
           {"alternating_3crossing", p.is_alternating_3crossing},
           {"band_pairing", p.is_band_pairing}};
    out.push_back(j);
  }
  return out;
}

Json analysis_json(const Mosaic& m) {
  const auto violations = validate(m);
  Json j{{"geometry", to_string(m.spec().geometry)},
         {"r", m.spec().r},
         {"setting", to_string(m.spec().setting)},
         {"valid", violations.empty()},
         {"violations", violations_json(m, violations)}};
  if (!violations.empty()) return j;
  const LinkDiagram d = extract(m);
  const CrossingCertificate cert = certify_crossing_number(d);
  Json nug = Json::array();
  for (int x : nugatory_crossings(d)) nug.push_back(x + 1);
  j["components"] = d.component_count();
  j["crossings"] = d.crossing_count();
  j["saturated"] = is_saturated(m);
  j["alternating"] = is_alternating(d);
  j["nugatory"] = nug;
  j["reduced"] = nug.empty();
  j["projection_connected"] = is_projection_connected(d);
  j["certificate"] = Json{{"certified", cert.certified}, {"crossings", cert.crossings}};
  j["gauss_code"] = gauss_code(d);
  return j;
}

Json complement_json(const Mosaic& m, const ComplementDecomposition& c) {
  const Board& b = m.board();
  Json cells = Json::array();
  for (CellId x = 0; x < b.size(); ++x) {
    if (c.arcs[static_cast<std::size_t>(x)].empty()) continue;
    Json j = cell_json(b, x);
    j["arcs"] = arc_code(c.arcs[static_cast<std::size_t>(x)]);
    if (c.choice[static_cast<std::size_t>(x)] >= 0) j["choice"] = c.choice[static_cast<std::size_t>(x)];
    cells.push_back(j);
  }
  Json comps = Json::array();
  for (const ComplementComponent& k : c.components) {
    Json j{{"kind", k.loop ? "loop" : "arc"}, {"pieces", k.walk.size()}};
    if (!k.loop) j["ends"] = Json::array({edge_json(b, k.ends[0]), edge_json(b, k.ends[1])});
    comps.push_back(j);
  }
  return Json{{"policy", to_string(c.policy)},
              {"loops", c.loop_count()},
              {"arcs", c.arc_count()},
              {"cells", cells},
              {"components", comps},
              {"problems", complement_problems(m, c)}};
}

Json region_json(const Mosaic& m, const RegionPartition& p) {
  const Board& b = m.board();
  return Json{{"arc", p.arc},
              {"outermost", p.outermost},
              {"ends", Json::array({edge_json(b, p.ends[0]), edge_json(b, p.ends[1])})},
              {"A", cells_json(b, p.arc_cells)},
              {"A_ring", cells_json(b, p.arc_ends)},
              {"I", cells_json(b, p.inside)},
              {"I_ring", cells_json(b, p.inside_ring)},
              {"O", cells_json(b, p.outside)},
              {"O_ring", cells_json(b, p.outside_ring)}};
}

Json trace_json(const Mosaic& m, const PipelineTrace& t) {
  Json stages = Json::array();
  for (const StageRecord& s : t.stages)
    stages.push_back(Json{{"name", s.name},
                          {"crossings", s.crossings},
                          {"components", s.components},
                          {"mosaic", write_mosaic(s.mosaic)}});
  return Json{{"region", region_json(m, t.region)},
              {"before", sw_json(t.sw_before)},
              {"after", sw_json(t.sw_after)},
              {"lost_boundary_crossings", t.lost_boundary_crossings},
              {"outside_edges", t.outside_edges},
              {"aligned_cells", t.aligned_cells},
              {"actions", t.actions},
              {"stages", stages}};
}

Json failure_json(const PreconditionFailed& f) { return Json{{"stage", f.stage}, {"reason", f.reason}}; }

Json reduction_json(const Mosaic& input, const Reduction& r) {
  Json hist = Json::array();
  for (auto sw : r.sw_history) hist.push_back(sw_json(sw));
  Json traces = Json::array();
  for (const PipelineTrace& t : r.traces) traces.push_back(trace_json(input, t));
  Json j{{"success", !r.failure},
         {"input_crossings", input.crossing_count()},
         {"output_crossings", r.mosaic.crossing_count()},
         {"loop_merges", r.loop_merges},
         {"history", hist},
         {"traces", traces},
         {"mosaic", write_mosaic(r.mosaic)}};
  if (r.failure) j["failure"] = failure_json(*r.failure);
  return j;
}

Json schedule_json(const Mosaic& parent, const SmoothingSchedule& s) {
  Json out = Json::array();
  for (const ScheduleStep& st : s) {
    Json j = cell_json(parent.board(), st.cell);
    j["crossing"] = st.crossing;
    j["choice"] = st.choice;
    j["role"] = to_string(st.role);
    out.push_back(j);
  }
  return out;
}

Json verification_json(const VerificationReport& r) {
  Json rows = Json::array();
  for (const ClaimRow& row : r.rows)
    rows.push_back(Json{{"id", row.id},
                        {"anchor", row.anchor},
                        {"r", row.r},
                        {"setting", to_string(row.setting)},
                        {"expected", row.expected},
                        {"observed", row.observed},
                        {"pass", row.pass}});
  return Json{{"passed", r.passed()}, {"failed", r.failed()}, {"rows", rows}};
}

Json search_json(const SearchResult& res, int r_value, Setting s, const SearchOptions& opt) {
  Json j{{"r", r_value},
         {"setting", to_string(s)},
         {"mode", to_string(opt.mode)},
         {"max_crossings", res.max_crossings},
         {"max_reduced", res.max_reduced},
         {"max_certified", res.max_certified},
         {"bound", res.bound},
         {"exceeded_bound", res.exceeded_bound},
         {"mosaics", res.mosaics},
         {"knots", res.knots}};
  if (opt.mode == SearchMode::randomized) {
    j["seed"] = opt.seed;
    j["samples"] = opt.samples;
  }
  if (res.witness) j["witness"] = write_mosaic(*res.witness);
  return j;
}

}  // namespace hexmo
