// hexmo: command-line front end for the knot mosaic library.
//
// Exit codes: 0 success, 1 violations or failed checks (including unreadable
// input files), 2 usage errors.

#include "hexmo/complement.hpp"
#include "hexmo/diagram.hpp"
#include "hexmo/families.hpp"
#include "hexmo/io.hpp"
#include "hexmo/render.hpp"
#include "hexmo/report.hpp"
#include "hexmo/search.hpp"
#include "hexmo/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace hexmo;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  bool json = false;
  std::string output;
};

void emit(const Common& c, const std::string& text) {
  if (c.output.empty() || c.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(c.output, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + c.output);
  out << text;
}

void emit_json(const Common& c, const Json& j) { emit(c, j.dump(2) + "\n"); }

Setting setting_arg(const std::string& s) {
  try {
    return parse_setting(s);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

std::vector<std::string> describe_violations(const Mosaic& m, const std::vector<Violation>& v) {
  std::vector<std::string> out;
  for (const Violation& x : v) {
    auto [row, col] = m.board().row_col(x.where.cell);
    std::string s = "cell " + std::to_string(row) + " " + std::to_string(col);
    if (x.where.slot >= 0) s += " slot " + std::to_string(x.where.slot);
    out.push_back(s + ": " + x.reason);
  }
  return out;
}

std::string sw_text(std::pair<int, int> sw) {
  return "(s, w) = (" + std::to_string(sw.first) + ", " + std::to_string(sw.second) + ")";
}

// Reads a mosaic and insists that it is valid; prints violations and returns nullopt otherwise.
std::optional<Mosaic> load_valid(const std::string& path, const Common& c) {
  Mosaic m = read_mosaic_file(path);
  const auto v = validate(m);
  if (v.empty()) return m;
  if (c.json)
    emit_json(c, Json{{"valid", false}, {"violations", violations_json(m, v)}});
  else
    for (const auto& line : describe_violations(m, v)) std::cerr << path << ": " << line << "\n";
  return std::nullopt;
}

int cmd_catalog(const Common& c, const std::string& geometry, bool oriented) {
  const Geometry g = parse_geometry(geometry);
  if (c.json) {
    emit_json(c, catalog_json(g, oriented));
    return 0;
  }
  std::ostringstream out;
  if (oriented) {
    const Catalog& cat = Catalog::get(g);
    for (int f = 0; f < cat.size(); ++f)
      out << f << "\t" << cat.code(static_cast<FaceId>(f)) << "\tclass " << cat.class_id(static_cast<FaceId>(f)) << "\n";
  } else {
    out << "class\ttile\tarcs\tcrossings\trotations\tcode\n";
    for (const TileClass& t : enumerate_catalog(g)) {
      const TileProperties p = tile_properties(t.canonical);
      out << t.class_id << "\t" << (t.tile_number ? std::to_string(*t.tile_number) : "?") << "\t" << p.arc_count
          << "\t" << p.crossing_count << "\t" << t.orientations << "\t" << tile_code(t.canonical) << "\n";
    }
  }
  emit(c, out.str());
  return 0;
}

int cmd_gen(const Common& c, int r, const std::string& setting, const std::string& kind) {
  const Setting s = setting_arg(setting);
  if (kind == "link") {
    const Mosaic m = gen_link(r, s);
    emit(c, c.json ? Json{{"kind", "link"}, {"mosaic", write_mosaic(m)}, {"analysis", analysis_json(m)}}.dump(2) + "\n"
                   : write_mosaic(m));
    return 0;
  }
  if (kind == "knot") {
    const KnotWithSchedule k = gen_knot(r, s);
    if (c.json)
      emit_json(c, Json{{"kind", "knot"},
                        {"mosaic", write_mosaic(k.knot)},
                        {"parent", write_mosaic(k.parent)},
                        {"schedule", schedule_json(k.parent, k.schedule)},
                        {"analysis", analysis_json(k.knot)}});
    else
      emit(c, write_mosaic(k.knot));
    return 0;
  }
  if (kind == "interior") {
    const Mosaic m = saturated_interior(geometry_of(s) == Geometry::hex ? BoardSpec::hex(r, s) : BoardSpec::rect(r));
    emit(c, c.json ? Json{{"kind", "interior"}, {"mosaic", write_mosaic(m)}}.dump(2) + "\n" : write_mosaic(m));
    return 0;
  }
  throw UsageError("unknown kind '" + kind + "' (expected link, knot or interior)");
}

int cmd_validate(const Common& c, const std::string& path) {
  const Mosaic m = read_mosaic_file(path);
  const auto v = validate(m);
  if (c.json) {
    emit_json(c, Json{{"valid", v.empty()}, {"violations", violations_json(m, v)}});
  } else {
    std::string text = v.empty() ? "valid\n" : "";
    for (const auto& line : describe_violations(m, v)) text += line + "\n";
    emit(c, text);
  }
  return v.empty() ? 0 : 1;
}

int cmd_analyze(const Common& c, const std::string& path) {
  const Mosaic m = read_mosaic_file(path);
  const Json j = analysis_json(m);
  if (c.json) {
    emit_json(c, j);
    return j["valid"].get<bool>() ? 0 : 1;
  }
  if (!j["valid"].get<bool>()) {
    std::string text;
    for (const auto& line : describe_violations(m, validate(m))) text += line + "\n";
    emit(c, text);
    return 1;
  }
  std::ostringstream out;
  out << "board:        " << j["geometry"].get<std::string>() << " r=" << j["r"] << " " << j["setting"].get<std::string>() << "\n"
      << "components:   " << j["components"] << "\n"
      << "crossings:    " << j["crossings"] << "\n"
      << "saturated:    " << (j["saturated"].get<bool>() ? "yes" : "no") << "\n"
      << "alternating:  " << (j["alternating"].get<bool>() ? "yes" : "no") << "\n"
      << "nugatory:     " << j["nugatory"].dump() << "\n"
      << "certificate:  " << to_string(certify_crossing_number(extract(m))) << "\n"
      << "gauss code:   " << j["gauss_code"].get<std::string>() << "\n";
  emit(c, out.str());
  return 0;
}

int cmd_complement(const Common& c, const std::string& path, const std::string& policy, std::size_t enumerate) {
  const auto m = load_valid(path, c);
  if (!m) return 1;
  if (enumerate > 0) {
    const auto all = enumerate_complements(*m, enumerate);
    std::size_t bad = 0;
    Json list = Json::array();
    for (const auto& d : all) {
      if (!complement_problems(*m, d).empty()) ++bad;
      list.push_back(complement_json(*m, d));
    }
    if (c.json) {
      emit_json(c, Json{{"count", all.size()}, {"with_problems", bad}, {"complements", list}});
    } else {
      std::ostringstream out;
      for (std::size_t i = 0; i < all.size(); ++i) out << i << "\t" << sw_text(all[i].sw()) << "\n";
      out << all.size() << " complements, " << bad << " with problems\n";
      emit(c, out.str());
    }
    return bad == 0 ? 0 : 1;
  }
  const ComplementDecomposition d = compute_complement(*m, parse_complement_policy(policy));
  const Json j = complement_json(*m, d);
  if (c.json) {
    emit_json(c, j);
  } else {
    std::ostringstream out;
    out << sw_text(d.sw()) << "\n";
    for (const auto& cell : j["cells"])
      out << "cell " << cell["row"] << " " << cell["col"] << ": " << cell["arcs"].get<std::string>() << "\n";
    for (const auto& p : j["problems"]) out << "problem: " << p.get<std::string>() << "\n";
    emit(c, out.str());
  }
  return j["problems"].empty() ? 0 : 1;
}

int cmd_eliminate(const Common& c, const std::string& path, const std::string& policy) {
  const auto m = load_valid(path, c);
  if (!m) return 1;
  const ComplementDecomposition d = compute_complement(*m, parse_complement_policy(policy));
  const Elimination e = eliminate_outermost_arc(*m, d);
  if (const auto* f = std::get_if<PreconditionFailed>(&e)) {
    if (c.json)
      emit_json(c, Json{{"success", false}, {"failure", failure_json(*f)}});
    else
      emit(c, "precondition failed at " + f->stage + ": " + f->reason + "\n");
    return 1;
  }
  const PipelineTrace& t = std::get<PipelineTrace>(e);
  if (c.json) {
    Json j = trace_json(*m, t);
    j["success"] = true;
    emit_json(c, j);
    return 0;
  }
  std::ostringstream out;
  out << sw_text(t.sw_before) << " -> " << sw_text(t.sw_after) << "\n";
  for (const StageRecord& s : t.stages)
    out << s.name << ": " << s.crossings << " crossings, " << s.components << " components\n";
  out << "lost boundary crossings: " << t.lost_boundary_crossings << ", outside edges: " << t.outside_edges << "\n";
  for (const auto& a : t.actions) out << "  " << a << "\n";
  out << "\n" << write_mosaic(t.output());
  emit(c, out.str());
  return 0;
}

int cmd_reduce(const Common& c, const std::string& path, const std::string& policy) {
  const auto m = load_valid(path, c);
  if (!m) return 1;
  const Reduction r = reduce_to_trivial(*m, parse_complement_policy(policy));
  if (c.json) {
    emit_json(c, reduction_json(*m, r));
  } else {
    std::ostringstream out;
    for (auto sw : r.sw_history) out << sw_text(sw) << "\n";
    out << "loop merges: " << r.loop_merges << ", eliminations: " << r.traces.size() << "\n";
    out << "crossings: " << m->crossing_count() << " -> " << r.mosaic.crossing_count() << "\n";
    if (r.failure) out << "precondition failed at " << r.failure->stage << ": " << r.failure->reason << "\n";
    else out << "\n" << write_mosaic(r.mosaic);
    emit(c, out.str());
  }
  return r.failure ? 1 : 0;
}

int cmd_verify(const Common& c, VerifyOptions opt, const std::vector<std::string>& settings) {
  if (!settings.empty()) {
    opt.settings.clear();
    for (const auto& s : settings) opt.settings.push_back(setting_arg(s));
  }
  const VerificationReport rep = verify_claims(opt);
  if (c.json) {
    emit_json(c, verification_json(rep));
  } else {
    std::ostringstream out;
    for (const ClaimRow& row : rep.rows) {
      char line[256];
      std::snprintf(line, sizeof line, "%-4s %-26s r=%-2d %-18s expected %-6ld observed %-6ld  ", row.pass ? "ok" : "FAIL",
                    row.id.c_str(), row.r, std::string(to_string(row.setting)).c_str(), row.expected, row.observed);
      out << line << row.anchor << "\n";
    }
    out << rep.passed() << " passed, " << rep.failed() << " failed\n";
    emit(c, out.str());
  }
  return rep.ok() ? 0 : 1;
}

int cmd_search(const Common& c, int r, const std::string& setting, SearchOptions opt, const std::string& mode,
               const std::string& witness_path) {
  const Setting s = setting_arg(setting);
  try {
    opt.mode = parse_search_mode(mode);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  const auto t0 = std::chrono::steady_clock::now();
  SearchResult res;
  try {
    res = search_max_knot(r, s, opt);
  } catch (const SearchError& e) {
    throw UsageError(e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!witness_path.empty() && res.witness) write_mosaic_file(*res.witness, witness_path);
  if (c.json) {
    Json j = search_json(res, r, s, opt);
    j["seconds"] = secs;
    emit_json(c, j);
  } else {
    std::ostringstream out;
    out << "mode " << to_string(opt.mode) << ", " << res.mosaics << " mosaics, " << res.knots << " knots, " << secs << " s\n"
        << "max crossings:  " << res.max_crossings << "\n"
        << "max reduced:    " << res.max_reduced << "\n"
        << "max certified:  " << res.max_certified << "\n"
        << "bound:          " << res.bound << (res.exceeded_bound ? "  EXCEEDED" : "") << "\n";
    emit(c, out.str());
  }
  return res.exceeded_bound ? 1 : 0;
}

int cmd_render(const Common& c, const std::string& path, const std::string& format, bool overlay) {
  const auto m = load_valid(path, c);
  if (!m) return 1;
  if (format == "ascii") {
    emit(c, render_ascii(*m));
    return 0;
  }
  if (format != "svg") throw UsageError("unknown format '" + format + "' (expected svg or ascii)");
  std::optional<ComplementDecomposition> comp;
  if (overlay) comp = compute_complement(*m);
  emit(c, render_svg(*m, comp));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Knot mosaics on hexagonal and rectangular boards"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_flag("--json", common.json, "Emit JSON");
  app.add_option("-o,--output", common.output, "Write to this file instead of stdout");

  std::string geometry = "hex";
  bool oriented = false;
  auto* catalog = app.add_subcommand("catalog", "List tile classes");
  catalog->add_option("-g,--geometry", geometry, "hex or rect")->capture_default_str();
  catalog->add_flag("--oriented", oriented, "List every oriented face instead of rotation classes");

  int r = 3;
  std::string setting = "hex-standard", kind = "knot";
  auto* gen = app.add_subcommand("gen", "Generate a saturated link, a reduced alternating knot or a saturated interior");
  gen->add_option("-r,--radius", r, "Board size")->capture_default_str();
  gen->add_option("-s,--setting", setting, "rect, hex-standard, hex-semi-enhanced or hex-enhanced")->capture_default_str();
  gen->add_option("-k,--kind", kind, "link, knot or interior")->capture_default_str();

  std::string file;
  auto* validate_cmd = app.add_subcommand("validate", "Check suitable connectedness and setting legality");
  validate_cmd->add_option("file", file, "Mosaic file")->required();
  auto* analyze = app.add_subcommand("analyze", "Components, crossings and crossing-number certificate");
  analyze->add_option("file", file, "Mosaic file")->required();

  std::string policy = "canonical";
  std::size_t enumerate = 0;
  auto* complement = app.add_subcommand("complement", "Compute the complement of a mosaic");
  complement->add_option("file", file, "Mosaic file")->required();
  complement->add_option("-p,--policy", policy, "canonical or loop-minimizing")->capture_default_str();
  complement->add_option("--enumerate", enumerate, "List up to N complements (all per-cell choices)");

  auto* eliminate = app.add_subcommand("eliminate", "Eliminate the outermost complement arc of a knot mosaic");
  eliminate->add_option("file", file, "Mosaic file")->required();
  eliminate->add_option("-p,--policy", policy, "Complement policy")->capture_default_str();
  auto* reduce = app.add_subcommand("reduce", "Merge loops and eliminate arcs until the complement is empty");
  reduce->add_option("file", file, "Mosaic file")->required();
  reduce->add_option("-p,--policy", policy, "Complement policy")->capture_default_str();

  VerifyOptions vopt;
  std::vector<std::string> vsettings;
  bool serial = false;
  auto* verify = app.add_subcommand("verify", "Recompute the family formulas and structural checks");
  verify->add_option("--r-min", vopt.r_min, "Smallest board size")->capture_default_str();
  verify->add_option("--r-max", vopt.r_max, "Largest board size")->capture_default_str();
  verify->add_option("-s,--settings", vsettings, "Settings to check (default: all)");
  verify->add_option("--seed", vopt.seed, "Seed for randomized rows")->capture_default_str();
  verify->add_flag("--serial", serial, "Run without threads");

  SearchOptions sopt;
  std::string mode = "randomized", witness;
  auto* search = app.add_subcommand("search", "Search for knot mosaics with many crossings");
  search->add_option("-r,--radius", r, "Board size")->capture_default_str();
  search->add_option("-s,--setting", setting, "Setting")->capture_default_str();
  search->add_option("-m,--mode", mode, "exhaustive, saturated-smoothing or randomized")->capture_default_str();
  search->add_option("--seed", sopt.seed, "Random seed")->capture_default_str();
  search->add_option("-n,--samples", sopt.samples, "Randomized sample count")->capture_default_str();
  search->add_option("--max-smoothings", sopt.max_smoothings, "Smoothing depth for saturated-smoothing mode")
      ->capture_default_str();
  search->add_option("-w,--witness", witness, "Write the best reduced witness to this file");
  search->add_flag("--serial", serial, "Run without threads");

  std::string format = "svg";
  bool overlay = false;
  auto* render = app.add_subcommand("render", "Draw a mosaic");
  render->add_option("file", file, "Mosaic file")->required();
  render->add_option("-f,--format", format, "svg or ascii")->capture_default_str();
  render->add_flag("--complement", overlay, "Overlay the canonical complement");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*catalog) return cmd_catalog(common, geometry, oriented);
    if (*gen) return cmd_gen(common, r, setting, kind);
    if (*validate_cmd) return cmd_validate(common, file);
    if (*analyze) return cmd_analyze(common, file);
    if (*complement) return cmd_complement(common, file, policy, enumerate);
    if (*eliminate) return cmd_eliminate(common, file, policy);
    if (*reduce) return cmd_reduce(common, file, policy);
    if (*verify) {
      vopt.parallel = !serial;
      return cmd_verify(common, vopt, vsettings);
    }
    if (*search) {
      sopt.parallel = !serial;
      return cmd_search(common, r, setting, sopt, mode, witness);
    }
    if (*render) return cmd_render(common, file, format, overlay);
  } catch (const UsageError& e) {
    std::cerr << "hexmo: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << file << ":" << e.line() << ":" << e.column() << ": " << e.detail() << "\n";
    return 1;
  } catch (const UnsupportedError& e) {
    std::cerr << "hexmo: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "hexmo: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "hexmo: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
