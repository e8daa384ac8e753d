#pragma once

// JSON views of library results, as emitted by the command-line tool.
// Mosaics inside reports are strings in the hexmo v1 file format.

#include "hexmo/complement.hpp"
#include "hexmo/families.hpp"
#include "hexmo/search.hpp"
#include "hexmo/verify.hpp"

#include <json.hpp>

namespace hexmo {

using Json = nlohmann::ordered_json;

/// {"row", "col", "slot"}; slot is omitted for tile-level references (slot -1).
Json edge_json(const Board& b, EdgeRef e);
Json violations_json(const Mosaic& m, const std::vector<Violation>& v);
Json catalog_json(Geometry g, bool oriented);
Json analysis_json(const Mosaic& m);
Json complement_json(const Mosaic& m, const ComplementDecomposition& c);
Json region_json(const Mosaic& m, const RegionPartition& p);
Json trace_json(const Mosaic& m, const PipelineTrace& t);
Json failure_json(const PreconditionFailed& f);
Json reduction_json(const Mosaic& input, const Reduction& r);
Json schedule_json(const Mosaic& parent, const SmoothingSchedule& s);
Json verification_json(const VerificationReport& r);
Json search_json(const SearchResult& r, int r_value, Setting s, const SearchOptions& opt);

}  // namespace hexmo
