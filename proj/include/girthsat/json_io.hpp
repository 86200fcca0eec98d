#pragma once

#include <string>

#include <json.hpp>

#include "girthsat/embedded_graph.hpp"
#include "girthsat/metrics.hpp"
#include "girthsat/saturation.hpp"

namespace girthsat {

// Graph interchange format. Keys: "vertex_count", "edges" ([u,v] pairs,
// edge id = array index, dart 2i at the lower endpoint), "rotation" (dart
// ids per vertex), "signs" (+1/-1 per edge), "surface" ({"orientable",
// "genus"}). No extra keys are permitted.
nlohmann::ordered_json graph_to_json(const EmbeddedGraph& g);
EmbeddedGraph graph_from_json(const nlohmann::json& j);

EmbeddedGraph read_graph_file(const std::string& path);
void write_graph_file(const EmbeddedGraph& g, const std::string& path);

nlohmann::ordered_json report_to_json(const SaturationReport& rep);
nlohmann::ordered_json lens_to_json(const LensCertificate& cert);

// Canonical dump used everywhere a JSON document leaves the library.
std::string dump_json(const nlohmann::ordered_json& j);

}  // namespace girthsat
