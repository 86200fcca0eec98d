#include "girthsat/json_io.hpp"

#include <fstream>
#include <set>

namespace girthsat {

namespace {

using nlohmann::json;

void require_keys(const json& j, const std::set<std::string>& keys,
                  const std::string& where) {
  if (!j.is_object()) throw Error(where + " must be a JSON object");
  for (const auto& item : j.items())
    if (!keys.count(item.key()))
      throw Error("unexpected key '" + item.key() + "' in " + where);
  for (const auto& k : keys)
    if (!j.contains(k)) throw Error("missing key '" + k + "' in " + where);
}

int require_int(const json& j, const std::string& key) {
  if (!j.is_number_integer())
    throw Error("key '" + key + "' must be an integer");
  return j.get<int>();
}

}  // namespace

nlohmann::ordered_json graph_to_json(const EmbeddedGraph& g) {
  nlohmann::ordered_json j;
  j["vertex_count"] = g.vertex_count();
  auto edges = nlohmann::ordered_json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  j["rotation"] = g.rotation();
  j["signs"] = g.signs();
  j["surface"] = {{"orientable", g.surface().orientable},
                  {"genus", g.surface().genus}};
  return j;
}

EmbeddedGraph graph_from_json(const nlohmann::json& j) {
  require_keys(j, {"vertex_count", "edges", "rotation", "signs", "surface"},
               "graph");
  int n = require_int(j["vertex_count"], "vertex_count");

  if (!j["edges"].is_array()) throw Error("key 'edges' must be an array");
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2)
      throw Error("key 'edges' must hold [u,v] pairs");
    edges.push_back({require_int(e[0], "edges"), require_int(e[1], "edges")});
  }

  if (!j["rotation"].is_array())
    throw Error("key 'rotation' must be an array");
  std::vector<std::vector<int>> rotation;
  for (const auto& r : j["rotation"]) {
    if (!r.is_array())
      throw Error("key 'rotation' must hold one dart array per vertex");
    std::vector<int> darts;
    for (const auto& d : r) darts.push_back(require_int(d, "rotation"));
    rotation.push_back(std::move(darts));
  }

  if (!j["signs"].is_array()) throw Error("key 'signs' must be an array");
  std::vector<int> signs;
  for (const auto& s : j["signs"])
    signs.push_back(require_int(s, "signs"));

  const auto& surf = j["surface"];
  require_keys(surf, {"orientable", "genus"}, "surface");
  if (!surf["orientable"].is_boolean())
    throw Error("key 'orientable' must be a boolean");
  SurfaceClass surface{surf["orientable"].get<bool>(),
                       require_int(surf["genus"], "genus")};

  return EmbeddedGraph::build(n, std::move(edges), std::move(rotation),
                              std::move(signs), surface);
}

EmbeddedGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open input file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw Error("invalid JSON in " + path + ": " + e.what());
  }
  return graph_from_json(j);
}

void write_graph_file(const EmbeddedGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open output file: " + path);
  out << dump_json(graph_to_json(g));
}

nlohmann::ordered_json report_to_json(const SaturationReport& rep) {
  nlohmann::ordered_json j;
  j["ell"] = rep.ell;
  j["pass"] = rep.pass();
  if (rep.girth)
    j["girth"] = *rep.girth;
  else
    j["girth"] = nullptr;
  j["girth_ok"] = rep.girth_ok;
  if (rep.short_cycle)
    j["short_cycle"] = *rep.short_cycle;
  else
    j["short_cycle"] = nullptr;
  j["maximal_ok"] = rep.maximal_ok;
  auto pairs = nlohmann::ordered_json::array();
  for (const auto& p : rep.addable) {
    nlohmann::ordered_json jp;
    jp["x"] = p.x;
    jp["y"] = p.y;
    jp["dist"] = p.dist;
    jp["faces"] = p.faces;
    pairs.push_back(std::move(jp));
  }
  j["addable_pairs"] = std::move(pairs);
  j["fmax"] = rep.fmax;
  j["surface"] = {{"orientable", rep.surface.orientable},
                  {"genus", rep.surface.genus}};
  return j;
}

nlohmann::ordered_json lens_to_json(const LensCertificate& cert) {
  nlohmann::ordered_json j;
  j["x"] = cert.x;
  j["y"] = cert.y;
  j["path_a"] = cert.path_a.vertices;
  j["path_b"] = cert.path_b.vertices;
  return j;
}

std::string dump_json(const nlohmann::ordered_json& j) {
  return j.dump(2) + "\n";
}

}  // namespace girthsat
