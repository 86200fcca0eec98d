#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "girthsat/constructions.hpp"
#include "girthsat/json_io.hpp"
#include "girthsat/metrics.hpp"
#include "girthsat/saturation.hpp"
#include "girthsat/search.hpp"

namespace {

using girthsat::EmbeddedGraph;
using girthsat::SurfaceClass;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

void emit(const nlohmann::ordered_json& j, const std::string& output) {
  std::string text = girthsat::dump_json(j);
  if (output.empty() || output == "-") {
    std::cout << text;
  } else {
    std::ofstream out(output);
    if (!out) throw girthsat::Error("cannot open output file: " + output);
    out << text;
  }
}

SurfaceClass parse_surface(const std::string& text) {
  if (text.empty()) return SurfaceClass::sphere();
  auto comma = text.find(',');
  if (comma == std::string::npos)
    throw girthsat::Error(
        "surface must be 'genus,orientable' or 'genus,nonorientable'");
  int genus = std::stoi(text.substr(0, comma));
  std::string kind = text.substr(comma + 1);
  if (kind == "orientable") return SurfaceClass::orientable_genus(genus);
  if (kind == "nonorientable") return SurfaceClass::nonorientable_genus(genus);
  throw girthsat::Error("unknown surface kind '" + kind + "'");
}

nlohmann::ordered_json surface_json(const SurfaceClass& s) {
  return {{"orientable", s.orientable}, {"genus", s.genus}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"maximal girth->=ell graphs embedded on surfaces"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a library construction");
  gen->require_subcommand(1);
  int ell = 0, genus = 1, crosscaps = 0;
  std::string output;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--ell", ell, "girth parameter")->required();
    cmd->add_option("-o,--output", output, "output file (default stdout)");
  };
  auto* gen_cycle = gen->add_subcommand("cycle", "C_{2ell-3} on the sphere");
  add_common(gen_cycle);
  auto* gen_wheel = gen->add_subcommand("wheel", "plane wheel W(ell)");
  add_common(gen_wheel);
  auto* gen_wheelprime =
      gen->add_subcommand("wheelprime", "plane graph W'(ell), ell in 7..9");
  add_common(gen_wheelprime);
  auto* gen_surface =
      gen->add_subcommand("surface", "genus lower-bound construction");
  add_common(gen_surface);
  gen_surface->add_option("--genus", genus, "handle count g >= 1");
  gen_surface->add_option("--crosscaps", crosscaps,
                          "0: S_g, 1: N_{2g+1}, 2: N_{2g+2}");

  // verify
  auto* verify = app.add_subcommand("verify", "saturation verdict for a graph");
  std::string input;
  verify->add_option("--input", input, "graph JSON file")->required();
  verify->add_option("--ell", ell, "girth parameter")->required();
  verify->add_option("-o,--output", output, "report file (default stdout)");

  // lens
  auto* lens = app.add_subcommand("lens", "search for an (x,y;ell)-lens");
  int lx = 0, ly = 0, face_index = -1;
  lens->add_option("--input", input)->required();
  lens->add_option("--ell", ell)->required();
  lens->add_option("--x", lx, "first endpoint")->required();
  lens->add_option("--y", ly, "second endpoint")->required();
  lens->add_option("--face", face_index,
                   "facial-cycle face index (default: longest facial cycle)");

  // search
  auto* search = app.add_subcommand("search", "randomized lower-bound search");
  auto* search_lower = search->add_subcommand("lower", "maximize fmax");
  int restarts = 8, jobs = 1;
  std::uint64_t seed = 0;
  std::string surface_text;
  std::optional<int> target;
  search_lower->add_option("--ell", ell)->required();
  search_lower->add_option("--surface", surface_text,
                           "'g,orientable' or 'g,nonorientable' (default plane)");
  search_lower->add_option("--restarts", restarts, "random restarts");
  search_lower->add_option("--seed", seed, "RNG seed (default 0)");
  search_lower->add_option("--jobs", jobs, "parallel restarts");
  search_lower->add_option("--target", target, "exit 1 if best fmax < target");
  search_lower->add_option("-o,--output", output);

  // refute
  auto* refute = app.add_subcommand(
      "refute", "exhaust completions that keep a seeded cycle facial");
  int cycle_len = 0, kmax = 3;
  long long budget = 100000000LL;
  refute->add_option("--ell", ell)->required();
  refute->add_option("--cycle-len", cycle_len, "seed cycle length")->required();
  refute->add_option("--kmax", kmax, "interior vertex budget");
  refute->add_option("--budget", budget, "node limit");
  refute->add_option("-o,--output", output);

  // stats
  auto* stats = app.add_subcommand("stats", "basic invariants of a graph");
  stats->add_option("--input", input)->required();
  stats->add_option("-o,--output", output);

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      EmbeddedGraph g = [&] {
        if (gen_cycle->parsed()) return girthsat::gen_cycle_disc(ell);
        if (gen_wheel->parsed()) return girthsat::gen_wheel_W(ell);
        if (gen_wheelprime->parsed()) return girthsat::gen_wheel_Wprime(ell);
        return girthsat::gen_surface_construction({genus, ell, crosscaps});
      }();
      emit(girthsat::graph_to_json(g), output);
      return kExitPass;
    }

    if (verify->parsed()) {
      EmbeddedGraph g = girthsat::read_graph_file(input);
      auto rep = girthsat::verify_saturated(g, ell);
      emit(girthsat::report_to_json(rep), output);
      return rep.pass() ? kExitPass : kExitFail;
    }

    if (lens->parsed()) {
      EmbeddedGraph g = girthsat::read_graph_file(input);
      const auto& faces = g.faces();
      if (face_index < 0) {
        int best = -1;
        for (int i = 0; i < static_cast<int>(faces.size()); ++i)
          if (faces[i].is_facial_cycle &&
              (best < 0 || faces[i].degree > faces[best].degree))
            best = i;
        if (best < 0) throw girthsat::Error("graph has no facial cycle");
        face_index = best;
      }
      if (face_index >= static_cast<int>(faces.size()) ||
          !faces[face_index].is_facial_cycle)
        throw girthsat::Error("face " + std::to_string(face_index) +
                              " is not a facial cycle");
      auto cert =
          girthsat::find_lens(g, faces[face_index].vertices, lx, ly, ell);
      if (!cert) {
        emit(nlohmann::ordered_json(nullptr), output);
        return kExitFail;
      }
      emit(girthsat::lens_to_json(*cert), output);
      return kExitPass;
    }

    if (search->parsed()) {
      SurfaceClass surface = parse_surface(surface_text);
      auto result = girthsat::lower_bound_search(
          ell, surface, restarts, seed, jobs,
          [](const girthsat::SearchEvent& ev) {
            nlohmann::ordered_json j;
            j["event"] = "restart";
            j["index"] = ev.restart_index;
            j["fmax"] = ev.fmax;
            j["best_fmax"] = ev.best_fmax;
            std::cerr << j.dump() << "\n";
          });
      nlohmann::ordered_json j;
      j["best_fmax"] = result.best_fmax;
      j["seed"] = result.seed;
      j["mode"] = result.mode;
      j["budget_used"] = {{"restarts", result.restarts},
                          {"insertions", result.insertions}};
      j["best_graph"] = girthsat::graph_to_json(result.best_graph);
      emit(j, output);
      return (!target || result.best_fmax >= *target) ? kExitPass : kExitFail;
    }

    if (refute->parsed()) {
      auto rep = girthsat::exhaustive_refute(ell, cycle_len, kmax, budget);
      nlohmann::ordered_json j;
      j["ell"] = rep.ell;
      j["cycle_len"] = rep.cycle_len;
      j["k_max"] = rep.k_max;
      j["exhausted"] = rep.exhausted;
      j["nodes"] = rep.nodes;
      if (rep.found)
        j["found"] = girthsat::graph_to_json(*rep.found);
      else
        j["found"] = nullptr;
      emit(j, output);
      return rep.exhausted && !rep.found ? kExitPass : kExitFail;
    }

    if (stats->parsed()) {
      EmbeddedGraph g = girthsat::read_graph_file(input);
      nlohmann::ordered_json j;
      j["vertex_count"] = g.vertex_count();
      j["edge_count"] = g.edge_count();
      j["face_count"] = g.faces().size();
      j["euler_genus"] = g.euler_genus();
      j["surface"] = surface_json(g.surface());
      auto girth = girthsat::girth_of(g);
      if (girth)
        j["girth"] = *girth;
      else
        j["girth"] = nullptr;
      j["fmax"] = girthsat::fmax_of(g);
      auto degrees = nlohmann::ordered_json::array();
      for (const auto& f : g.faces()) degrees.push_back(f.degree);
      j["face_degrees"] = std::move(degrees);
      emit(j, output);
      return kExitPass;
    }
  } catch (const girthsat::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
