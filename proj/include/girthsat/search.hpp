#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "girthsat/embedded_graph.hpp"

namespace girthsat {

struct SearchEvent {
  int restart_index = 0;
  int fmax = 0;
  int best_fmax = 0;
};

struct SearchResult {
  EmbeddedGraph best_graph;
  int best_fmax = 0;
  std::uint64_t seed = 0;
  int restarts = 0;
  long long insertions = 0;
  std::string mode;  // "greedy" when a library seed won, "random" otherwise
};

struct RefutationReport {
  int ell = 0;
  int cycle_len = 0;
  int k_max = 0;
  bool exhausted = false;
  std::optional<EmbeddedGraph> found;
  long long nodes = 0;
};

// Inserts addable-pair edges until none remain. Among the addable pairs the
// one maximizing dist(x,y) is chosen, ties broken by (x, y, face id); the
// certificate distance >= ell-1 keeps the girth at ell throughout.
EmbeddedGraph greedy_saturate(const EmbeddedGraph& g0, int ell,
                              std::uint64_t seed);

// Seeds C_{cycle_len} on the sphere with face 0 preserved and enumerates
// plane supergraphs built by face-local moves into the other faces: chords
// between co-facial corners at distance >= ell-1 and up to k_max pendant
// vertices that must end with degree >= 2. States are deduplicated by a
// canonical form of the marked map. Reports the first maximal graph that
// keeps the seed cycle facial, or exhaustion of the move space.
RefutationReport exhaustive_refute(int ell, int cycle_len, int k_max,
                                   long long budget);

// Greedy saturation from the library constructions valid on the surface
// plus `restarts` randomized girth->=ell seeds; returns the graph with the
// longest facial cycle. Deterministic for a fixed seed; restarts only ever
// add candidates.
SearchResult lower_bound_search(
    int ell, SurfaceClass surface, int restarts, std::uint64_t seed,
    int jobs = 1,
    const std::function<void(const SearchEvent&)>& on_event = nullptr);

}  // namespace girthsat
