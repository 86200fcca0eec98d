#pragma once

#include <optional>
#include <vector>

#include "girthsat/embedded_graph.hpp"

namespace girthsat {

// Certificate of non-maximality: a co-facial non-adjacent pair at distance
// >= ell-1, so the edge xy can be drawn inside a shared face without
// creating a cycle shorter than ell. Reported once per pair with every
// shared face listed; the witness corners are the first occurrences of x
// and y on the walk of the first shared face.
struct AddablePair {
  int x = 0;
  int y = 0;
  int dist = 0;
  std::vector<int> faces;
  int witness_face = 0;
  int corner_x = 0;
  int corner_y = 0;
};

struct SaturationReport {
  int ell = 0;
  std::optional<int> girth;
  bool girth_ok = false;
  std::optional<std::vector<int>> short_cycle;
  bool maximal_ok = false;
  std::vector<AddablePair> addable;
  int fmax = 0;
  SurfaceClass surface;

  bool pass() const { return girth_ok && maximal_ok; }
};

// Exhaustive, duplicate-free list of addable pairs, sorted by (x, y).
std::vector<AddablePair> list_addable_pairs(const EmbeddedGraph& g, int ell);

// Decides whether g is a maximal C_{<ell}-free graph on its declared
// surface: girth at least ell, and no co-facial non-adjacent pair at
// distance >= ell-1 (an edge avoids crossings iff its endpoints are
// co-facial, and avoids short cycles iff their distance is >= ell-1).
SaturationReport verify_saturated(const EmbeddedGraph& g, int ell);

}  // namespace girthsat
