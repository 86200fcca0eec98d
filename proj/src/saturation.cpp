#include "girthsat/saturation.hpp"

#include <algorithm>
#include <map>

#include "girthsat/metrics.hpp"

namespace girthsat {

std::vector<AddablePair> list_addable_pairs(const EmbeddedGraph& g, int ell) {
  if (ell < 3) throw Error("ell must be at least 3");
  auto dist = all_pairs_distances(g);

  std::map<std::pair<int, int>, AddablePair> found;
  const auto& faces = g.faces();
  for (int fi = 0; fi < static_cast<int>(faces.size()); ++fi) {
    const auto& vs = faces[fi].vertices;
    // First corner occurrence per vertex on this walk.
    std::map<int, int> first_pos;
    for (int i = 0; i < static_cast<int>(vs.size()); ++i)
      first_pos.emplace(vs[i], i);
    for (auto itx = first_pos.begin(); itx != first_pos.end(); ++itx) {
      for (auto ity = std::next(itx); ity != first_pos.end(); ++ity) {
        int x = itx->first, y = ity->first;
        if (g.adjacent(x, y)) continue;
        if (dist[x][y] < ell - 1) continue;
        auto key = std::make_pair(x, y);
        auto it = found.find(key);
        if (it == found.end()) {
          AddablePair p;
          p.x = x;
          p.y = y;
          p.dist = dist[x][y];
          p.faces = {fi};
          p.witness_face = fi;
          p.corner_x = itx->second;
          p.corner_y = ity->second;
          found.emplace(key, std::move(p));
        } else {
          it->second.faces.push_back(fi);
        }
      }
    }
  }

  std::vector<AddablePair> out;
  out.reserve(found.size());
  for (auto& [key, p] : found) out.push_back(std::move(p));
  return out;
}

SaturationReport verify_saturated(const EmbeddedGraph& g, int ell) {
  if (ell < 3) throw Error("ell must be at least 3");
  SaturationReport rep;
  rep.ell = ell;
  rep.surface = g.surface();
  rep.girth = girth_of(g);
  rep.girth_ok = !rep.girth || *rep.girth >= ell;
  if (!rep.girth_ok) rep.short_cycle = shortest_cycle(g);
  rep.addable = list_addable_pairs(g, ell);
  rep.maximal_ok = rep.addable.empty();
  rep.fmax = fmax_of(g);
  return rep;
}

}  // namespace girthsat
