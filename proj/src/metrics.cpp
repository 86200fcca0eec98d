#include "girthsat/metrics.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace girthsat {

int WwTree::tree_distance(int v) const {
  int steps = 0;
  while (parent[v] != v) {
    if (parent[v] < 0) throw Error("vertex not in tree");
    v = parent[v];
    ++steps;
  }
  return steps;
}

std::vector<int> WwTree::path_from_root(int v) const {
  std::vector<int> rev;
  while (true) {
    rev.push_back(v);
    if (parent[v] == v) break;
    if (parent[v] < 0) throw Error("vertex not in tree");
    v = parent[v];
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

std::vector<int> bfs_distances(const EmbeddedGraph& g, int src) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::queue<int> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : g.neighbors(u))
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
  }
  return dist;
}

std::vector<std::vector<int>> all_pairs_distances(const EmbeddedGraph& g) {
  std::vector<std::vector<int>> dist;
  dist.reserve(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    dist.push_back(bfs_distances(g, v));
  return dist;
}

namespace {

// Shortest u,v-distance with one edge removed, plus the path for witnesses.
std::vector<int> bfs_avoiding_edge(const EmbeddedGraph& g, int src,
                                   int skip_u, int skip_v) {
  std::vector<int> parent(g.vertex_count(), -2);
  std::queue<int> q;
  parent[src] = src;
  q.push(src);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : g.neighbors(u)) {
      if ((u == skip_u && w == skip_v) || (u == skip_v && w == skip_u))
        continue;
      if (parent[w] == -2) {
        parent[w] = u;
        q.push(w);
      }
    }
  }
  return parent;
}

}  // namespace

std::optional<std::vector<int>> shortest_cycle(const EmbeddedGraph& g) {
  std::optional<std::vector<int>> best;
  for (auto [u, v] : g.edges()) {
    auto parent = bfs_avoiding_edge(g, u, u, v);
    if (parent[v] == -2) continue;
    std::vector<int> cycle;
    for (int w = v; w != u; w = parent[w]) cycle.push_back(w);
    cycle.push_back(u);
    if (!best || cycle.size() < best->size()) best = std::move(cycle);
  }
  return best;
}

std::optional<int> girth_of(const EmbeddedGraph& g) {
  auto cycle = shortest_cycle(g);
  if (!cycle) return std::nullopt;
  return static_cast<int>(cycle->size());
}

PathRecord shortest_path(const EmbeddedGraph& g, int x, int y) {
  if (x < 0 || x >= g.vertex_count() || y < 0 || y >= g.vertex_count())
    throw Error("vertex out of range");
  if (x == y) return {{x}};
  auto dist_to_y = bfs_distances(g, y);
  if (dist_to_y[x] < 0)
    throw Error("no path: vertices " + std::to_string(x) + " and " +
                std::to_string(y) + " lie in different components");
  // Greedy lexicographic descent: neighbors are sorted, so taking the first
  // one that decreases the distance to y yields the lex-min shortest path.
  PathRecord p;
  p.vertices.push_back(x);
  int cur = x;
  while (cur != y) {
    for (int w : g.neighbors(cur))
      if (dist_to_y[w] == dist_to_y[cur] - 1) {
        cur = w;
        break;
      }
    p.vertices.push_back(cur);
  }
  return p;
}

WwTree build_ww_tree(const EmbeddedGraph& g, const std::vector<int>& w_set,
                     int w) {
  if (w_set.empty()) throw Error("terminal set is empty");
  std::vector<int> terminals = w_set;
  std::sort(terminals.begin(), terminals.end());
  terminals.erase(std::unique(terminals.begin(), terminals.end()),
                  terminals.end());
  for (int v : terminals)
    if (v < 0 || v >= g.vertex_count())
      throw Error("terminal " + std::to_string(v) + " out of range");
  if (!std::binary_search(terminals.begin(), terminals.end(), w))
    throw Error("root " + std::to_string(w) + " is not in the terminal set");

  WwTree tree;
  tree.root = w;
  tree.terminals = terminals;
  tree.parent.assign(g.vertex_count(), -1);
  tree.parent[w] = w;

  for (int t : terminals) {
    if (t == w) continue;
    auto q = shortest_path(g, w, t).vertices;
    // Attach the suffix after the last point of q already in the tree.
    int split = 0;
    for (int i = 0; i < static_cast<int>(q.size()); ++i)
      if (tree.parent[q[i]] >= 0) split = i;
    for (int i = split + 1; i < static_cast<int>(q.size()); ++i)
      tree.parent[q[i]] = q[i - 1];
  }
  return tree;
}

int dist_on_cycle(const std::vector<int>& cycle, int x, int y) {
  int n = static_cast<int>(cycle.size());
  int px = -1, py = -1;
  for (int i = 0; i < n; ++i) {
    if (cycle[i] == x) px = i;
    if (cycle[i] == y) py = i;
  }
  if (px < 0 || py < 0) throw Error("vertex not on cycle");
  int d = std::abs(px - py);
  return std::min(d, n - d);
}

bool is_c_convex(const std::vector<int>& cycle, const PathRecord& p) {
  std::set<int> on_c(cycle.begin(), cycle.end());
  std::set<std::pair<int, int>> c_edges;
  int n = static_cast<int>(cycle.size());
  for (int i = 0; i < n; ++i) {
    int u = cycle[i], v = cycle[(i + 1) % n];
    c_edges.insert({std::min(u, v), std::max(u, v)});
  }
  const auto& vs = p.vertices;
  int m = p.length();
  if (!on_c.count(vs.front()) || !on_c.count(vs.back()))
    throw Error("path endpoint not on the cycle");
  if (m == 0) return true;

  auto edge_on_c = [&](int i) {
    int u = vs[i], v = vs[i + 1];
    return c_edges.count({std::min(u, v), std::max(u, v)}) > 0;
  };
  int prefix = 0;
  while (prefix < m && edge_on_c(prefix)) ++prefix;
  int suffix = 0;
  while (suffix < m && edge_on_c(m - 1 - suffix)) ++suffix;
  if (prefix + suffix >= m) return true;  // the whole path is a segment
  // The middle must be a single ear: interior vertices off the cycle. The
  // end segments are maximal, so no other split can work.
  for (int i = prefix + 1; i < m - suffix; ++i)
    if (on_c.count(vs[i])) return false;
  return true;
}

namespace {

// All simple x,y-paths of length <= max_len, in lexicographic vertex-sequence
// order (DFS with ascending neighbors emits them sorted). Pruned by the
// distance-to-target lower bound.
void enumerate_paths(const EmbeddedGraph& g, int x, int y, int max_len,
                     const std::vector<int>& dist_to_y,
                     std::vector<int>& prefix, std::vector<char>& used,
                     std::vector<std::vector<int>>& out) {
  int cur = prefix.back();
  if (cur == y) {
    out.push_back(prefix);
    return;
  }
  int len = static_cast<int>(prefix.size()) - 1;
  for (int w : g.neighbors(cur)) {
    if (used[w]) continue;
    if (dist_to_y[w] < 0 || len + 1 + dist_to_y[w] > max_len) continue;
    used[w] = 1;
    prefix.push_back(w);
    enumerate_paths(g, x, y, max_len, dist_to_y, prefix, used, out);
    prefix.pop_back();
    used[w] = 0;
  }
}

}  // namespace

std::optional<LensCertificate> find_lens(const EmbeddedGraph& g,
                                         const std::vector<int>& cycle, int x,
                                         int y, int ell) {
  if (x == y) throw Error("endpoints equal: vertex " + std::to_string(x));
  auto on_c = [&](int v) {
    return std::find(cycle.begin(), cycle.end(), v) != cycle.end();
  };
  if (!on_c(x))
    throw Error("vertex " + std::to_string(x) + " not on the cycle");
  if (!on_c(y))
    throw Error("vertex " + std::to_string(y) + " not on the cycle");

  const int max_total = 2 * ell - 2;
  auto dist_to_y = bfs_distances(g, y);
  std::vector<std::vector<int>> paths;
  std::vector<int> prefix{x};
  std::vector<char> used(g.vertex_count(), 0);
  used[x] = 1;
  enumerate_paths(g, x, y, max_total - 1, dist_to_y, prefix, used, paths);

  std::set<std::pair<int, int>> c_edges;
  {
    int n = static_cast<int>(cycle.size());
    for (int i = 0; i < n; ++i) {
      int u = cycle[i], v = cycle[(i + 1) % n];
      c_edges.insert({std::min(u, v), std::max(u, v)});
    }
  }
  auto is_segment_of_c = [&](const std::vector<int>& p) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      if (!c_edges.count({std::min(p[i], p[i + 1]),
                          std::max(p[i], p[i + 1])}))
        return false;
    return true;
  };

  std::vector<int> convex_ids;
  for (int i = 0; i < static_cast<int>(paths.size()); ++i)
    if (is_c_convex(cycle, PathRecord{paths[i]})) convex_ids.push_back(i);

  auto disjoint_interiors = [&](const std::vector<int>& a,
                                const std::vector<int>& b) {
    std::set<int> inner(a.begin() + 1, a.end() - 1);
    for (std::size_t i = 1; i + 1 < b.size(); ++i)
      if (inner.count(b[i])) return false;
    return true;
  };

  for (int total = 3; total <= max_total; ++total) {
    for (std::size_t ia = 0; ia < convex_ids.size(); ++ia) {
      const auto& a = paths[convex_ids[ia]];
      int la = static_cast<int>(a.size()) - 1;
      if (la >= total) continue;
      for (std::size_t ib = ia + 1; ib < convex_ids.size(); ++ib) {
        const auto& b = paths[convex_ids[ib]];
        if (static_cast<int>(b.size()) - 1 != total - la) continue;
        if (!disjoint_interiors(a, b)) continue;
        // two segments of C only reassemble C itself, which is no lens
        if (is_segment_of_c(a) && is_segment_of_c(b)) continue;
        LensCertificate cert;
        cert.x = x;
        cert.y = y;
        cert.path_a = {a};
        cert.path_b = {b};
        return cert;
      }
    }
  }
  return std::nullopt;
}

int center_avoiding_vertex(const EmbeddedGraph& g, const SegmentRef& segment,
                           int z, int ell) {
  int order = static_cast<int>(segment.vertices.size());
  if (order != ell)
    throw Error("segment order mismatch: segment has " +
                std::to_string(order) + " vertices, ell is " +
                std::to_string(ell));
  if (segment.vertices.size() >= segment.cycle.size() + 1 ||
      segment.cycle.size() < 3)
    throw Error("segment is not a proper subgraph of its cycle");
  // The run must be consecutive along the cycle, in either direction.
  {
    int n = static_cast<int>(segment.cycle.size());
    auto it = std::find(segment.cycle.begin(), segment.cycle.end(),
                        segment.vertices.front());
    if (it == segment.cycle.end())
      throw Error("segment vertex not on its cycle");
    int start = static_cast<int>(it - segment.cycle.begin());
    bool fwd = true, bwd = true;
    for (int i = 0; i < order; ++i) {
      if (segment.cycle[(start + i) % n] != segment.vertices[i]) fwd = false;
      if (segment.cycle[(start - i % n + n) % n] != segment.vertices[i])
        bwd = false;
    }
    if (!fwd && !bwd)
      throw Error("segment vertices are not consecutive on the cycle");
  }
  if (z < 0 || z >= g.vertex_count()) throw Error("vertex z out of range");

  auto dist = bfs_distances(g, z);
  int best = -1;
  for (int v : segment.vertices)
    if (2 * dist[v] > ell - 2 && (best < 0 || v < best)) best = v;
  if (best < 0)
    throw Error("lemma violated: no vertex of the segment avoids z at "
                "distance > ell/2 - 1");
  return best;
}

}  // namespace girthsat
