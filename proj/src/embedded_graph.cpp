#include "girthsat/embedded_graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace girthsat {

namespace {

std::string pair_str(int u, int v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

bool EmbeddedGraph::adjacent(int u, int v) const {
  const auto& nb = adjacency_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<int> EmbeddedGraph::edge_id(int u, int v) const {
  if (u > v) std::swap(u, v);
  for (int d : rotation_[u]) {
    int e = dart_edge(d);
    if (edges_[e] == std::make_pair(u, v)) return e;
  }
  return std::nullopt;
}

EmbeddedGraph EmbeddedGraph::build(int vertex_count,
                                   std::vector<std::pair<int, int>> edges,
                                   std::vector<std::vector<int>> rotation,
                                   std::vector<int> signs,
                                   SurfaceClass surface) {
  if (vertex_count < 1) throw Error("vertex_count must be at least 1");
  if (surface.genus < 0) throw Error("surface genus must be nonnegative");
  if (!surface.orientable && surface.genus == 0)
    throw Error("nonorientable surface needs genus at least 1");

  const int e = static_cast<int>(edges.size());
  if (static_cast<int>(signs.size()) != e)
    throw Error("signs array has " + std::to_string(signs.size()) +
                " entries for " + std::to_string(e) + " edges");
  for (int k = 0; k < e; ++k)
    if (signs[k] != 1 && signs[k] != -1)
      throw Error("sign of edge " + std::to_string(k) + " must be +1 or -1");

  std::set<std::pair<int, int>> seen_edges;
  for (int k = 0; k < e; ++k) {
    auto& [u, v] = edges[k];
    if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
      throw Error("edge " + std::to_string(k) + " " + pair_str(u, v) +
                  " has an endpoint out of range");
    if (u == v)
      throw Error("loop at edge " + std::to_string(k) + " " + pair_str(u, v));
    if (u > v) std::swap(u, v);
    if (!seen_edges.insert({u, v}).second)
      throw Error("duplicate edge " + pair_str(u, v) + " at index " +
                  std::to_string(k));
  }

  const int darts = 2 * e;
  std::vector<int> dart_vertex(darts);
  for (int k = 0; k < e; ++k) {
    dart_vertex[2 * k] = edges[k].first;
    dart_vertex[2 * k + 1] = edges[k].second;
  }

  if (static_cast<int>(rotation.size()) != vertex_count)
    throw Error("rotation has " + std::to_string(rotation.size()) +
                " vertex entries, expected " + std::to_string(vertex_count));
  std::vector<int> dart_pos(darts, -1);
  std::vector<char> dart_seen(darts, 0);
  for (int v = 0; v < vertex_count; ++v) {
    for (int i = 0; i < static_cast<int>(rotation[v].size()); ++i) {
      int d = rotation[v][i];
      if (d < 0 || d >= darts)
        throw Error("dart " + std::to_string(d) + " at vertex " +
                    std::to_string(v) + " is out of range");
      if (dart_seen[d])
        throw Error("dart " + std::to_string(d) + " listed more than once");
      if (dart_vertex[d] != v)
        throw Error("dart " + std::to_string(d) + " listed at vertex " +
                    std::to_string(v) + " but emanates from vertex " +
                    std::to_string(dart_vertex[d]));
      dart_seen[d] = 1;
      dart_pos[d] = i;
    }
  }
  for (int d = 0; d < darts; ++d)
    if (!dart_seen[d])
      throw Error("dart " + std::to_string(d) + " of edge " +
                  std::to_string(d / 2) + " not covered by the rotation of " +
                  "vertex " + std::to_string(dart_vertex[d]));

  std::vector<std::vector<int>> adjacency(vertex_count);
  for (auto [u, v] : edges) {
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }
  for (auto& nb : adjacency) std::sort(nb.begin(), nb.end());

  {
    std::vector<char> reached(vertex_count, 0);
    std::queue<int> bfs;
    bfs.push(0);
    reached[0] = 1;
    while (!bfs.empty()) {
      int u = bfs.front();
      bfs.pop();
      for (int w : adjacency[u])
        if (!reached[w]) {
          reached[w] = 1;
          bfs.push(w);
        }
    }
    for (int v = 0; v < vertex_count; ++v)
      if (!reached[v])
        throw Error("disconnected graph: vertex " + std::to_string(v) +
                    " unreachable from vertex 0");
  }

  EmbeddedGraph g;
  g.vertex_count_ = vertex_count;
  g.edges_ = std::move(edges);
  g.rotation_ = std::move(rotation);
  g.signs_ = std::move(signs);
  g.surface_ = surface;
  g.dart_vertex_ = std::move(dart_vertex);
  g.dart_pos_ = std::move(dart_pos);
  g.adjacency_ = std::move(adjacency);

  // Face tracing. A state is a dart plus a local orientation; traversing a
  // negative edge flips the orientation, which selects rotation successor
  // versus predecessor at the far end. Each face is one orbit; its reverse
  // orbit is consumed alongside so every face is reported once.
  const auto next_state = [&g](int d, int s) -> std::pair<int, int> {
    int t = dart_twin(d);
    int w = g.dart_vertex_[t];
    int s2 = s * g.signs_[dart_edge(d)];
    const auto& rot = g.rotation_[w];
    int deg = static_cast<int>(rot.size());
    int pos = g.dart_pos_[t];
    int npos = s2 > 0 ? (pos + 1) % deg : (pos + deg - 1) % deg;
    return {rot[npos], s2};
  };
  const auto state_id = [](int d, int s) { return 2 * d + (s < 0 ? 1 : 0); };

  std::vector<char> consumed(2 * darts, 0);
  int total_degree = 0;
  for (int d0 = 0; d0 < darts; ++d0) {
    for (int s0 : {1, -1}) {
      if (consumed[state_id(d0, s0)]) continue;
      FaceRecord face;
      int d = d0, s = s0;
      do {
        face.walk.push_back(d);
        face.walk_signs.push_back(s);
        face.vertices.push_back(g.dart_vertex_[d]);
        consumed[state_id(d, s)] = 1;
        // reverse state of (d,s): same edge walked the other way
        int rs = -s * g.signs_[dart_edge(d)];
        consumed[state_id(dart_twin(d), rs)] = 1;
        auto [nd, ns] = next_state(d, s);
        d = nd;
        s = ns;
      } while (!(d == d0 && s == s0));
      face.degree = static_cast<int>(face.walk.size());
      std::vector<int> vs = face.vertices;
      std::sort(vs.begin(), vs.end());
      bool distinct = std::adjacent_find(vs.begin(), vs.end()) == vs.end();
      face.is_facial_cycle = distinct && face.degree >= 3;
      total_degree += face.degree;
      g.faces_.push_back(std::move(face));
    }
  }
  if (g.vertex_count_ == 1 && e == 0) {
    // Single vertex on a surface: one face, empty boundary walk.
    g.faces_.push_back(FaceRecord{});
  }
  if (total_degree != 2 * e)
    throw Error("internal: face degrees sum to " +
                std::to_string(total_degree) + ", expected " +
                std::to_string(2 * e));

  int f = static_cast<int>(g.faces_.size());
  g.euler_genus_ = 2 - g.vertex_count_ + e - f;

  // Orientability of the rotation system: the signature must be a
  // coboundary, i.e. every cycle has positive sign product.
  {
    std::vector<int> sigma(vertex_count, 0);
    sigma[0] = 1;
    std::queue<int> bfs;
    bfs.push(0);
    bool orientable = true;
    std::vector<std::vector<std::pair<int, int>>> inc(vertex_count);
    for (int k = 0; k < e; ++k) {
      inc[g.edges_[k].first].push_back({g.edges_[k].second, k});
      inc[g.edges_[k].second].push_back({g.edges_[k].first, k});
    }
    while (!bfs.empty()) {
      int u = bfs.front();
      bfs.pop();
      for (auto [w, k] : inc[u]) {
        if (sigma[w] == 0) {
          sigma[w] = sigma[u] * g.signs_[k];
          bfs.push(w);
        } else if (sigma[w] != sigma[u] * g.signs_[k]) {
          orientable = false;
        }
      }
    }
    g.scheme_orientable_ = orientable;
  }

  int declared = surface.euler_genus();
  if (surface.orientable && !g.scheme_orientable_)
    throw Error("declared surface is orientable but the rotation system is "
                "nonorientable");
  if (g.euler_genus_ > declared)
    throw Error("declared surface too small: rotation system has Euler "
                "genus " + std::to_string(g.euler_genus_) +
                ", declared surface allows " + std::to_string(declared));
  if (!surface.orientable && g.scheme_orientable_ &&
      g.euler_genus_ == declared)
    throw Error("declared surface too small: an orientable rotation system "
                "of Euler genus " + std::to_string(g.euler_genus_) +
                " needs a crosscap of slack on a nonorientable surface");

  return g;
}

const std::vector<FaceRecord>& trace_faces(const EmbeddedGraph& g) {
  return g.faces();
}

int euler_genus(const EmbeddedGraph& g) { return g.euler_genus(); }

int fmax_of(const EmbeddedGraph& g) {
  int best = 0;
  for (const auto& f : g.faces())
    if (f.is_facial_cycle) best = std::max(best, f.degree);
  return best;
}

namespace {

// Inserts a new dart into the rotation of the corner at walk position `pos`
// of `face`. The corner sits between the arrival dart twin(walk[pos-1]) and
// the departure dart walk[pos]; the local orientation decides on which side
// of the departure dart the rotation slot lies.
void insert_dart_at_corner(std::vector<std::vector<int>>& rotation,
                           const EmbeddedGraph& g, const FaceRecord& face,
                           int pos, int new_dart) {
  int depart = face.walk[pos];
  int v = g.dart_vertex(depart);
  auto& rot = rotation[v];
  auto it = std::find(rot.begin(), rot.end(), depart);
  if (face.walk_signs[pos] > 0) {
    rot.insert(it, new_dart);
  } else {
    rot.insert(it + 1, new_dart);
  }
}

}  // namespace

EmbeddedGraph insert_edge_in_face(const EmbeddedGraph& g, int face_index,
                                  int corner_x, int corner_y) {
  const auto& faces = g.faces();
  if (face_index < 0 || face_index >= static_cast<int>(faces.size()))
    throw Error("face index " + std::to_string(face_index) + " out of range");
  const FaceRecord& face = faces[face_index];
  int k = face.degree;
  if (corner_x < 0 || corner_x >= k || corner_y < 0 || corner_y >= k)
    throw Error("corner position out of range on face " +
                std::to_string(face_index));
  int x = face.vertices[corner_x];
  int y = face.vertices[corner_y];
  if (x == y)
    throw Error("corner vertices equal: vertex " + std::to_string(x));
  if (g.adjacent(x, y))
    throw Error("vertices already adjacent: " + pair_str(x, y));

  auto edges = g.edges();
  auto rotation = g.rotation();
  auto signs = g.signs();
  int new_edge = static_cast<int>(edges.size());
  edges.push_back({std::min(x, y), std::max(x, y)});
  // The new edge closes the two corner orientations into one face walk.
  signs.push_back(face.walk_signs[corner_x] * face.walk_signs[corner_y]);
  int dart_low = 2 * new_edge;
  int dart_high = dart_low + 1;
  int dart_x = (x < y) ? dart_low : dart_high;
  int dart_y = (x < y) ? dart_high : dart_low;
  insert_dart_at_corner(rotation, g, face, corner_x, dart_x);
  insert_dart_at_corner(rotation, g, face, corner_y, dart_y);

  EmbeddedGraph out = EmbeddedGraph::build(
      g.vertex_count(), std::move(edges), std::move(rotation),
      std::move(signs), g.surface());
  if (static_cast<int>(out.faces().size()) != static_cast<int>(faces.size()) + 1 ||
      out.euler_genus() != g.euler_genus())
    throw Error("internal: edge insertion did not split the face");
  return out;
}

EmbeddedGraph insert_edge_between(const EmbeddedGraph& g, int x, int y) {
  if (x == y) throw Error("corner vertices equal: vertex " + std::to_string(x));
  if (x < 0 || x >= g.vertex_count() || y < 0 || y >= g.vertex_count())
    throw Error("vertex out of range");
  if (g.adjacent(x, y))
    throw Error("vertices already adjacent: " + pair_str(x, y));
  const auto& faces = g.faces();
  for (int fi = 0; fi < static_cast<int>(faces.size()); ++fi) {
    const auto& vs = faces[fi].vertices;
    int px = -1, py = -1;
    for (int i = 0; i < static_cast<int>(vs.size()); ++i) {
      if (px < 0 && vs[i] == x) px = i;
      if (py < 0 && vs[i] == y) py = i;
    }
    if (px >= 0 && py >= 0) return insert_edge_in_face(g, fi, px, py);
  }
  throw Error("not co-facial: vertices " + pair_str(x, y) +
              " share no face");
}

EmbeddedGraph add_leaf_in_face(const EmbeddedGraph& g, int face_index,
                               int corner) {
  const auto& faces = g.faces();
  if (face_index < 0 || face_index >= static_cast<int>(faces.size()))
    throw Error("face index " + std::to_string(face_index) + " out of range");
  const FaceRecord& face = faces[face_index];
  if (face.degree == 0) throw Error("cannot attach to an empty face walk");
  if (corner < 0 || corner >= face.degree)
    throw Error("corner position out of range on face " +
                std::to_string(face_index));
  int v = face.vertices[corner];
  int leaf = g.vertex_count();

  auto edges = g.edges();
  auto rotation = g.rotation();
  auto signs = g.signs();
  int new_edge = static_cast<int>(edges.size());
  edges.push_back({v, leaf});
  signs.push_back(1);
  insert_dart_at_corner(rotation, g, face, corner, 2 * new_edge);
  rotation.push_back({2 * new_edge + 1});

  EmbeddedGraph out = EmbeddedGraph::build(
      g.vertex_count() + 1, std::move(edges), std::move(rotation),
      std::move(signs), g.surface());
  if (out.faces().size() != faces.size() || out.euler_genus() != g.euler_genus())
    throw Error("internal: pendant vertex changed the face structure");
  return out;
}

EmbeddedGraph normalize_signs(const EmbeddedGraph& g) {
  if (!g.scheme_orientable())
    throw Error("rotation system is nonorientable; signs cannot be "
                "normalized");
  int n = g.vertex_count();
  std::vector<int> sigma(n, 0);
  sigma[0] = 1;
  std::queue<int> bfs;
  bfs.push(0);
  std::vector<std::vector<std::pair<int, int>>> inc(n);
  for (int k = 0; k < g.edge_count(); ++k) {
    inc[g.edges()[k].first].push_back({g.edges()[k].second, k});
    inc[g.edges()[k].second].push_back({g.edges()[k].first, k});
  }
  while (!bfs.empty()) {
    int u = bfs.front();
    bfs.pop();
    for (auto [w, k] : inc[u])
      if (sigma[w] == 0) {
        sigma[w] = sigma[u] * g.signs()[k];
        bfs.push(w);
      }
  }
  auto rotation = g.rotation();
  for (int v = 0; v < n; ++v)
    if (sigma[v] < 0) std::reverse(rotation[v].begin(), rotation[v].end());
  std::vector<int> signs(g.edge_count(), 1);
  return EmbeddedGraph::build(n, g.edges(), std::move(rotation),
                              std::move(signs), g.surface());
}

EmbeddedGraph redeclare_surface(const EmbeddedGraph& g, SurfaceClass surface) {
  return EmbeddedGraph::build(g.vertex_count(), g.edges(), g.rotation(),
                              g.signs(), surface);
}

}  // namespace girthsat
