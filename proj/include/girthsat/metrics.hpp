#pragma once

#include <optional>
#include <vector>

#include "girthsat/embedded_graph.hpp"

namespace girthsat {

struct PathRecord {
  std::vector<int> vertices;
  int length() const { return static_cast<int>(vertices.size()) - 1; }
};

// Shortest-path tree rooted at `root` covering a terminal set, grown
// terminal by terminal along canonical shortest paths. parent[root] == root,
// parent[v] == -1 for vertices outside the tree.
struct WwTree {
  int root = 0;
  std::vector<int> parent;
  std::vector<int> terminals;

  bool contains(int v) const { return parent[v] >= 0; }
  int tree_distance(int v) const;
  std::vector<int> path_from_root(int v) const;
};

// An (x,y;ell)-lens: two internally disjoint x,y-paths whose union is a
// cycle of length at most 2*ell-2, both C-convex for the cycle at hand.
struct LensCertificate {
  int x = 0;
  int y = 0;
  PathRecord path_a;
  PathRecord path_b;
  int total_length() const { return path_a.length() + path_b.length(); }
};

// A consecutive run of vertices on a cycle (a proper connected subgraph).
struct SegmentRef {
  std::vector<int> cycle;
  std::vector<int> vertices;
};

// BFS distances from src; -1 for unreachable (cannot happen on valid maps).
std::vector<int> bfs_distances(const EmbeddedGraph& g, int src);
std::vector<std::vector<int>> all_pairs_distances(const EmbeddedGraph& g);

// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth_of(const EmbeddedGraph& g);
// Vertex list of one shortest cycle, if any.
std::optional<std::vector<int>> shortest_cycle(const EmbeddedGraph& g);

// Canonical shortest path: lexicographically smallest vertex sequence among
// all minimum-length x,y-paths.
PathRecord shortest_path(const EmbeddedGraph& g, int x, int y);

// Builds a (W,w)-tree: it contains W, every leaf lies in W, and each
// root-to-terminal tree path is a shortest path in g. Terminals are attached
// in increasing vertex id along canonical shortest paths.
WwTree build_ww_tree(const EmbeddedGraph& g, const std::vector<int>& w_set,
                     int w);

// Distance between two vertices along a cycle (min of the two arcs).
int dist_on_cycle(const std::vector<int>& cycle, int x, int y);

// True iff p decomposes as segment-of-C + at most one ear + segment-of-C.
bool is_c_convex(const std::vector<int>& cycle, const PathRecord& p);

// Searches for a C-convex (x,y;ell)-lens: cycles through x and y of length
// at most 2*ell-2 are scanned in increasing total length, then lexicographic
// order; the first one whose two x,y-paths are both C-convex is returned.
// The cycle C itself does not count as a lens (a lens contains an ear).
std::optional<LensCertificate> find_lens(const EmbeddedGraph& g,
                                         const std::vector<int>& cycle, int x,
                                         int y, int ell);

// Smallest-id vertex x of the segment with dist(x,z) > ell/2 - 1. The
// segment must have exactly ell vertices. Throws "lemma violated" when no
// witness exists, which cannot happen on verified maximal inputs.
int center_avoiding_vertex(const EmbeddedGraph& g, const SegmentRef& segment,
                           int z, int ell);

}  // namespace girthsat
