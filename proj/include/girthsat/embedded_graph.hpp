#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "girthsat/surface.hpp"

namespace girthsat {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

// One boundary walk of a face. walk[i] is the dart traversed at step i; it
// emanates from vertices[i]. walk_signs[i] is the local orientation in which
// the traversal leaves that vertex (flips when a negative edge is crossed).
// A face is a facial cycle when its walk visits pairwise distinct vertices
// and has at least 3 edges, i.e. the boundary is a cycle of the graph.
struct FaceRecord {
  std::vector<int> walk;
  std::vector<int> walk_signs;
  std::vector<int> vertices;
  int degree = 0;
  bool is_facial_cycle = false;
};

struct DartView {
  int id;
  int vertex;
  int edge;
  int twin;
};

// A simple connected graph cellularly embedded via a rotation system with
// edge signs, together with a declared target surface. The Euler genus of
// the rotation system may be smaller than that of the declared surface; the
// slack stands for handles/crosscaps placed inside faces. Immutable after
// construction; every mutating operation builds a new value.
class EmbeddedGraph {
 public:
  // Validates everything and traces faces. Edge pairs are canonicalized to
  // (min,max); dart 2i emanates from the lower endpoint of edge i, dart 2i+1
  // from the higher one. Throws Error naming the offending element.
  static EmbeddedGraph build(int vertex_count,
                             std::vector<std::pair<int, int>> edges,
                             std::vector<std::vector<int>> rotation,
                             std::vector<int> signs, SurfaceClass surface);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int dart_count() const { return 2 * edge_count(); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<std::vector<int>>& rotation() const { return rotation_; }
  const std::vector<int>& signs() const { return signs_; }
  const SurfaceClass& surface() const { return surface_; }

  DartView dart(int id) const {
    return {id, dart_vertex_[id], dart_edge(id), dart_twin(id)};
  }
  int dart_vertex(int id) const { return dart_vertex_[id]; }
  static int dart_edge(int id) { return id / 2; }
  static int dart_twin(int id) { return id ^ 1; }

  // Sorted neighbor list.
  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
  bool adjacent(int u, int v) const;
  std::optional<int> edge_id(int u, int v) const;
  int degree(int v) const { return static_cast<int>(rotation_[v].size()); }

  // Faces in canonical order: repeatedly start a walk at the lowest dart id
  // (positive side first) not yet consumed by a previous face.
  const std::vector<FaceRecord>& faces() const { return faces_; }
  int euler_genus() const { return euler_genus_; }
  // True when the sign assignment is equivalent to an all-positive one.
  bool scheme_orientable() const { return scheme_orientable_; }

 private:
  EmbeddedGraph() = default;

  int vertex_count_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> rotation_;
  std::vector<int> signs_;
  SurfaceClass surface_;

  std::vector<int> dart_vertex_;
  std::vector<int> dart_pos_;  // position of each dart in its rotation
  std::vector<std::vector<int>> adjacency_;
  std::vector<FaceRecord> faces_;
  int euler_genus_ = 0;
  bool scheme_orientable_ = true;
};

const std::vector<FaceRecord>& trace_faces(const EmbeddedGraph& g);
int euler_genus(const EmbeddedGraph& g);

// Length of a longest facial cycle, 0 if no face is bounded by a cycle.
int fmax_of(const EmbeddedGraph& g);

// Splits the given face by a new edge between the corners at walk positions
// corner_x and corner_y. The corner vertices must be distinct and
// non-adjacent. Face count grows by one, Euler genus is unchanged.
EmbeddedGraph insert_edge_in_face(const EmbeddedGraph& g, int face_index,
                                  int corner_x, int corner_y);

// Convenience: inserts x,y at their first common face's first corner
// occurrences. Throws "not co-facial" when the vertices share no face.
EmbeddedGraph insert_edge_between(const EmbeddedGraph& g, int x, int y);

// Adds a pendant vertex attached at the given corner of a face. Keeps the
// face count and Euler genus; the face's walk grows by two steps.
EmbeddedGraph add_leaf_in_face(const EmbeddedGraph& g, int face_index,
                               int corner);

// Re-signs along a spanning tree so that every edge sign is +1, reversing
// rotations at flipped vertices. Requires an orientable rotation system.
// The face structure is unchanged.
EmbeddedGraph normalize_signs(const EmbeddedGraph& g);

// Same rotation system declared on another surface.
EmbeddedGraph redeclare_surface(const EmbeddedGraph& g, SurfaceClass surface);

}  // namespace girthsat
