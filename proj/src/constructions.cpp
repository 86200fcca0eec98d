#include "girthsat/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace girthsat {

namespace {

// Accumulates edges, then resolves directed darts once rotations are known.
class MapBuilder {
 public:
  explicit MapBuilder(int vertex_count) : n_(vertex_count) {}

  int add_edge(int u, int v) {
    int id = static_cast<int>(edges_.size());
    edges_.push_back({u, v});
    ids_[{std::min(u, v), std::max(u, v)}] = id;
    return id;
  }

  // Dart emanating from u toward v.
  int dart(int u, int v) const {
    auto it = ids_.find({std::min(u, v), std::max(u, v)});
    if (it == ids_.end()) throw Error("builder: unknown edge");
    return 2 * it->second + (u < v ? 0 : 1);
  }

  void set_rotation(int v, std::vector<int> darts) {
    rotation_.resize(n_);
    rotation_[v] = std::move(darts);
  }

  EmbeddedGraph build(SurfaceClass surface) {
    rotation_.resize(n_);
    std::vector<int> signs(edges_.size(), 1);
    return EmbeddedGraph::build(n_, edges_, rotation_, std::move(signs),
                                surface);
  }

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::map<std::pair<int, int>, int> ids_;
  std::vector<std::vector<int>> rotation_;
};

}  // namespace

EmbeddedGraph gen_cycle_on(int n, SurfaceClass surface) {
  if (n < 3) throw Error("a cycle needs at least 3 vertices");
  MapBuilder b(n);
  for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  for (int i = 0; i < n; ++i)
    b.set_rotation(i, {b.dart(i, (i + 1) % n), b.dart(i, (i + n - 1) % n)});
  return b.build(surface);
}

EmbeddedGraph gen_cycle_disc(int ell) {
  if (ell < 3) throw Error("gen_cycle_disc needs ell >= 3");
  return gen_cycle_on(2 * ell - 3, SurfaceClass::sphere());
}

EmbeddedGraph gen_subdivided_wheel(const WheelSpec& spec) {
  int k = static_cast<int>(spec.spokes.size());
  if (k < 3 || static_cast<int>(spec.segments.size()) != k)
    throw Error("subdivided wheel needs >= 3 spokes and matching segments");
  for (int len : spec.spokes)
    if (len < 1) throw Error("spoke length must be >= 1");
  for (int len : spec.segments)
    if (len < 1) throw Error("segment length must be >= 1");

  int outer = std::accumulate(spec.segments.begin(), spec.segments.end(), 0);
  int inner = 0;
  for (int len : spec.spokes) inner += len - 1;
  int n = outer + inner + 1;
  int center = n - 1;

  MapBuilder b(n);
  for (int i = 0; i < outer; ++i) b.add_edge(i, (i + 1) % outer);

  // Feet of the spokes sit at the segment prefix sums.
  std::vector<int> foot(k);
  for (int i = 0, pos = 0; i < k; ++i) {
    foot[i] = pos;
    pos += spec.segments[i];
  }
  // Spoke i: foot -> interior chain -> center.
  std::vector<std::vector<int>> spoke_path(k);
  int next_id = outer;
  for (int i = 0; i < k; ++i) {
    spoke_path[i].push_back(foot[i]);
    for (int j = 0; j < spec.spokes[i] - 1; ++j)
      spoke_path[i].push_back(next_id++);
    spoke_path[i].push_back(center);
    for (std::size_t j = 0; j + 1 < spoke_path[i].size(); ++j)
      b.add_edge(spoke_path[i][j], spoke_path[i][j + 1]);
  }

  std::vector<char> is_foot(outer, 0);
  for (int f : foot) is_foot[f] = 1;
  for (int i = 0; i < outer; ++i) {
    int nxt = b.dart(i, (i + 1) % outer);
    int prv = b.dart(i, (i + outer - 1) % outer);
    if (is_foot[i]) {
      int which = static_cast<int>(std::find(foot.begin(), foot.end(), i) -
                                   foot.begin());
      b.set_rotation(i, {nxt, b.dart(i, spoke_path[which][1]), prv});
    } else {
      b.set_rotation(i, {nxt, prv});
    }
  }
  for (int i = 0; i < k; ++i) {
    const auto& path = spoke_path[i];
    for (std::size_t j = 1; j + 1 < path.size(); ++j)
      b.set_rotation(path[j],
                     {b.dart(path[j], path[j - 1]), b.dart(path[j], path[j + 1])});
  }
  std::vector<int> center_rot;
  for (int i = 0; i < k; ++i)
    center_rot.push_back(b.dart(center, spoke_path[i][spoke_path[i].size() - 2]));
  b.set_rotation(center, center_rot);

  return b.build(SurfaceClass::sphere());
}

EmbeddedGraph gen_wheel_W(int ell) {
  if (ell < 7)
    throw Error("gen_wheel_W needs ell >= 7; segments of length ell-4 "
                "degenerate below that");
  return gen_subdivided_wheel({{2, 2, 2}, {ell - 4, ell - 4, ell - 3}});
}

EmbeddedGraph gen_wheel_Wprime(int ell) {
  if (ell < 7 || ell > 9)
    throw Error("gen_wheel_Wprime is defined for ell in {7,8,9}");
  int outer = 3 * ell - 9;
  int seg = ell - 3;
  int n = outer + 6;

  MapBuilder b(n);
  for (int i = 0; i < outer; ++i) b.add_edge(i, (i + 1) % outer);
  // Three shared vertices; arc i of the inner 9-cycle runs from shared[i]
  // to shared[i+1] through two fresh vertices.
  std::vector<int> shared = {0, seg, 2 * seg};
  std::vector<std::vector<int>> arc(3);
  int next_id = outer;
  for (int i = 0; i < 3; ++i) {
    arc[i] = {shared[i], next_id, next_id + 1, shared[(i + 1) % 3]};
    next_id += 2;
    for (int j = 0; j < 3; ++j) b.add_edge(arc[i][j], arc[i][j + 1]);
  }

  for (int i = 0; i < outer; ++i) {
    int nxt = b.dart(i, (i + 1) % outer);
    int prv = b.dart(i, (i + outer - 1) % outer);
    auto it = std::find(shared.begin(), shared.end(), i);
    if (it != shared.end()) {
      int which = static_cast<int>(it - shared.begin());
      int to_next_arc = b.dart(i, arc[which][1]);
      int to_prev_arc = b.dart(i, arc[(which + 2) % 3][2]);
      b.set_rotation(i, {nxt, to_next_arc, to_prev_arc, prv});
    } else {
      b.set_rotation(i, {nxt, prv});
    }
  }
  for (int i = 0; i < 3; ++i) {
    b.set_rotation(arc[i][1], {b.dart(arc[i][1], arc[i][0]),
                               b.dart(arc[i][1], arc[i][2])});
    b.set_rotation(arc[i][2], {b.dart(arc[i][2], arc[i][1]),
                               b.dart(arc[i][2], arc[i][3])});
  }
  return b.build(SurfaceClass::sphere());
}

EmbeddedGraph gen_surface_construction(const SurfaceWheelSpec& spec) {
  if (spec.g < 1) throw Error("surface construction needs g >= 1");
  if (spec.ell < 6)
    throw Error("surface construction needs ell >= 6 so that m = ell-4 "
                "keeps the girth at ell");
  if (spec.crosscaps < 0 || spec.crosscaps > 2)
    throw Error("crosscaps must be 0, 1 or 2");

  int g = spec.g;
  int m = spec.ell - 4;
  int cyc = 2 * (g + 1) * m;
  int t = cyc;       // center of the star with feet on the cycle
  int t2 = cyc + 1;  // center of the star on the segment midpoints
  MapBuilder b(cyc + 2);
  for (int i = 0; i < cyc; ++i) b.add_edge(i, (i + 1) % cyc);
  std::vector<int> foot(g + 1), mid(g + 1);
  for (int i = 0; i <= g; ++i) {
    foot[i] = 2 * i * m;
    mid[i] = (2 * i + 1) * m;
    b.add_edge(t, foot[i]);
    b.add_edge(t2, mid[i]);
  }

  // One spoke dart between the cycle successor and predecessor everywhere;
  // both star centers list their darts by increasing foot/midpoint index.
  // Tracing this system yields the long cycle as one face and a single
  // second face, i.e. Euler genus exactly 2g.
  std::vector<int> hub(cyc, -1);
  for (int i = 0; i <= g; ++i) {
    hub[foot[i]] = t;
    hub[mid[i]] = t2;
  }
  for (int i = 0; i < cyc; ++i) {
    int nxt = b.dart(i, (i + 1) % cyc);
    int prv = b.dart(i, (i + cyc - 1) % cyc);
    if (hub[i] >= 0)
      b.set_rotation(i, {nxt, b.dart(i, hub[i]), prv});
    else
      b.set_rotation(i, {nxt, prv});
  }
  std::vector<int> rot_t, rot_t2;
  for (int i = 0; i <= g; ++i) {
    rot_t.push_back(b.dart(t, foot[i]));
    rot_t2.push_back(b.dart(t2, mid[i]));
  }
  b.set_rotation(t, rot_t);
  b.set_rotation(t2, rot_t2);

  SurfaceClass surface =
      spec.crosscaps == 0
          ? SurfaceClass::orientable_genus(g)
          : SurfaceClass::nonorientable_genus(2 * g + spec.crosscaps);
  return b.build(surface);
}

}  // namespace girthsat
