#pragma once

#include <vector>

#include "girthsat/embedded_graph.hpp"

namespace girthsat {

// A subdivided wheel: outer cycle plus a tree whose single branch vertex is
// the center; spokes[i] is the length of the i-th center-to-cycle path and
// segments[i] the cycle arc between the feet of spokes i and i+1.
struct WheelSpec {
  std::vector<int> spokes;
  std::vector<int> segments;
};

// Parameters of the surface lower-bound graph: a wheel with g+1 spokes of
// length 1 and g+1 segments of length 2(ell-4), plus a second star whose
// leaves are the segment midpoints. crosscaps 0 declares S_g, crosscaps 1
// declares N_{2g+1}, crosscaps 2 declares N_{2g+2}.
struct SurfaceWheelSpec {
  int g = 1;
  int ell = 6;
  int crosscaps = 0;
};

// C_{2*ell-3} bounding a disc on the sphere.
EmbeddedGraph gen_cycle_disc(int ell);

// Plain n-cycle declared on an arbitrary surface.
EmbeddedGraph gen_cycle_on(int n, SurfaceClass surface);

// Plane embedding of a subdivided wheel; outer cycle is the first face.
// Vertices: outer cycle first (starting at the foot of spoke 0), then the
// interior spoke vertices, then the center.
EmbeddedGraph gen_subdivided_wheel(const WheelSpec& spec);

// W(ell): three spokes of length 2, segments ell-4, ell-4, ell-3.
EmbeddedGraph gen_wheel_W(int ell);

// W'(ell) for ell in {7,8,9}: edge-disjoint union of C_9 and C_{3*ell-9}
// sharing three vertices equidistant on each cycle.
EmbeddedGraph gen_wheel_Wprime(int ell);

// The genus lower-bound construction; the rotation system traces exactly
// two faces, so its Euler genus is exactly 2g and the long cycle is facial.
EmbeddedGraph gen_surface_construction(const SurfaceWheelSpec& spec);

}  // namespace girthsat
