#include <doctest.h>

#include <random>
#include <set>

#include "girthsat/constructions.hpp"
#include "girthsat/metrics.hpp"
#include "girthsat/saturation.hpp"
#include "girthsat/search.hpp"
#include "support/random_maps.hpp"
#include "support/small_maps.hpp"

using girthsat::EmbeddedGraph;
using girthsat::Error;
using girthsat::SurfaceClass;

TEST_CASE("greedy saturation leaves maximal graphs unchanged") {
  EmbeddedGraph c7 = girthsat::gen_cycle_disc(5);
  EmbeddedGraph out = girthsat::greedy_saturate(c7, 5, 0);
  CHECK(out.edge_count() == c7.edge_count());

  EmbeddedGraph k2 = EmbeddedGraph::build(2, {{0, 1}}, {{0}, {1}}, {1},
                                          SurfaceClass::sphere());
  CHECK(girthsat::greedy_saturate(k2, 4, 0).edge_count() == 1);
}

TEST_CASE("greedy saturation of C_8 at ell=5 splits into four 5-faces") {
  EmbeddedGraph c8 = girthsat::gen_cycle_on(8, SurfaceClass::sphere());
  EmbeddedGraph out = girthsat::greedy_saturate(c8, 5, 0);
  CHECK(out.vertex_count() == 8);
  CHECK(out.edge_count() == 10);
  REQUIRE(out.faces().size() == 4);
  for (const auto& f : out.faces()) CHECK(f.degree == 5);
  CHECK(fmax_of(out) == 5);
  // chords chosen canonically: v0v4 first, then v2v6
  CHECK(out.adjacent(0, 4));
  CHECK(out.adjacent(2, 6));
  CHECK(girthsat::verify_saturated(out, 5).pass());
}

TEST_CASE("greedy saturation rejects short-girth seeds") {
  EmbeddedGraph c4 = girthsat::gen_cycle_on(4, SurfaceClass::sphere());
  CHECK_THROWS_WITH_AS(girthsat::greedy_saturate(c4, 5, 0),
                       doctest::Contains("girth"), Error);
}

TEST_CASE("greedy saturation always lands on verified graphs") {
  std::mt19937_64 rng(77);
  for (int iter = 0; iter < 40; ++iter) {
    int ell = std::uniform_int_distribution<int>(5, 9)(rng);
    EmbeddedGraph seed = girthsat::testing::random_girth_seed(ell, 24, rng);
    EmbeddedGraph out = girthsat::greedy_saturate(seed, ell, 0);
    auto rep = girthsat::verify_saturated(out, ell);
    CHECK(rep.pass());
    auto girth = girth_of(out);
    CHECK((!girth || *girth >= ell));
  }
}

TEST_CASE("refutation finds C_5 itself for ell=4, L=5") {
  auto rep = girthsat::exhaustive_refute(4, 5, 0, 1000);
  REQUIRE(rep.found.has_value());
  CHECK(rep.found->vertex_count() == 5);
  CHECK(rep.found->edge_count() == 5);
}

TEST_CASE("refutation exhausts empty for ell=3, L=4, k=1") {
  auto rep = girthsat::exhaustive_refute(3, 4, 1, 100000);
  CHECK(rep.exhausted);
  CHECK_FALSE(rep.found.has_value());
}

TEST_CASE("refutation with k=0 agrees with direct verification of C_L") {
  for (int ell = 3; ell <= 6; ++ell) {
    for (int len = ell; len <= 2 * ell - 2; ++len) {
      auto rep = girthsat::exhaustive_refute(ell, len, 0, 1000000);
      bool seed_passes = girthsat::verify_saturated(
          girthsat::gen_cycle_on(len, SurfaceClass::sphere()), ell).pass();
      CHECK(rep.found.has_value() == seed_passes);
    }
  }
}

namespace {

// Ground truth for exhaustive_refute by a completely different route:
// enumerate every edge superset of the labeled cycle C_len over len+extra
// vertices, every genus-0 rotation system of it, and ask whether any such
// map keeps the cycle facial, has girth >= ell, and passes the
// path-enumeration saturation oracle.
bool brute_completion_exists(int ell, int len, int k_max) {
  namespace tt = girthsat::testing;
  for (int extra = 0; extra <= k_max; ++extra) {
    int n = len + extra;
    std::vector<std::pair<int, int>> cycle_edges;
    for (int i = 0; i < len; ++i)
      cycle_edges.push_back({std::min(i, (i + 1) % len),
                             std::max(i, (i + 1) % len)});
    std::vector<std::pair<int, int>> free_pairs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        bool on_cycle = false;
        for (auto e : cycle_edges)
          if (e == std::make_pair(u, v)) on_cycle = true;
        if (!on_cycle) free_pairs.push_back({u, v});
      }
    int m = static_cast<int>(free_pairs.size());
    // girth->=ell planar graphs cannot exceed this edge count
    int max_extra_edges =
        std::max(n - 1, (ell * (n - 2) + ell - 3) / (ell - 2)) - len;

    bool found = false;
    for (long long mask = 0; mask < (1LL << m) && !found; ++mask) {
      if (__builtin_popcountll(static_cast<unsigned long long>(mask)) >
          max_extra_edges)
        continue;
      auto edges = cycle_edges;
      for (int b = 0; b < m; ++b)
        if (mask & (1LL << b)) edges.push_back(free_pairs[b]);
      tt::SmallGraph sg = tt::make_small_graph(n, edges);
      if (!tt::small_connected(sg)) continue;
      if (tt::small_has_short_cycle(sg, ell)) continue;

      tt::for_each_rotation(sg, [&](const std::vector<int>& rot_next) {
        if (found) return;
        auto walks = tt::small_face_walks(sg, rot_next);
        // genus 0 and the seeded cycle facial: a walk of length len whose
        // vertex set is exactly {0..len-1}
        int darts = 2 * static_cast<int>(sg.edges.size());
        int faces = static_cast<int>(walks.size());
        if (n - static_cast<int>(sg.edges.size()) + faces != 2 && darts > 0)
          return;
        bool cycle_facial = false;
        for (const auto& walk : walks) {
          if (static_cast<int>(walk.size()) != len) continue;
          std::set<int> vs(walk.begin(), walk.end());
          if (static_cast<int>(vs.size()) == len && *vs.rbegin() == len - 1)
            cycle_facial = true;
        }
        if (!cycle_facial) return;
        if (tt::small_oracle_pass(sg, walks, ell)) found = true;
      });
    }
    if (found) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("refutation verdicts match a from-scratch enumeration") {
  // (ell, cycle length, interior budget) grid kept small enough for the
  // brute enumeration over all supergraphs and rotation systems.
  const std::vector<std::array<int, 3>> grid = {
      {3, 3, 1}, {3, 4, 0}, {3, 4, 1}, {3, 5, 1}, {4, 5, 0}, {4, 5, 1},
      {4, 6, 0}, {4, 6, 1}, {4, 7, 0}, {5, 7, 0}, {5, 7, 1}, {5, 8, 0},
      {5, 9, 0}, {6, 9, 0}, {6, 10, 0},
  };
  for (auto [ell, len, kmax] : grid) {
    CAPTURE(ell);
    CAPTURE(len);
    CAPTURE(kmax);
    auto rep = girthsat::exhaustive_refute(ell, len, kmax, 10000000LL);
    REQUIRE(rep.exhausted || rep.found.has_value());
    CHECK(rep.found.has_value() == brute_completion_exists(ell, len, kmax));
  }
}

TEST_CASE("canonical dedup keeps refutation trees small") {
  // C_6 at ell=4 admits chords (0,3),(1,4),(2,5), all equivalent as marked
  // maps; without isomorph rejection the tree would branch on each.
  auto r46 = girthsat::exhaustive_refute(4, 6, 0, 1000000);
  CHECK(r46.exhausted);
  CHECK(r46.nodes <= 5);
  auto r523 = girthsat::exhaustive_refute(5, 8, 3, 100000000LL);
  CHECK(r523.exhausted);
  CHECK(r523.nodes <= 2000);
}

TEST_CASE("refutation respects the node budget") {
  auto rep = girthsat::exhaustive_refute(5, 9, 3, 25);
  CHECK_FALSE(rep.exhausted);
  CHECK_FALSE(rep.found.has_value());
  CHECK(rep.nodes <= 25);
}

TEST_CASE("refutation rejects bad parameters") {
  CHECK_THROWS_AS(girthsat::exhaustive_refute(5, 4, 0, 100), Error);
  CHECK_THROWS_AS(girthsat::exhaustive_refute(2, 4, 0, 100), Error);
  CHECK_THROWS_AS(girthsat::exhaustive_refute(5, 7, -1, 100), Error);
}

TEST_CASE("lower bound search hits the known plane values") {
  auto r5 = girthsat::lower_bound_search(5, SurfaceClass::sphere(), 6, 0);
  CHECK(r5.best_fmax == 7);
  CHECK(girthsat::verify_saturated(r5.best_graph, 5).pass());

  auto r7 = girthsat::lower_bound_search(7, SurfaceClass::sphere(), 2, 0);
  CHECK(r7.best_fmax >= 12);  // W'(7) is among the seeds

  auto r6 = girthsat::lower_bound_search(
      6, SurfaceClass::orientable_genus(1), 2, 0);
  CHECK(r6.best_fmax >= 8);
}

TEST_CASE("plane searches never beat the exact small-ell values") {
  for (int ell = 3; ell <= 6; ++ell) {
    auto r = girthsat::lower_bound_search(ell, SurfaceClass::sphere(), 8, 1);
    CHECK(r.best_fmax == 2 * ell - 3);
  }
}

TEST_CASE("plane searches stay within the linear upper bound") {
  for (int ell : {7, 8, 9}) {
    auto r = girthsat::lower_bound_search(ell, SurfaceClass::sphere(), 6, 2);
    CHECK(r.best_fmax >= 3 * ell - 9);
    CHECK(r.best_fmax <= 8 * ell - 13);
  }
}

TEST_CASE("search baseline never drops below 2*ell-3") {
  for (int ell : {4, 6, 8}) {
    auto r = girthsat::lower_bound_search(
        ell, SurfaceClass::nonorientable_genus(2), 3, 5);
    CHECK(r.best_fmax >= 2 * ell - 3);
  }
}

TEST_CASE("more restarts never lose ground and jobs do not change results") {
  auto r2 = girthsat::lower_bound_search(7, SurfaceClass::sphere(), 2, 3);
  auto r6 = girthsat::lower_bound_search(7, SurfaceClass::sphere(), 6, 3);
  CHECK(r6.best_fmax >= r2.best_fmax);

  auto seq = girthsat::lower_bound_search(6, SurfaceClass::sphere(), 6, 9, 1);
  auto par = girthsat::lower_bound_search(6, SurfaceClass::sphere(), 6, 9, 4);
  CHECK(seq.best_fmax == par.best_fmax);
  CHECK(seq.best_graph.edges() == par.best_graph.edges());
  CHECK(seq.best_graph.rotation() == par.best_graph.rotation());
  CHECK(seq.mode == par.mode);
}
