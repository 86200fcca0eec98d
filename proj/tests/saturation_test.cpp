#include <doctest.h>

#include <random>

#include "girthsat/constructions.hpp"
#include "girthsat/metrics.hpp"
#include "girthsat/saturation.hpp"
#include "support/oracles.hpp"
#include "support/random_maps.hpp"

using girthsat::EmbeddedGraph;
using girthsat::Error;
using girthsat::SurfaceClass;

namespace oracle = girthsat::testing;

TEST_CASE("C_7 is maximal for ell=5 with fmax 7") {
  auto rep = girthsat::verify_saturated(girthsat::gen_cycle_disc(5), 5);
  CHECK(rep.pass());
  CHECK(rep.girth == 7);
  CHECK(rep.fmax == 7);
  CHECK(rep.addable.empty());
}

TEST_CASE("C_8 fails for ell=5 with the antipodal addable pair") {
  EmbeddedGraph c8 = girthsat::gen_cycle_on(8, SurfaceClass::sphere());
  auto rep = girthsat::verify_saturated(c8, 5);
  CHECK_FALSE(rep.pass());
  CHECK(rep.girth_ok);
  CHECK_FALSE(rep.maximal_ok);
  REQUIRE_FALSE(rep.addable.empty());
  CHECK(rep.addable.front().x == 0);
  CHECK(rep.addable.front().y == 4);
  CHECK(rep.addable.front().dist == 4);
  // the pair is co-facial on both faces of the cycle, reported once
  CHECK(rep.addable.front().faces.size() == 2);
}

TEST_CASE("W(7) is maximal for ell=7") {
  CHECK(girthsat::verify_saturated(girthsat::gen_wheel_W(7), 7).pass());
}

TEST_CASE("girth failures carry a short cycle witness") {
  EmbeddedGraph c4 = girthsat::gen_cycle_on(4, SurfaceClass::sphere());
  auto rep = girthsat::verify_saturated(c4, 5);
  CHECK_FALSE(rep.pass());
  CHECK_FALSE(rep.girth_ok);
  REQUIRE(rep.short_cycle.has_value());
  CHECK(rep.short_cycle->size() == 4);
}

TEST_CASE("list_addable_pairs examples") {
  CHECK(girthsat::list_addable_pairs(girthsat::gen_cycle_disc(5), 5).empty());

  EmbeddedGraph c9 = girthsat::gen_cycle_on(9, SurfaceClass::sphere());
  auto pairs = girthsat::list_addable_pairs(c9, 5);
  bool has_04 = false;
  for (const auto& p : pairs)
    if (p.x == 0 && p.y == 4 && p.dist == 4) has_04 = true;
  CHECK(has_04);

  // planar K_4 is complete: nothing to add
  EmbeddedGraph k4 = girthsat::gen_subdivided_wheel({{1, 1, 1}, {1, 1, 1}});
  CHECK(k4.vertex_count() == 4);
  CHECK(k4.euler_genus() == 0);
  CHECK(girthsat::list_addable_pairs(k4, 3).empty());

  CHECK_THROWS_WITH_AS(girthsat::list_addable_pairs(c9, 2),
                       doctest::Contains("ell"), Error);
  CHECK_THROWS_WITH_AS(girthsat::verify_saturated(c9, 2),
                       doctest::Contains("ell"), Error);
}

TEST_CASE("addable pairs are sound insertion witnesses") {
  std::mt19937_64 rng(1337);
  int exercised = 0;
  for (int iter = 0; iter < 120; ++iter) {
    EmbeddedGraph g = girthsat::testing::random_plane_map(
        std::uniform_int_distribution<int>(4, 9)(rng), 3, rng);
    for (int ell : {3, 4, 5}) {
      auto girth = girth_of(g);
      if (girth && *girth < ell) continue;
      for (const auto& p : girthsat::list_addable_pairs(g, ell)) {
        EmbeddedGraph grown =
            insert_edge_in_face(g, p.witness_face, p.corner_x, p.corner_y);
        CHECK(grown.euler_genus() == g.euler_genus());
        CHECK(grown.surface() == g.surface());
        auto grown_girth = girth_of(grown);
        CHECK((!grown_girth || *grown_girth >= ell));
        ++exercised;
      }
    }
  }
  CHECK(exercised > 50);
}

TEST_CASE("verdicts agree with the try-every-edge oracle on random maps") {
  std::mt19937_64 rng(2025);
  for (int iter = 0; iter < 250; ++iter) {
    EmbeddedGraph g = girthsat::testing::random_valid_map(8, rng);
    for (int ell : {3, 4, 5}) {
      bool got = girthsat::verify_saturated(g, ell).pass();
      bool want = !oracle::oracle_has_cycle_shorter_than(g, ell) &&
                  oracle::oracle_maximal(g, ell);
      CHECK(got == want);
    }
  }
}

TEST_CASE("PASSing plane graphs obey the fmax bounds") {
  for (int ell = 7; ell <= 12; ++ell) {
    auto rep = girthsat::verify_saturated(girthsat::gen_wheel_W(ell), ell);
    CHECK(rep.pass());
    CHECK(rep.fmax <= 8 * ell - 13);
  }
  for (int ell = 3; ell <= 6; ++ell) {
    auto rep = girthsat::verify_saturated(girthsat::gen_cycle_disc(ell), ell);
    CHECK(rep.pass());
    CHECK(rep.fmax <= 2 * ell - 3);
  }
}

TEST_CASE("a cellular triangle on the projective plane passes with fmax 0") {
  // One face whose walk traverses every edge twice: no facial cycle at all,
  // yet nothing is addable in a complete graph.
  EmbeddedGraph g = EmbeddedGraph::build(
      3, {{0, 1}, {1, 2}, {0, 2}}, {{0, 4}, {1, 2}, {3, 5}}, {-1, 1, 1},
      girthsat::SurfaceClass::nonorientable_genus(1));
  REQUIRE(g.faces().size() == 1);
  CHECK_FALSE(g.faces()[0].is_facial_cycle);
  auto rep = girthsat::verify_saturated(g, 3);
  CHECK(rep.pass());
  CHECK(rep.fmax == 0);
}

TEST_CASE("re-signing never changes the verdict") {
  std::mt19937_64 rng(606);
  int checked = 0;
  for (int iter = 0; iter < 150; ++iter) {
    EmbeddedGraph g = girthsat::testing::random_valid_map(9, rng);
    if (!g.scheme_orientable()) continue;
    ++checked;
    EmbeddedGraph norm = normalize_signs(g);
    for (int ell : {3, 4, 5}) {
      auto a = girthsat::verify_saturated(g, ell);
      auto b = girthsat::verify_saturated(norm, ell);
      CHECK(a.pass() == b.pass());
      CHECK(a.fmax == b.fmax);
      CHECK(a.addable.size() == b.addable.size());
    }
  }
  CHECK(checked > 30);
}

TEST_CASE("PASSing surface graphs obey the quadratic bound") {
  for (int g = 1; g <= 3; ++g)
    for (int ell : {6, 9}) {
      auto rep = girthsat::verify_saturated(
          girthsat::gen_surface_construction({g, ell, 0}), ell);
      CHECK(rep.pass());
      CHECK(rep.fmax <= 24 * (2 * g + 1) * ell * ell);
    }
}
