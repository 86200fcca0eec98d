#include <doctest.h>

#include <random>

#include "girthsat/constructions.hpp"
#include "girthsat/json_io.hpp"
#include "support/random_maps.hpp"

using girthsat::EmbeddedGraph;
using girthsat::Error;
using nlohmann::json;

TEST_CASE("graph json round trip preserves the map") {
  std::mt19937_64 rng(808);
  for (int iter = 0; iter < 100; ++iter) {
    EmbeddedGraph g = girthsat::testing::random_valid_map(10, rng);
    EmbeddedGraph back = girthsat::graph_from_json(
        json::parse(girthsat::dump_json(girthsat::graph_to_json(g))));
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(back.edges() == g.edges());
    CHECK(back.rotation() == g.rotation());
    CHECK(back.signs() == g.signs());
    CHECK(back.surface() == g.surface());
    CHECK(back.euler_genus() == g.euler_genus());
  }
}

TEST_CASE("edge pairs may come in either order, darts bind to the lower id") {
  // triangle given with a reversed pair; rotations follow the canonical
  // dart numbering (dart 2i at min(u,v))
  json j = {
      {"vertex_count", 3},
      {"edges", {{0, 1}, {2, 1}, {0, 2}}},
      {"rotation", {{0, 4}, {1, 2}, {3, 5}}},
      {"signs", {1, 1, 1}},
      {"surface", {{"orientable", true}, {"genus", 0}}},
  };
  EmbeddedGraph g = girthsat::graph_from_json(j);
  CHECK(g.edges()[1] == std::pair<int, int>{1, 2});
  // writer emits normalized pairs
  CHECK(girthsat::graph_to_json(g)["edges"][1] ==
        nlohmann::ordered_json({1, 2}));
}

TEST_CASE("unknown and missing keys are named in the diagnostic") {
  json good = girthsat::graph_to_json(girthsat::gen_cycle_disc(3));

  json extra = good;
  extra["color"] = "blue";
  CHECK_THROWS_WITH_AS(girthsat::graph_from_json(extra),
                       doctest::Contains("unexpected key 'color'"), Error);

  json missing = good;
  missing.erase("signs");
  CHECK_THROWS_WITH_AS(girthsat::graph_from_json(missing),
                       doctest::Contains("missing key 'signs'"), Error);

  json bad_type = good;
  bad_type["vertex_count"] = "three";
  CHECK_THROWS_WITH_AS(girthsat::graph_from_json(bad_type),
                       doctest::Contains("'vertex_count'"), Error);

  json bad_surface = good;
  bad_surface["surface"] = {{"orientable", true}};
  CHECK_THROWS_WITH_AS(girthsat::graph_from_json(bad_surface),
                       doctest::Contains("missing key 'genus'"), Error);

  json bad_sign = good;
  bad_sign["signs"][0] = 0;
  CHECK_THROWS_WITH_AS(girthsat::graph_from_json(bad_sign),
                       doctest::Contains("sign"), Error);

  json bad_genus = good;
  bad_genus["surface"]["genus"] = -1;
  CHECK_THROWS_WITH_AS(girthsat::graph_from_json(bad_genus),
                       doctest::Contains("genus"), Error);
}

TEST_CASE("reports and lens certificates serialize with fixed keys") {
  auto rep = girthsat::verify_saturated(girthsat::gen_cycle_disc(4), 4);
  auto j = girthsat::report_to_json(rep);
  CHECK(j["pass"] == true);
  CHECK(j["fmax"] == 5);
  CHECK(j["girth"] == 5);
  CHECK(j["addable_pairs"].is_array());

  girthsat::LensCertificate cert;
  cert.x = 1;
  cert.y = 4;
  cert.path_a = {{1, 2, 3, 4}};
  cert.path_b = {{1, 7, 4}};
  auto jc = girthsat::lens_to_json(cert);
  CHECK(jc.size() == 4);
  CHECK(jc["x"] == 1);
  CHECK(jc["path_b"] == nlohmann::ordered_json({1, 7, 4}));
}

TEST_CASE("the writer output is byte-stable") {
  // Golden copy of the smallest construction; pins the canonical key order,
  // pair normalization and dart numbering of the interchange format.
  // C_3: edges (0,1),(1,2),(0,2); each vertex lists its forward dart first.
  const std::string want =
      "{\n"
      "  \"vertex_count\": 3,\n"
      "  \"edges\": [\n    [\n      0,\n      1\n    ],\n"
      "    [\n      1,\n      2\n    ],\n"
      "    [\n      0,\n      2\n    ]\n  ],\n"
      "  \"rotation\": [\n    [\n      0,\n      4\n    ],\n"
      "    [\n      2,\n      1\n    ],\n"
      "    [\n      5,\n      3\n    ]\n  ],\n"
      "  \"signs\": [\n    1,\n    1,\n    1\n  ],\n"
      "  \"surface\": {\n    \"orientable\": true,\n    \"genus\": 0\n  }\n"
      "}\n";
  CHECK(girthsat::dump_json(girthsat::graph_to_json(
            girthsat::gen_cycle_disc(3))) == want);
}

TEST_CASE("file io round trip") {
  EmbeddedGraph g = girthsat::gen_wheel_W(8);
  std::string path = "io_test_wheel8.json";
  girthsat::write_graph_file(g, path);
  EmbeddedGraph back = girthsat::read_graph_file(path);
  CHECK(back.edges() == g.edges());
  CHECK(back.rotation() == g.rotation());
  std::remove(path.c_str());
  CHECK_THROWS_WITH_AS(girthsat::read_graph_file("io_test_missing.json"),
                       doctest::Contains("cannot open"), Error);
}
