#include "girthsat/search.hpp"

#include <algorithm>
#include <future>
#include <random>
#include <unordered_set>

#include "girthsat/constructions.hpp"
#include "girthsat/metrics.hpp"
#include "girthsat/saturation.hpp"

namespace girthsat {

EmbeddedGraph greedy_saturate(const EmbeddedGraph& g0, int ell,
                              std::uint64_t /*seed*/) {
  auto girth = girth_of(g0);
  if (girth && *girth < ell)
    throw Error("greedy_saturate: seed graph has girth " +
                std::to_string(*girth) + " < " + std::to_string(ell));
  EmbeddedGraph g = g0;
  while (true) {
    auto pairs = list_addable_pairs(g, ell);
    if (pairs.empty()) return g;
    const AddablePair* pick = &pairs.front();
    for (const auto& p : pairs) {
      if (p.dist > pick->dist) pick = &p;
      // list order is already lexicographic in (x, y); the witness face is
      // the smallest shared face id, so ties stay put.
    }
    g = insert_edge_in_face(g, pick->witness_face, pick->corner_x,
                            pick->corner_y);
  }
}

namespace {

// Canonical form of an all-positive map with a marked face, as the lex-min
// traversal code over all boundary darts of the marked face and both
// orientations. Isomorphic states collapse to one key.
std::string canonical_map_key(const EmbeddedGraph& g,
                              const std::vector<int>& marked_walk) {
  const int darts = g.dart_count();
  std::vector<int> rot_next(darts), rot_prev(darts);
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& rot = g.rotation()[v];
    int deg = static_cast<int>(rot.size());
    for (int i = 0; i < deg; ++i) {
      rot_next[rot[i]] = rot[(i + 1) % deg];
      rot_prev[rot[i]] = rot[(i + deg - 1) % deg];
    }
  }

  std::string best;
  std::vector<int> label(darts);
  std::vector<int> order(darts);
  for (int root : marked_walk) {
    for (bool mirror : {false, true}) {
      const auto& succ = mirror ? rot_prev : rot_next;
      std::fill(label.begin(), label.end(), -1);
      int count = 0;
      label[root] = count;
      order[count++] = root;
      for (int i = 0; i < count; ++i) {
        int d = order[i];
        for (int nb : {succ[d], EmbeddedGraph::dart_twin(d)})
          if (label[nb] < 0) {
            label[nb] = count;
            order[count++] = nb;
          }
      }
      std::string code(4 * darts, '\0');
      for (int i = 0; i < darts; ++i) {
        int d = order[i];
        int a = label[succ[d]];
        int b = label[EmbeddedGraph::dart_twin(d)];
        code[4 * i] = static_cast<char>(a >> 8);
        code[4 * i + 1] = static_cast<char>(a & 0xff);
        code[4 * i + 2] = static_cast<char>(b >> 8);
        code[4 * i + 3] = static_cast<char>(b & 0xff);
      }
      if (best.empty() || code < best) best = std::move(code);
    }
  }
  return best;
}

struct RefuteState {
  int ell = 0;
  int k_max = 0;
  int base_vertices = 0;
  long long budget = 0;
  long long nodes = 0;
  bool truncated = false;
  std::optional<EmbeddedGraph> found;
  std::unordered_set<std::string> seen;
  std::vector<int> preserved_walk;

  // Dedup is an accelerator, not a soundness requirement: dropping the set
  // only re-explores states, and the node budget still terminates the run.
  static constexpr std::size_t kSeenCap = 20000000;
  bool remember(std::string key) {
    if (seen.size() >= kSeenCap) seen.clear();
    return seen.insert(std::move(key)).second;
  }
};

bool refute_dfs(RefuteState& st, const EmbeddedGraph& g, int interior) {
  if (st.nodes >= st.budget) {
    st.truncated = true;
    return true;
  }
  ++st.nodes;

  auto pairs = list_addable_pairs(g, st.ell);
  if (pairs.empty()) {
    bool interior_ok = true;
    for (int v = st.base_vertices; v < g.vertex_count(); ++v)
      if (g.degree(v) < 2) interior_ok = false;
    if (interior_ok && g.faces()[0].is_facial_cycle &&
        verify_saturated(g, st.ell).pass()) {
      st.found = g;
      return true;
    }
  }

  auto dist = all_pairs_distances(g);
  const auto& faces = g.faces();
  for (int fi = 1; fi < static_cast<int>(faces.size()); ++fi) {
    const auto& vs = faces[fi].vertices;
    int deg = static_cast<int>(vs.size());
    for (int i = 0; i < deg; ++i) {
      for (int j = i + 1; j < deg; ++j) {
        int x = vs[i], y = vs[j];
        if (x == y || g.adjacent(x, y)) continue;
        if (dist[x][y] < st.ell - 1) continue;  // chord would close a short cycle
        EmbeddedGraph child = insert_edge_in_face(g, fi, i, j);
        auto key = canonical_map_key(child, st.preserved_walk);
        if (!st.remember(std::move(key))) continue;
        if (refute_dfs(st, child, interior)) return true;
      }
    }
  }
  if (interior < st.k_max) {
    for (int fi = 1; fi < static_cast<int>(faces.size()); ++fi) {
      int deg = faces[fi].degree;
      for (int i = 0; i < deg; ++i) {
        EmbeddedGraph child = add_leaf_in_face(g, fi, i);
        auto key = canonical_map_key(child, st.preserved_walk);
        if (!st.remember(std::move(key))) continue;
        if (refute_dfs(st, child, interior + 1)) return true;
      }
    }
  }
  return false;
}

}  // namespace

RefutationReport exhaustive_refute(int ell, int cycle_len, int k_max,
                                   long long budget) {
  if (ell < 3) throw Error("ell must be at least 3");
  if (cycle_len < ell)
    throw Error("cycle_len must be at least ell to keep the girth");
  if (k_max < 0) throw Error("k_max must be nonnegative");
  if (budget < 1) throw Error("budget must be positive");

  EmbeddedGraph seed = gen_cycle_on(cycle_len, SurfaceClass::sphere());

  RefuteState st;
  st.ell = ell;
  st.k_max = k_max;
  st.base_vertices = cycle_len;
  st.budget = budget;
  // Face 0 starts at dart 0 and is never split, so it stays the preserved
  // copy of the seed cycle throughout the search.
  st.preserved_walk = seed.faces()[0].walk;
  st.remember(canonical_map_key(seed, st.preserved_walk));
  refute_dfs(st, seed, 0);

  RefutationReport rep;
  rep.ell = ell;
  rep.cycle_len = cycle_len;
  rep.k_max = k_max;
  rep.found = st.found;
  rep.exhausted = !st.truncated && !st.found;
  rep.nodes = st.nodes;
  return rep;
}

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t idx) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (idx + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Library constructions that are valid graphs on the given surface.
std::vector<EmbeddedGraph> library_seeds(int ell, SurfaceClass surface) {
  std::vector<EmbeddedGraph> seeds;
  auto try_add = [&](auto&& make) {
    try {
      seeds.push_back(redeclare_surface(make(), surface));
    } catch (const Error&) {
      // construction undefined or not embeddable with this declaration
    }
  };
  try_add([&] { return gen_cycle_disc(ell); });
  if (ell >= 7) try_add([&] { return gen_wheel_W(ell); });
  if (ell >= 7 && ell <= 9) try_add([&] { return gen_wheel_Wprime(ell); });
  if (ell >= 6 && surface.genus >= 1) {
    if (surface.orientable) {
      try_add([&] { return gen_surface_construction({surface.genus, ell, 0}); });
    } else if (surface.genus >= 3) {
      int crosscaps = surface.genus % 2 == 1 ? 1 : 2;
      int g = (surface.genus - crosscaps) / 2;
      if (g >= 1)
        try_add([&] { return gen_surface_construction({g, ell, crosscaps}); });
    }
  }
  return seeds;
}

std::optional<EmbeddedGraph> random_seed_graph(int ell, SurfaceClass surface,
                                               std::uint64_t seed_value) {
  std::mt19937_64 rng(seed_value);
  auto rand_int = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  // Half the restarts try a random subdivided wheel, the rest long cycles.
  if (rand_int(0, 1) == 0) {
    int k = rand_int(3, 4);
    WheelSpec spec;
    int budget = 40;
    for (int i = 0; i < k; ++i) {
      spec.spokes.push_back(rand_int(1, std::max(1, ell / 2)));
      spec.segments.push_back(rand_int(std::max(1, ell - 5), ell));
    }
    int size = 1;
    for (int s : spec.spokes) size += s - 1;
    for (int s : spec.segments) size += s;
    if (size <= budget) {
      try {
        auto wheel = redeclare_surface(gen_subdivided_wheel(spec), surface);
        auto girth = girth_of(wheel);
        if (!girth || *girth >= ell) return wheel;
      } catch (const Error&) {
      }
    }
  }
  int n = rand_int(std::max(3, ell), std::min(3 * ell, 40));
  try {
    return gen_cycle_on(n, surface);
  } catch (const Error&) {
    return std::nullopt;
  }
}

struct RestartOutcome {
  std::optional<EmbeddedGraph> graph;
  int fmax = -1;
  long long insertions = 0;
  bool from_library = false;
};

}  // namespace

SearchResult lower_bound_search(
    int ell, SurfaceClass surface, int restarts, std::uint64_t seed, int jobs,
    const std::function<void(const SearchEvent&)>& on_event) {
  if (ell < 3) throw Error("ell must be at least 3");
  if (restarts < 0) throw Error("restarts must be nonnegative");

  auto seeds = library_seeds(ell, surface);
  int total = static_cast<int>(seeds.size()) + restarts;

  auto run_one = [&](int idx) -> RestartOutcome {
    RestartOutcome out;
    std::optional<EmbeddedGraph> start;
    if (idx < static_cast<int>(seeds.size())) {
      start = seeds[idx];
      out.from_library = true;
    } else {
      start = random_seed_graph(
          ell, surface, mix_seed(seed, idx - seeds.size()));
    }
    if (!start) return out;
    EmbeddedGraph result = greedy_saturate(*start, ell, seed);
    out.insertions = result.edge_count() - start->edge_count();
    if (!verify_saturated(result, ell).pass())
      throw Error("internal: greedy result failed verification");
    out.fmax = fmax_of(result);
    out.graph = std::move(result);
    return out;
  };

  std::vector<RestartOutcome> outcomes(total);
  if (jobs <= 1) {
    for (int i = 0; i < total; ++i) outcomes[i] = run_one(i);
  } else {
    std::vector<std::future<RestartOutcome>> futs;
    futs.reserve(total);
    for (int i = 0; i < total; ++i)
      futs.push_back(std::async(std::launch::async, run_one, i));
    for (int i = 0; i < total; ++i) outcomes[i] = futs[i].get();
  }

  std::optional<EmbeddedGraph> best_graph;
  int best_fmax = -1;
  long long insertions = 0;
  std::string mode;
  for (int i = 0; i < total; ++i) {
    const auto& out = outcomes[i];
    if (!out.graph) continue;
    insertions += out.insertions;
    if (out.fmax > best_fmax) {
      best_fmax = out.fmax;
      best_graph = *out.graph;
      mode = out.from_library ? "greedy" : "random";
    }
    if (on_event) on_event({i, out.fmax, best_fmax});
  }
  if (!best_graph) throw Error("internal: no seed produced a graph");
  return SearchResult{*best_graph, best_fmax, seed, restarts, insertions,
                      mode};
}

}  // namespace girthsat
