#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <string>

#include "naive.hpp"
#include "trifactor/chains.hpp"
#include "trifactor/generators.hpp"
#include "trifactor/oracle.hpp"
#include "trifactor/rng.hpp"
#include "trifactor/spectral.hpp"

using namespace trifactor;

namespace {

long long spectral_triangle_count(const Graph& g) {
  SpectralReport rep = analyze_spectrum(g);
  double cubes = 0.0;
  for (double ev : rep.eigenvalues) cubes += ev * ev * ev;
  return std::llround(cubes) / 6;
}

}  // namespace

TEST_CASE("triangle enumeration on fixed shapes") {
  auto k4 = enumerate_triangles(complete(4));
  REQUIRE(k4.size() == 4);
  CHECK(k4[0] == std::array{0, 1, 2});
  CHECK(k4[1] == std::array{0, 1, 3});
  CHECK(k4[2] == std::array{0, 2, 3});
  CHECK(k4[3] == std::array{1, 2, 3});

  CHECK(enumerate_triangles(cycle(6)).empty());
  CHECK(enumerate_triangles(complete(3)).size() == 1);
  CHECK(enumerate_triangles(Graph::empty(5)).empty());
}

TEST_CASE("triangle enumeration matches the reference scan and the spectrum") {
  Graph g = gnp(25, 0.5, 9);
  auto got = enumerate_triangles(g);
  CHECK(got == naive::triangles(g));
  CHECK(static_cast<long long>(got.size()) == spectral_triangle_count(g));

  for (std::uint64_t seed : {14, 15}) {
    Graph h = gnp(30, 0.3, seed);
    CHECK(static_cast<long long>(enumerate_triangles(h).size()) ==
          spectral_triangle_count(h));
  }
  CHECK(static_cast<long long>(enumerate_triangles(paley(13)).size()) ==
        spectral_triangle_count(paley(13)));
}

TEST_CASE("traversing-triangle search on fixed shapes") {
  Graph k3 = complete(3);
  auto hit = exists_traversing_triangle(k3, VertexSet::of(3, {0}),
                                        VertexSet::of(3, {1}),
                                        VertexSet::of(3, {2}));
  REQUIRE(hit.has_value());
  CHECK(*hit == std::array{0, 1, 2});

  CHECK(!exists_traversing_triangle(k3, VertexSet(3), VertexSet::of(3, {1}),
                                    VertexSet::of(3, {2}))
             .has_value());

  // Overlapping sets are allowed.
  VertexSet all = k3.all_vertices();
  auto overlap = exists_traversing_triangle(k3, all, all, all);
  REQUIRE(overlap.has_value());
  CHECK(*overlap == std::array{0, 1, 2});
}

TEST_CASE("traversing-triangle search agrees with the enumeration filter") {
  Rng rng(906);
  Graph g = gnp(20, 0.4, 21);
  auto list = enumerate_triangles(g);
  for (int trial = 0; trial < 60; ++trial) {
    VertexSet A(20), B(20), C(20);
    for (int v = 0; v < 20; ++v) {
      if (rng.unit() < 0.3) A.add(v);
      if (rng.unit() < 0.3) B.add(v);
      if (rng.unit() < 0.3) C.add(v);
    }
    auto meets = [](const std::array<int, 3>& t, const VertexSet& s) {
      return s.contains(t[0]) || s.contains(t[1]) || s.contains(t[2]);
    };
    std::optional<std::array<int, 3>> expect;
    for (const auto& t : list)
      if (meets(t, A) && meets(t, B) && meets(t, C)) {
        expect = t;
        break;
      }
    auto got = exists_traversing_triangle(g, A, B, C);
    CHECK(got == expect);
  }
}

TEST_CASE("exact factor search on fixed shapes") {
  Graph k3 = complete(3);
  auto f3 = exact_triangle_factor(k3, k3.all_vertices());
  REQUIRE(f3.has_value());
  REQUIRE(f3->triangles.size() == 1);
  CHECK(f3->triangles[0] == std::array{0, 1, 2});

  CHECK(!exact_triangle_factor(cycle(6), cycle(6).all_vertices()).has_value());

  Graph k9 = complete(9);
  auto f9 = exact_triangle_factor(k9, k9.all_vertices());
  REQUIRE(f9.has_value());
  CHECK(verify_triangle_factor(k9, *f9, k9.all_vertices()));

  // Empty target: the empty factor.
  auto f0 = exact_triangle_factor(k9, VertexSet(9));
  REQUIRE(f0.has_value());
  CHECK(f0->triangles.empty());
}

TEST_CASE("a removable vertex leaves a tilable chain") {
  Graph k13 = complete(13);
  Chain four = *build_chain_dfs(k13, k13.all_vertices(), 4).chain;
  auto [h, map] = four.chain_graph();
  for (int r : four.removable) {
    int local = static_cast<int>(
        std::find(map.begin(), map.end(), r) - map.begin());
    VertexSet target = h.all_vertices();
    target.remove(local);
    auto factor = exact_triangle_factor(h, target);
    REQUIRE(factor.has_value());
    CHECK(factor->triangles.size() == 4);
    CHECK(verify_triangle_factor(h, *factor, target));
  }
}

TEST_CASE("exact factor search validates its input") {
  Graph k9 = complete(9);
  CHECK_THROWS_AS(exact_triangle_factor(k9, VertexSet::of(9, {0, 1, 2, 3})),
                  std::invalid_argument);
  Graph k48 = complete(48);
  CHECK_THROWS_AS(exact_triangle_factor(k48, k48.all_vertices()),
                  std::runtime_error);
  // The cap is configurable, and the boundary is inclusive.
  CHECK(exact_triangle_factor(k48, k48.all_vertices(), 48).has_value());
}

TEST_CASE("factor decisions match the exhaustive tuple search") {
  for (int trial = 0; trial < 30; ++trial) {
    int n = trial % 2 == 0 ? 9 : 12;
    double p = 0.25 + 0.05 * (trial % 8);
    Graph g = gnp(n, p, 700 + trial);
    VertexSet target = g.all_vertices();
    auto got = exact_triangle_factor(g, target);
    CHECK(got.has_value() == naive::has_factor(g, target));
    if (got) CHECK(verify_triangle_factor(g, *got, target));
  }
}

TEST_CASE("chain triples joined by a triangle tile their whole union") {
  int checked = 0;
  for (std::uint64_t seed : {41, 42, 43}) {
    Graph g = gnp(60, 0.5, seed);
    int n = g.vertex_count();
    for (auto levels : {std::array{1, 1, 1}, std::array{2, 1, 1}}) {
      VertexSet avail = g.all_vertices();
      std::vector<Chain> chains;
      bool built = true;
      for (int l : levels) {
        ChainBuildResult res = build_chain_dfs(g, avail, l);
        if (!res.chain) {
          built = false;
          break;
        }
        chains.push_back(*res.chain);
        avail -= res.chain->vertex_set(n);
      }
      if (!built) continue;
      auto joint = exists_traversing_triangle(g, chains[0].removable_set(n),
                                              chains[1].removable_set(n),
                                              chains[2].removable_set(n));
      if (!joint) continue;
      ++checked;
      VertexSet target(n);
      for (const Chain& c : chains) target |= c.vertex_set(n);
      auto factor = exact_triangle_factor(g, target);
      REQUIRE(factor.has_value());
      CHECK(verify_triangle_factor(g, *factor, target));
    }
  }
  CHECK(checked >= 3);
}

TEST_CASE("factor diagnostics name the first violation") {
  Graph k6 = complete(6);
  VertexSet all = k6.all_vertices();

  TriangleFactor good;
  good.add(0, 1, 2);
  good.add(3, 4, 5);
  CHECK(triangle_factor_violation(k6, good, all).empty());

  TriangleFactor range;
  range.add(0, 1, 2);
  range.add(3, 4, 9);
  CHECK(triangle_factor_violation(k6, range, all).find("out of range") !=
        std::string::npos);

  TriangleFactor repeat;
  repeat.triangles.push_back({2, 2, 3});
  CHECK(triangle_factor_violation(k6, repeat, all)
            .find("repeats within the triple") != std::string::npos);

  Graph sparse = Graph::from_edges(3, {{0, 1}, {1, 2}});
  TriangleFactor notri;
  notri.add(0, 1, 2);
  std::string missing =
      triangle_factor_violation(sparse, notri, sparse.all_vertices());
  CHECK(missing.find("missing edge 0-2") != std::string::npos);

  TriangleFactor twice;
  twice.add(0, 1, 2);
  twice.add(2, 3, 4);
  std::string dup = triangle_factor_violation(k6, twice, all);
  CHECK(dup.find("triple 1") != std::string::npos);
  CHECK(dup.find("already covered") != std::string::npos);

  TriangleFactor shy;
  shy.add(0, 1, 2);
  CHECK(triangle_factor_violation(k6, shy, all).find("is not covered") !=
        std::string::npos);

  TriangleFactor spill;
  spill.add(0, 1, 2);
  CHECK(triangle_factor_violation(k6, spill, VertexSet::of(6, {0, 1}))
            .find("outside the target set") != std::string::npos);

  CHECK(triangle_factor_violation(k6, good, VertexSet(5))
            .find("universe") != std::string::npos);
}
