#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <optional>

#include "naive.hpp"
#include "trifactor/absorber.hpp"
#include "trifactor/chains.hpp"
#include "trifactor/generators.hpp"
#include "trifactor/oracle.hpp"
#include "trifactor/rng.hpp"

using namespace trifactor;

namespace {

AuxGraph random_aux(Rng& rng, int upper_count, double density) {
  AuxGraph a;
  a.upper_count = upper_count;
  for (int j = 0; j < upper_count; ++j)
    for (int k = j + 1; k < upper_count; ++k)
      if (rng.unit() < density) {
        a.edges.emplace_back(j, k);
        a.witnesses.push_back({0, 1, 2});
      }
  return a;
}

IndexGraph union_of(const std::vector<AuxGraph>& graphs,
                    const std::vector<int>& members) {
  int u = 0;
  for (int i : members) u = std::max(u, graphs[i].upper_count);
  IndexGraph out(u);
  for (int i : members)
    for (auto [a, b] : graphs[i].edges)
      if (!out.has_edge(a, b)) out.add_edge(a, b);
  return out;
}

// First family (sizes ascending, members lexicographic) whose union has a
// cover smaller than three times the family size, using the reference
// bounded-cover oracle; the pair carries that union's exact cover size.
std::optional<std::pair<std::vector<int>, int>> reference_violation(
    const std::vector<AuxGraph>& graphs, int j_cap) {
  int m = static_cast<int>(graphs.size());
  std::vector<int> J;
  std::optional<std::pair<std::vector<int>, int>> found;
  std::function<void(int, int)> rec = [&](int start, int want) {
    if (found) return;
    if (want == 0) {
      IndexGraph u = union_of(graphs, J);
      std::uint64_t all = u.n == 64 ? ~0ULL : ((1ULL << u.n) - 1ULL);
      int bound = 3 * static_cast<int>(J.size());
      if (!naive::coverable_within(u, all, bound - 1)) return;
      int tau = 0;
      while (!naive::coverable_within(u, all, tau)) ++tau;
      found = {{J, tau}};
      return;
    }
    for (int i = start; i <= m - want && !found; ++i) {
      J.push_back(i);
      rec(i + 1, want - 1);
      J.pop_back();
    }
  };
  for (int size = 1; size <= std::min(j_cap, m) && !found; ++size) rec(0, size);
  return found;
}

std::vector<Chain> take_chains(const Graph& g, VertexSet& avail, int count,
                               int level) {
  std::vector<Chain> out;
  for (int i = 0; i < count; ++i) {
    ChainBuildResult res = build_chain_dfs(g, avail, level);
    REQUIRE(res.chain.has_value());
    out.push_back(*res.chain);
    avail -= res.chain->vertex_set(g.vertex_count());
  }
  return out;
}

std::vector<Chain> take_singles(VertexSet& avail, int count) {
  std::vector<Chain> out;
  for (int i = 0; i < count; ++i) {
    int v = avail.min();
    REQUIRE(v >= 0);
    out.push_back(Chain::single(v));
    avail.remove(v);
  }
  return out;
}

}  // namespace

TEST_CASE("index graph storage") {
  IndexGraph g(5);
  g.add_edge(0, 3);
  g.add_edge(3, 4);
  CHECK(g.has_edge(0, 3));
  CHECK(g.has_edge(3, 0));
  CHECK(g.has_edge(3, 4));
  CHECK(!g.has_edge(0, 4));
  CHECK(!g.has_edge(0, 5));
  CHECK(g.edge_total() == 2);
  CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(-1, 2), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(2, 5), std::invalid_argument);
}

TEST_CASE("exact covers on fixed shapes") {
  IndexGraph edge(2);
  edge.add_edge(0, 1);
  CHECK(vertex_cover_size(edge) == 1);

  IndexGraph c5(5);
  for (int i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
  CHECK(vertex_cover_size(c5) == 3);

  IndexGraph tri(3);
  tri.add_edge(0, 1);
  tri.add_edge(0, 2);
  tri.add_edge(1, 2);
  CHECK(vertex_cover_size(tri) == 2);

  CHECK(vertex_cover_size(IndexGraph(7)) == 0);
  CHECK_THROWS_AS(vertex_cover_size(IndexGraph(65)), std::runtime_error);
}

TEST_CASE("exact covers match the subset oracle on seeded graphs") {
  Rng rng(901);
  for (int trial = 0; trial < 40; ++trial) {
    double density = 0.15 + 0.05 * (trial % 10);
    AuxGraph a = random_aux(rng, 12, density);
    IndexGraph g = a.index_graph();
    auto [tau, mask] = vertex_cover_with_witness(g);
    CHECK(tau == naive::cover_size(g));
    // The witness must cover every edge with exactly tau vertices.
    CHECK(std::popcount(mask) == tau);
    for (auto [u, v] : a.edges)
      CHECK((((mask >> u) & 1ULL) || ((mask >> v) & 1ULL)));
  }
}

TEST_CASE("cover size is subadditive under union") {
  Rng rng(902);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<AuxGraph> pair = {random_aux(rng, 14, 0.2),
                                  random_aux(rng, 14, 0.2)};
    int separate = vertex_cover_size(pair[0].index_graph()) +
                   vertex_cover_size(pair[1].index_graph());
    int joint = vertex_cover_size(union_of(pair, {0, 1}));
    CHECK(joint <= separate);
  }
}

TEST_CASE("aux graph of a constructed link") {
  // Host triangle 0-5-9 meets the lower chain {0} and both uppers.
  Graph g = Graph::from_edges(10, {{0, 5}, {0, 9}, {5, 9}, {1, 2}});
  std::vector<Chain> uppers = {Chain::single(5), Chain::single(9)};
  AuxGraph aux = build_aux_graph(g, Chain::single(0), uppers);
  CHECK(aux.upper_count == 2);
  REQUIRE(aux.edges.size() == 1);
  CHECK(aux.edges[0] == std::pair{0, 1});
  CHECK(aux.witnesses[0] == std::array{0, 5, 9});
}

TEST_CASE("aux graph of a triangle-free host is edgeless") {
  Graph g = complete_multipartite({5, 5});
  VertexSet avail = g.all_vertices();
  std::vector<Chain> uppers = take_singles(avail, 4);
  Chain lower = Chain::single(avail.min());
  AuxGraph aux = build_aux_graph(g, lower, uppers);
  CHECK(aux.upper_count == 4);
  CHECK(aux.edges.empty());
}

TEST_CASE("aux edges equal the brute-force triangle scan") {
  Graph g = gnp(60, 0.6, 17);
  std::vector<Chain> uppers = {Chain::single(1), Chain::single(2),
                               Chain::single(3), Chain::single(4)};
  AuxGraph aux = build_aux_graph(g, Chain::single(0), uppers);
  for (int j = 0; j < 4; ++j)
    for (int k = j + 1; k < 4; ++k) {
      bool expect = g.adjacent(0, j + 1) && g.adjacent(0, k + 1) &&
                    g.adjacent(j + 1, k + 1);
      bool got = std::find(aux.edges.begin(), aux.edges.end(),
                           std::pair{j, k}) != aux.edges.end();
      CHECK(got == expect);
    }
}

TEST_CASE("aux witnesses are host triangles through the removable sets") {
  Graph g = gnp(80, 0.5, 23);
  VertexSet avail = g.all_vertices();
  Chain lower = take_chains(g, avail, 1, 1)[0];
  std::vector<Chain> uppers = take_chains(g, avail, 3, 1);
  AuxGraph aux = build_aux_graph(g, lower, uppers);
  int n = g.vertex_count();
  for (std::size_t e = 0; e < aux.edges.size(); ++e) {
    auto [j, k] = aux.edges[e];
    auto [r, s, u] = aux.witnesses[e];
    CHECK(lower.removable_set(n).contains(r));
    CHECK(uppers[j].removable_set(n).contains(s));
    CHECK(uppers[k].removable_set(n).contains(u));
    CHECK(g.adjacent(r, s));
    CHECK(g.adjacent(r, u));
    CHECK(g.adjacent(s, u));
  }
  // Edge existence matches an independent scan over the removable sets.
  for (int j = 0; j < 3; ++j)
    for (int k = j + 1; k < 3; ++k) {
      bool expect = false;
      for (int r : lower.removable)
        for (int s : uppers[j].removable)
          for (int u : uppers[k].removable)
            if (g.adjacent(r, s) && g.adjacent(r, u) && g.adjacent(s, u))
              expect = true;
      bool got = std::find(aux.edges.begin(), aux.edges.end(),
                           std::pair{j, k}) != aux.edges.end();
      CHECK(got == expect);
    }
}

TEST_CASE("aux graph rejects overlapping chains") {
  Graph g = complete(6);
  std::vector<Chain> uppers = {Chain::single(0), Chain::single(1)};
  CHECK_THROWS_AS(build_aux_graph(g, Chain::single(0), uppers),
                  std::invalid_argument);
}

TEST_CASE("cover condition holds for a wide matching") {
  AuxGraph a;
  a.upper_count = 8;
  for (int i = 0; i < 4; ++i) {
    a.edges.emplace_back(2 * i, 2 * i + 1);
    a.witnesses.push_back({0, 1, 2});
  }
  std::vector<AuxGraph> fam = {a};
  HaxellCheck check = haxell_condition_exhaustive(fam, 1);
  CHECK(check.verdict == HaxellCheck::Verdict::holds);
}

TEST_CASE("identical skinny graphs violate the cover condition") {
  AuxGraph a;
  a.upper_count = 2;
  a.edges.emplace_back(0, 1);
  a.witnesses.push_back({0, 1, 2});
  std::vector<AuxGraph> fam = {a, a, a};
  HaxellCheck check = haxell_condition_exhaustive(fam, 2);
  REQUIRE(check.verdict == HaxellCheck::Verdict::violated);
  CHECK(check.tau < 3 * static_cast<int>(check.violating.size()));
  CHECK(check.tau == naive::cover_size(union_of(fam, check.violating)));
}

TEST_CASE("violations can first appear at family size two") {
  // Each graph alone carries a 3-edge matching (cover 3), but the two
  // graphs share it, so their union still has cover 3 < 6.
  AuxGraph a;
  a.upper_count = 6;
  for (int i = 0; i < 3; ++i) {
    a.edges.emplace_back(2 * i, 2 * i + 1);
    a.witnesses.push_back({0, 1, 2});
  }
  std::vector<AuxGraph> fam = {a, a};
  HaxellCheck check = haxell_condition_exhaustive(fam, 2);
  REQUIRE(check.verdict == HaxellCheck::Verdict::violated);
  CHECK(check.violating == std::vector<int>{0, 1});
  CHECK(check.tau == 3);
  // The reported cover really covers the union.
  IndexGraph u = union_of(fam, check.violating);
  for (auto [x, y] : a.edges) {
    bool covered = false;
    for (int v : check.cover) covered = covered || v == x || v == y;
    CHECK(covered);
  }
}

TEST_CASE("exhaustive verdicts match the reference enumeration") {
  Rng rng(903);
  int violated_seen = 0, holds_seen = 0;
  for (int trial = 0; trial < 30; ++trial) {
    double density = trial % 3 == 0 ? 0.01 : (trial % 3 == 1 ? 0.03 : 0.06);
    std::vector<AuxGraph> fam;
    for (int i = 0; i < 5; ++i) fam.push_back(random_aux(rng, 30, density));
    HaxellCheck check = haxell_condition_exhaustive(fam, 3);
    auto expect = reference_violation(fam, 3);
    if (expect) {
      ++violated_seen;
      REQUIRE(check.verdict == HaxellCheck::Verdict::violated);
      CHECK(check.violating == expect->first);
      CHECK(check.tau == expect->second);
    } else {
      ++holds_seen;
      CHECK(check.verdict == HaxellCheck::Verdict::holds);
    }
  }
  CHECK(violated_seen > 0);
  CHECK(holds_seen > 0);
}

TEST_CASE("exhaustive mode refuses oversized inputs") {
  std::vector<AuxGraph> many(23);
  for (AuxGraph& a : many) a.upper_count = 4;
  CHECK_THROWS_AS(haxell_condition_exhaustive(many, 4), std::runtime_error);

  AuxGraph wide;
  wide.upper_count = 65;
  std::vector<AuxGraph> fam = {wide};
  CHECK_THROWS_AS(haxell_condition_exhaustive(fam, 1), std::runtime_error);
}

TEST_CASE("sampled mode refutes but never certifies") {
  AuxGraph a;
  a.upper_count = 6;
  for (int i = 0; i < 3; ++i) {
    a.edges.emplace_back(2 * i, 2 * i + 1);
    a.witnesses.push_back({0, 1, 2});
  }
  std::vector<AuxGraph> bad = {a, a};
  HaxellCheck found = haxell_condition_sampled(bad, 2, 200, 77);
  REQUIRE(found.verdict == HaxellCheck::Verdict::violated);
  CHECK(found.tau == naive::cover_size(union_of(bad, found.violating)));
  CHECK(found.tau < 3 * static_cast<int>(found.violating.size()));

  AuxGraph wide;
  wide.upper_count = 8;
  for (int i = 0; i < 4; ++i) {
    wide.edges.emplace_back(2 * i, 2 * i + 1);
    wide.witnesses.push_back({0, 1, 2});
  }
  std::vector<AuxGraph> good = {wide};
  HaxellCheck clean = haxell_condition_sampled(good, 1, 200, 78);
  CHECK(clean.verdict == HaxellCheck::Verdict::no_violation_found);

  std::vector<AuxGraph> none;
  CHECK(haxell_condition_sampled(none, 2, 10, 79).verdict ==
        HaxellCheck::Verdict::no_violation_found);
}

TEST_CASE("edge representatives on fixed families") {
  AuxGraph one;
  one.upper_count = 2;
  one.edges.emplace_back(0, 1);
  one.witnesses.push_back({0, 1, 2});
  std::vector<AuxGraph> single = {one};
  auto sol = haxell_sdr(single);
  REQUIRE(sol.has_value());
  CHECK(sol->edge_index == std::vector<int>{0});
  CHECK(sol->edges == std::vector<std::pair<int, int>>{{0, 1}});

  AuxGraph two;
  two.upper_count = 4;
  two.edges.emplace_back(0, 1);
  two.edges.emplace_back(2, 3);
  two.witnesses.push_back({0, 1, 2});
  two.witnesses.push_back({0, 1, 2});
  std::vector<AuxGraph> pair = {two, two};
  auto both = haxell_sdr(pair);
  REQUIRE(both.has_value());
  CHECK(both->edges[0] != both->edges[1]);

  std::vector<AuxGraph> triple = {one, one, one};
  CHECK(!haxell_sdr(triple).has_value());

  std::vector<AuxGraph> empty_family;
  CHECK(haxell_sdr(empty_family).has_value());
}

TEST_CASE("edge representatives match exhaustive enumeration") {
  Rng rng(904);
  int sat = 0, unsat = 0;
  for (int trial = 0; trial < 500; ++trial) {
    int m = 1 + rng.index(5);
    int u = 2 + rng.index(11);
    double density = 0.1 + 0.2 * rng.index(3);
    std::vector<AuxGraph> fam;
    for (int i = 0; i < m; ++i) fam.push_back(random_aux(rng, u, density));
    auto sol = haxell_sdr(fam);
    CHECK(sol.has_value() == naive::sdr_exists(fam));
    if (!sol) {
      ++unsat;
      continue;
    }
    ++sat;
    VertexSet used(u);
    for (int i = 0; i < m; ++i) {
      int e = sol->edge_index[i];
      REQUIRE(e >= 0);
      REQUIRE(e < static_cast<int>(fam[i].edges.size()));
      auto [a, b] = fam[i].edges[e];
      CHECK(sol->edges[i] == std::pair{a, b});
      CHECK(!used.contains(a));
      CHECK(!used.contains(b));
      used.add(a);
      used.add(b);
    }
  }
  CHECK(sat > 50);
  CHECK(unsat > 50);
}

TEST_CASE("a fully verified cover condition forces representatives") {
  Rng rng(905);
  int verified = 0;
  for (int trial = 0; trial < 200; ++trial) {
    int m = 1 + rng.index(3);
    std::vector<AuxGraph> fam;
    for (int i = 0; i < m; ++i) fam.push_back(random_aux(rng, 12, 0.7));
    HaxellCheck check = haxell_condition_exhaustive(fam, m);
    if (check.verdict != HaxellCheck::Verdict::holds) continue;
    ++verified;
    CHECK(haxell_sdr(fam).has_value());
  }
  CHECK(verified > 20);
}

TEST_CASE("selection keeps everything when all links are complete") {
  Graph g = complete(148);
  std::vector<Chain> candidates, uppers;
  for (int v = 0; v < 111; ++v) candidates.push_back(Chain::single(v));
  for (int v = 111; v < 148; ++v) uppers.push_back(Chain::single(v));
  Selection sel = select_absorbable(g, candidates, uppers);
  REQUIRE(sel.ok);
  CHECK(sel.discarded.empty());
  std::vector<int> expect(74);
  std::iota(expect.begin(), expect.end(), 0);
  CHECK(sel.chosen == expect);
  REQUIRE(sel.aux.size() == 111);
  CHECK(sel.aux[0].owner == 0);
  CHECK(sel.aux[0].edges.size() == 37 * 36 / 2);
  CHECK(vertex_cover_size(sel.aux[0].index_graph()) == 36);
}

TEST_CASE("selection collapses on a triangle-free host") {
  Graph g = complete_multipartite({24, 24});
  std::vector<Chain> candidates, uppers;
  for (int v = 0; v < 36; ++v) candidates.push_back(Chain::single(v));
  for (int v = 36; v < 48; ++v) uppers.push_back(Chain::single(v));
  Selection sel = select_absorbable(g, candidates, uppers);
  CHECK(!sel.ok);
  CHECK(sel.chosen.empty());
  CHECK(sel.discarded.size() == 36);
}

TEST_CASE("selection validates its inputs") {
  Graph g = complete(20);
  std::vector<Chain> candidates = {Chain::single(0), Chain::single(1),
                                   Chain::single(2), Chain::single(3),
                                   Chain::single(4)};
  std::vector<Chain> uppers = {Chain::single(10), Chain::single(11)};
  CHECK_THROWS_AS(select_absorbable(g, candidates, uppers),
                  std::invalid_argument);

  std::vector<Chain> clash = {Chain::single(0), Chain::single(1),
                              Chain::single(2), Chain::single(10),
                              Chain::single(4), Chain::single(5)};
  CHECK_THROWS_AS(select_absorbable(g, clash, uppers), std::invalid_argument);
}

TEST_CASE("small selections skip deletion and pass the vacuous recheck") {
  Graph g = gnp(200, 0.5, 31);
  VertexSet avail = g.all_vertices();
  std::vector<Chain> uppers = take_chains(g, avail, 4, 2);
  std::vector<Chain> candidates = take_chains(g, avail, 12, 1);
  Selection sel = select_absorbable(g, candidates, uppers);
  REQUIRE(sel.ok);
  CHECK(sel.discarded.empty());
  std::vector<int> expect(8);
  std::iota(expect.begin(), expect.end(), 0);
  CHECK(sel.chosen == expect);
  REQUIRE(sel.aux.size() == 12);
  for (int i = 0; i < 12; ++i) CHECK(sel.aux[i].owner == i);
  // The family-size cap is 4/12 = 0, so the post-hoc recheck is vacuous.
  std::vector<AuxGraph> chosen_aux;
  for (int i : sel.chosen) chosen_aux.push_back(sel.aux[i]);
  CHECK(haxell_condition_exhaustive(chosen_aux, 0).verdict ==
        HaxellCheck::Verdict::holds);
}

TEST_CASE("selection survivors pass a post-hoc condition recheck") {
  Graph g = gnp(300, 0.5, 33);
  VertexSet avail = g.all_vertices();
  std::vector<Chain> uppers = take_chains(g, avail, 12, 2);
  std::vector<Chain> candidates = take_chains(g, avail, 36, 1);
  Selection sel = select_absorbable(g, candidates, uppers);
  REQUIRE(sel.ok);
  CHECK(sel.chosen.size() == 24);
  std::vector<AuxGraph> chosen_aux;
  for (int i : sel.chosen) chosen_aux.push_back(sel.aux[i]);
  CHECK(haxell_condition_exhaustive(chosen_aux, 1).verdict ==
        HaxellCheck::Verdict::holds);
  // Discards and survivors partition the candidate range.
  CHECK(sel.chosen.size() + sel.discarded.size() <= 36);
  for (int i : sel.discarded)
    CHECK(std::find(sel.chosen.begin(), sel.chosen.end(), i) ==
          sel.chosen.end());
}

TEST_CASE("resolving an empty leftover set is a no-op") {
  Graph g = complete(9);
  ResolveResult res = resolve_level(g, {}, {}, {}, {});
  CHECK(res.ok);
  CHECK(res.piece.triangles.empty());
  CHECK(res.used_upper.empty());
  CHECK(res.self_tiled.empty());
}

TEST_CASE("a lone triple resolves through its own triangle") {
  Graph g = complete(9);
  std::vector<Chain> lowers = {Chain::single(0), Chain::single(1),
                               Chain::single(2)};
  std::vector<Chain> uppers;
  std::vector<AuxGraph> aux;
  for (const Chain& c : lowers) aux.push_back(build_aux_graph(g, c, uppers));
  std::vector<int> leftover = {0, 1, 2};
  ResolveResult res = resolve_level(g, leftover, lowers, uppers, aux);
  REQUIRE(res.ok);
  REQUIRE(res.piece.triangles.size() == 1);
  CHECK(res.piece.triangles[0] == std::array{0, 1, 2});
  CHECK(res.self_tiled == std::vector<int>{0, 1, 2});
  CHECK(res.used_upper.empty());
  CHECK(verify_triangle_factor(g, res.piece, VertexSet::of(9, {0, 1, 2})));
}

TEST_CASE("resolution fails honestly without links") {
  Graph g = complete_multipartite({3, 3});
  std::vector<Chain> lowers = {Chain::single(0), Chain::single(1)};
  std::vector<Chain> uppers = {Chain::single(3), Chain::single(4)};
  std::vector<AuxGraph> aux;
  for (const Chain& c : lowers) aux.push_back(build_aux_graph(g, c, uppers));
  std::vector<int> leftover = {0, 1};
  ResolveResult res = resolve_level(g, leftover, lowers, uppers, aux);
  CHECK(!res.ok);
}

TEST_CASE("resolution rejects misaligned aux data") {
  Graph g = complete(9);
  std::vector<Chain> lowers = {Chain::single(0)};
  std::vector<int> leftover = {0};
  CHECK_THROWS_AS(resolve_level(g, leftover, lowers, {}, {}),
                  std::invalid_argument);
}

TEST_CASE("dense leftovers resolve into a verified piece") {
  Graph g = gnp(60, 0.55, 3);
  int n = g.vertex_count();
  VertexSet avail = g.all_vertices();
  std::vector<Chain> lowers = take_chains(g, avail, 6, 1);
  std::vector<Chain> uppers = take_singles(avail, 12);
  std::vector<AuxGraph> aux;
  for (const Chain& c : lowers) aux.push_back(build_aux_graph(g, c, uppers));
  std::vector<int> leftover = {0, 1, 2, 3, 4, 5};
  ResolveResult res = resolve_level(g, leftover, lowers, uppers, aux);
  REQUIRE(res.ok);

  CHECK(res.used_upper.size() ==
        2 * (leftover.size() - res.self_tiled.size()));
  CHECK(std::is_sorted(res.used_upper.begin(), res.used_upper.end()));
  CHECK(std::adjacent_find(res.used_upper.begin(), res.used_upper.end()) ==
        res.used_upper.end());
  CHECK(std::is_sorted(res.self_tiled.begin(), res.self_tiled.end()));

  VertexSet target(n);
  for (int i : leftover) target |= lowers[i].vertex_set(n);
  for (int j : res.used_upper) target |= uppers[j].vertex_set(n);
  CHECK(verify_triangle_factor(g, res.piece, target));

  // The greedy stage is maximal: remaining chains admit no joint triangle.
  std::vector<int> remaining;
  for (int i : leftover)
    if (std::find(res.self_tiled.begin(), res.self_tiled.end(), i) ==
        res.self_tiled.end())
      remaining.push_back(i);
  for (std::size_t a = 0; a < remaining.size(); ++a)
    for (std::size_t b = a + 1; b < remaining.size(); ++b)
      for (std::size_t c = b + 1; c < remaining.size(); ++c)
        CHECK(!exists_traversing_triangle(
                   g, lowers[remaining[a]].removable_set(n),
                   lowers[remaining[b]].removable_set(n),
                   lowers[remaining[c]].removable_set(n))
                   .has_value());
}
