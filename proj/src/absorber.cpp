#include "trifactor/absorber.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "trifactor/rng.hpp"

namespace trifactor {

void IndexGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n || v >= n || u == v)
    throw std::invalid_argument("IndexGraph::add_edge: bad endpoints");
  adj[u] |= 1ULL << v;
  adj[v] |= 1ULL << u;
}

bool IndexGraph::has_edge(int u, int v) const {
  return u >= 0 && v >= 0 && u < n && v < n && ((adj[u] >> v) & 1ULL);
}

long long IndexGraph::edge_total() const {
  long long twice = 0;
  for (std::uint64_t m : adj) twice += std::popcount(m);
  return twice / 2;
}

namespace {

// Branch and bound on the still-active vertex mask. Tracks the best cover
// found; prunes with a greedy matching lower bound.
struct CoverSearch {
  const std::vector<std::uint64_t>& adj;
  int best_size;
  std::uint64_t best_mask;

  int matching_bound(std::uint64_t active) const {
    int bound = 0;
    std::uint64_t used = 0;
    std::uint64_t scan = active;
    while (scan) {
      int v = std::countr_zero(scan);
      scan &= scan - 1;
      if (used & (1ULL << v)) continue;
      std::uint64_t nb = adj[v] & active & ~used;
      if (nb) {
        used |= 1ULL << v;
        used |= 1ULL << std::countr_zero(nb);
        ++bound;
      }
    }
    return bound;
  }

  void run(std::uint64_t active, std::uint64_t cover, int size) {
    // Degree-0/1 reductions.
    for (;;) {
      bool again = false;
      std::uint64_t scan = active;
      while (scan) {
        int v = std::countr_zero(scan);
        scan &= scan - 1;
        std::uint64_t nb = adj[v] & active;
        if (nb == 0) {
          active &= ~(1ULL << v);
        } else if (std::popcount(nb) == 1) {
          int u = std::countr_zero(nb);
          cover |= 1ULL << u;
          ++size;
          active &= ~(1ULL << v);
          active &= ~(1ULL << u);
          again = true;
          break;
        }
      }
      if (!again) break;
    }
    if (size >= best_size) return;
    // Find the max-degree active vertex; no edges left means a full cover.
    int pick = -1, pick_deg = 0;
    std::uint64_t scan = active;
    while (scan) {
      int v = std::countr_zero(scan);
      scan &= scan - 1;
      int deg = std::popcount(adj[v] & active);
      if (deg > pick_deg) {
        pick_deg = deg;
        pick = v;
      }
    }
    if (pick < 0) {
      best_size = size;
      best_mask = cover;
      return;
    }
    if (size + matching_bound(active) >= best_size) return;
    // Branch: pick in the cover, or all of pick's neighbors in the cover.
    run(active & ~(1ULL << pick), cover | (1ULL << pick), size + 1);
    std::uint64_t nb = adj[pick] & active;
    run(active & ~nb & ~(1ULL << pick), cover | nb, size + std::popcount(nb));
  }
};

}  // namespace

std::pair<int, std::uint64_t> vertex_cover_with_witness(const IndexGraph& g) {
  if (g.n > 64)
    throw std::runtime_error("vertex_cover: more than 64 vertices");
  std::uint64_t active = g.n == 64 ? ~0ULL : ((1ULL << g.n) - 1);
  CoverSearch search{g.adj, g.n + 1, 0};
  search.run(active, 0, 0);
  return {search.best_size, search.best_mask};
}

int vertex_cover_size(const IndexGraph& g) {
  return vertex_cover_with_witness(g).first;
}

IndexGraph AuxGraph::index_graph() const {
  IndexGraph g(upper_count);
  for (auto [j, k] : edges) g.add_edge(j, k);
  return g;
}

AuxGraph build_aux_graph(const Graph& g, const Chain& lower,
                         std::span<const Chain> uppers) {
  int n = g.vertex_count();
  VertexSet seen = lower.vertex_set(n);
  for (const Chain& up : uppers) {
    VertexSet s = up.vertex_set(n);
    if (seen.intersects(s))
      throw std::invalid_argument("build_aux_graph: chains are not disjoint");
    seen |= s;
  }
  AuxGraph aux;
  aux.owner = -1;
  aux.upper_count = static_cast<int>(uppers.size());
  VertexSet r_lower = lower.removable_set(n);
  for (int j = 0; j < aux.upper_count; ++j) {
    VertexSet rj = uppers[j].removable_set(n);
    for (int k = j + 1; k < aux.upper_count; ++k) {
      VertexSet rk = uppers[k].removable_set(n);
      // First (r, s, u) in ascending scan with r in R(lower), s in R(up_j),
      // u in R(up_k) and all three host edges present.
      std::optional<std::array<int, 3>> witness;
      r_lower.for_each([&](int r) {
        if (witness) return;
        VertexSet sj = g.neighbors_in(r, rj);
        sj.for_each([&](int s) {
          if (witness) return;
          VertexSet uk = g.neighbors_in(r, rk);
          uk &= g.neighbors(s);
          int u = uk.min();
          if (u >= 0) witness = std::array<int, 3>{r, s, u};
        });
      });
      if (witness) {
        aux.edges.emplace_back(j, k);
        aux.witnesses.push_back(*witness);
      }
    }
  }
  return aux;
}

namespace {

IndexGraph union_graph(std::span<const AuxGraph> graphs,
                       std::span<const int> members) {
  int t = 0;
  for (int i : members)
    t = std::max(t, graphs[i].upper_count);
  if (t > 64)
    throw std::runtime_error("haxell condition: union on more than 64 vertices");
  IndexGraph u(t);
  for (int i : members)
    for (auto [a, b] : graphs[i].edges)
      if (!u.has_edge(a, b)) u.add_edge(a, b);
  return u;
}

// Check one family J; fills `check` and returns true when J violates.
bool violates(std::span<const AuxGraph> graphs, std::span<const int> J,
              HaxellCheck& check) {
  IndexGraph u = union_graph(graphs, J);
  auto [tau, mask] = vertex_cover_with_witness(u);
  if (tau >= 3 * static_cast<int>(J.size())) return false;
  check.verdict = HaxellCheck::Verdict::violated;
  check.violating.assign(J.begin(), J.end());
  check.tau = tau;
  check.cover.clear();
  for (int v = 0; v < u.n; ++v)
    if ((mask >> v) & 1ULL) check.cover.push_back(v);
  return true;
}

bool enumerate_families(std::span<const AuxGraph> graphs,
                        std::span<const int> actives, int j_cap,
                        HaxellCheck& check) {
  int m = static_cast<int>(actives.size());
  std::vector<int> J;
  // Sizes ascending, members lexicographic.
  std::function<bool(int, int)> rec = [&](int start, int want) {
    if (want == 0) return violates(graphs, J, check);
    for (int i = start; i <= m - want; ++i) {
      J.push_back(actives[i]);
      if (rec(i + 1, want - 1)) return true;
      J.pop_back();
    }
    return false;
  };
  for (int size = 1; size <= std::min(j_cap, m); ++size)
    if (rec(0, size)) return true;
  return false;
}

}  // namespace

HaxellCheck haxell_condition_exhaustive(std::span<const AuxGraph> graphs,
                                        int j_cap) {
  int m = static_cast<int>(graphs.size());
  if (m > 22 && j_cap > 3)
    throw std::runtime_error(
        "haxell_condition_exhaustive: family too large to enumerate");
  HaxellCheck check;
  std::vector<int> actives(m);
  std::iota(actives.begin(), actives.end(), 0);
  if (!enumerate_families(graphs, actives, j_cap, check))
    check.verdict = HaxellCheck::Verdict::holds;
  return check;
}

HaxellCheck haxell_condition_sampled(std::span<const AuxGraph> graphs,
                                     int j_cap, long long trials,
                                     std::uint64_t seed) {
  int m = static_cast<int>(graphs.size());
  HaxellCheck check;
  if (m == 0 || j_cap < 1) {
    check.verdict = HaxellCheck::Verdict::no_violation_found;
    return check;
  }
  Rng rng(derive_seed(seed, "haxell-sampled"));
  std::vector<int> pool(m);
  std::iota(pool.begin(), pool.end(), 0);
  for (long long t = 0; t < trials; ++t) {
    int size = 1 + rng.index(std::min(j_cap, m));
    for (int i = 0; i < size; ++i) {
      int j = i + rng.index(m - i);
      std::swap(pool[i], pool[j]);
    }
    std::vector<int> J(pool.begin(), pool.begin() + size);
    std::sort(J.begin(), J.end());
    if (violates(graphs, J, check)) return check;
  }
  check.verdict = HaxellCheck::Verdict::no_violation_found;
  return check;
}

std::optional<SdrSolution> haxell_sdr(std::span<const AuxGraph> graphs) {
  int m = static_cast<int>(graphs.size());
  int t = 0;
  for (const AuxGraph& g : graphs) t = std::max(t, g.upper_count);
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return graphs[a].edges.size() < graphs[b].edges.size();
  });
  std::vector<int> chosen(m, -1);
  VertexSet used(t);
  std::function<bool(int)> place = [&](int at) {
    if (at == m) return true;
    const AuxGraph& g = graphs[order[at]];
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
      auto [a, b] = g.edges[e];
      if (used.contains(a) || used.contains(b)) continue;
      used.add(a);
      used.add(b);
      chosen[order[at]] = e;
      if (place(at + 1)) return true;
      used.remove(a);
      used.remove(b);
      chosen[order[at]] = -1;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  SdrSolution sol;
  sol.edge_index = chosen;
  sol.edges.reserve(m);
  for (int i = 0; i < m; ++i) sol.edges.push_back(graphs[i].edges[chosen[i]]);
  return sol;
}

Selection select_absorbable(const Graph& g, std::span<const Chain> candidates,
                            std::span<const Chain> uppers) {
  int t = static_cast<int>(uppers.size());
  if (static_cast<int>(candidates.size()) != 3 * t)
    throw std::invalid_argument(
        "select_absorbable: need exactly 3 candidates per upper chain");

  Selection sel;
  sel.aux.reserve(candidates.size());
  {
    // Disjointness across the whole family (candidates and uppers).
    VertexSet seen(g.vertex_count());
    auto take = [&](const Chain& c) {
      VertexSet s = c.vertex_set(g.vertex_count());
      if (seen.intersects(s))
        throw std::invalid_argument("select_absorbable: chains overlap");
      seen |= s;
    };
    for (const Chain& c : candidates) take(c);
    for (const Chain& c : uppers) take(c);
  }
  for (int i = 0; i < static_cast<int>(candidates.size()); ++i) {
    AuxGraph aux = build_aux_graph(g, candidates[i], uppers);
    aux.owner = i;
    sel.aux.push_back(std::move(aux));
  }

  int j_cap = t / 12;
  std::vector<int> active(candidates.size());
  std::iota(active.begin(), active.end(), 0);
  if (j_cap >= 1) {
    for (;;) {
      HaxellCheck check;
      if (!enumerate_families(sel.aux, active, j_cap, check)) break;
      for (int i : check.violating) {
        sel.discarded.push_back(i);
        active.erase(std::find(active.begin(), active.end(), i));
      }
    }
  }
  std::sort(sel.discarded.begin(), sel.discarded.end());
  if (static_cast<int>(active.size()) < 2 * t) {
    sel.ok = false;
    return sel;
  }
  sel.chosen.assign(active.begin(), active.begin() + 2 * t);
  sel.ok = true;
  return sel;
}

ResolveResult resolve_level(const Graph& g, std::span<const int> leftover,
                            std::span<const Chain> lowers,
                            std::span<const Chain> uppers,
                            std::span<const AuxGraph> aux) {
  if (aux.size() != lowers.size())
    throw std::invalid_argument("resolve_level: aux not aligned with lowers");
  int n = g.vertex_count();
  ResolveResult out;

  std::vector<int> remaining(leftover.begin(), leftover.end());
  std::sort(remaining.begin(), remaining.end());

  // Greedy self-tiling: repeatedly take the first chain triple joined by a
  // traversing triangle and tile all three via removals.
  std::vector<VertexSet> rsets;
  rsets.reserve(lowers.size());
  for (const Chain& c : lowers) rsets.push_back(c.removable_set(n));
  auto traverse = [&](int i, int j, int k) -> std::optional<std::array<int, 3>> {
    std::optional<std::array<int, 3>> found;
    rsets[i].for_each([&](int x) {
      if (found) return;
      VertexSet ys = g.neighbors_in(x, rsets[j]);
      ys.for_each([&](int y) {
        if (found) return;
        VertexSet zs = g.neighbors_in(x, rsets[k]);
        zs &= g.neighbors(y);
        int z = zs.min();
        if (z >= 0) found = std::array<int, 3>{x, y, z};
      });
    });
    return found;
  };
  bool progress = true;
  while (progress && remaining.size() >= 3) {
    progress = false;
    int m = static_cast<int>(remaining.size());
    for (int a = 0; a < m && !progress; ++a)
      for (int b = a + 1; b < m && !progress; ++b)
        for (int c = b + 1; c < m && !progress; ++c) {
          int i = remaining[a], j = remaining[b], k = remaining[c];
          auto w = traverse(i, j, k);
          if (!w) continue;
          auto [x, y, z] = *w;
          out.piece.add(x, y, z);
          out.piece.append(chain_factor_after_removal(lowers[i], x));
          out.piece.append(chain_factor_after_removal(lowers[j], y));
          out.piece.append(chain_factor_after_removal(lowers[k], z));
          out.self_tiled.insert(out.self_tiled.end(), {i, j, k});
          remaining.erase(remaining.begin() + c);
          remaining.erase(remaining.begin() + b);
          remaining.erase(remaining.begin() + a);
          progress = true;
        }
  }

  // The rest each consume one aux edge = two upper chains; the edges must be
  // pairwise disjoint, which is exactly an SDR over their aux graphs.
  if (!remaining.empty()) {
    std::vector<AuxGraph> duty;
    duty.reserve(remaining.size());
    for (int i : remaining) duty.push_back(aux[i]);
    auto sdr = haxell_sdr(duty);
    if (!sdr) {
      out.ok = false;
      return out;
    }
    for (std::size_t row = 0; row < remaining.size(); ++row) {
      int i = remaining[row];
      int e = sdr->edge_index[row];
      auto [j, k] = aux[i].edges[e];
      auto [r, s, u] = aux[i].witnesses[e];
      out.piece.add(r, s, u);
      out.piece.append(chain_factor_after_removal(lowers[i], r));
      out.piece.append(chain_factor_after_removal(uppers[j], s));
      out.piece.append(chain_factor_after_removal(uppers[k], u));
      out.used_upper.push_back(j);
      out.used_upper.push_back(k);
    }
  }
  std::sort(out.used_upper.begin(), out.used_upper.end());
  std::sort(out.self_tiled.begin(), out.self_tiled.end());
  out.ok = true;
  return out;
}

}  // namespace trifactor
