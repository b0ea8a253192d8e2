#include "trifactor/generators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "trifactor/rng.hpp"

namespace trifactor {

Graph gnp(int n, double p, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("gnp: negative n");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("gnp: p outside [0, 1]");
  Rng rng(derive_seed(seed, "gnp"));
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.unit() < p) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

namespace {

// One pairing-model attempt; empty result when it produced a loop or a
// repeated edge.
std::vector<std::pair<int, int>> pairing_attempt(int n, int d, Rng& rng) {
  std::vector<int> stubs;
  stubs.reserve(static_cast<std::size_t>(n) * d);
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < d; ++i) stubs.push_back(v);
  rng.shuffle(stubs);
  std::set<std::pair<int, int>> seen;
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < stubs.size(); i += 2) {
    int u = stubs[i], v = stubs[i + 1];
    if (u == v) return {};
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) return {};
    edges.emplace_back(u, v);
  }
  return edges;
}

// d-regular circulant: i ~ i +- 1..d/2, plus the antipode when d is odd
// (n is even in that case because n*d is even).
std::vector<std::pair<int, int>> circulant_regular(int n, int d) {
  std::set<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) {
    for (int k = 1; k <= d / 2; ++k) {
      int u = (v + k) % n;
      edges.insert({std::min(v, u), std::max(v, u)});
    }
    if (d % 2 == 1) {
      int u = (v + n / 2) % n;
      edges.insert({std::min(v, u), std::max(v, u)});
    }
  }
  return {edges.begin(), edges.end()};
}

}  // namespace

Graph random_regular(int n, int d, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_regular: n < 1");
  if (d < 0 || d >= n)
    throw std::invalid_argument("random_regular: need 0 <= d < n");
  if ((static_cast<long long>(n) * d) % 2 != 0)
    throw std::invalid_argument("random_regular: n*d must be even");
  if (d == 0) return Graph::empty(n);

  std::vector<std::pair<int, int>> edges;
  for (int attempt = 0; attempt < 1000 && edges.empty(); ++attempt) {
    Rng rng(derive_seed(seed, "pairing", static_cast<std::uint64_t>(attempt)));
    edges = pairing_attempt(n, d, rng);
  }
  if (edges.empty()) edges = circulant_regular(n, d);

  // Degree-preserving randomization: 10*n*d double-edge swaps.
  std::set<std::pair<int, int>> edge_set(edges.begin(), edges.end());
  Rng rng(derive_seed(seed, "swaps"));
  long long swaps = 10LL * n * d;
  auto has = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    return edge_set.count({a, b}) > 0;
  };
  for (long long s = 0; s < swaps; ++s) {
    std::size_t i = rng.below(edges.size());
    std::size_t j = rng.below(edges.size());
    if (i == j) continue;
    auto [a, b] = edges[i];
    auto [c, e] = edges[j];
    if (rng.below(2)) std::swap(c, e);
    // Replace {a,b},{c,e} by {a,c},{b,e} when the result stays simple.
    if (a == c || a == e || b == c || b == e) continue;
    if (has(a, c) || has(b, e)) continue;
    edge_set.erase({std::min(a, b), std::max(a, b)});
    edge_set.erase({std::min(c, e), std::max(c, e)});
    std::pair<int, int> e1{std::min(a, c), std::max(a, c)};
    std::pair<int, int> e2{std::min(b, e), std::max(b, e)};
    edge_set.insert(e1);
    edge_set.insert(e2);
    edges[i] = e1;
    edges[j] = e2;
  }
  return Graph::from_edges(n, edges);
}

Graph paley(int q) {
  if (q < 5) throw std::invalid_argument("paley: q too small");
  for (int f = 2; static_cast<long long>(f) * f <= q; ++f)
    if (q % f == 0) throw std::invalid_argument("paley: q not prime");
  if (q % 4 != 1) throw std::invalid_argument("paley: q != 1 (mod 4)");
  std::vector<bool> residue(q, false);
  for (int k = 1; k <= (q - 1) / 2; ++k)
    residue[static_cast<int>((static_cast<long long>(k) * k) % q)] = true;
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < q; ++a)
    for (int b = a + 1; b < q; ++b)
      if (residue[(b - a) % q]) edges.emplace_back(a, b);
  return Graph::from_edges(q, edges);
}

Graph complete_multipartite(const std::vector<int>& parts) {
  int n = 0;
  for (int s : parts) {
    if (s < 1) throw std::invalid_argument("complete_multipartite: part < 1");
    n += s;
  }
  std::vector<int> part_of(n);
  int at = 0, idx = 0;
  for (int s : parts) {
    for (int i = 0; i < s; ++i) part_of[at++] = idx;
    ++idx;
  }
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: n < 3");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(0, n - 1);
  return Graph::from_edges(n, edges);
}

Graph complete(int n) {
  if (n < 1) throw std::invalid_argument("complete: n < 1");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph build_graph(const GenSpec& spec) {
  if (spec.family == "gnp") return gnp(spec.n, spec.p, spec.seed);
  if (spec.family == "random-regular")
    return random_regular(spec.n, spec.d, spec.seed);
  if (spec.family == "paley") return paley(spec.n);
  if (spec.family == "complete-multipartite")
    return complete_multipartite(spec.parts);
  if (spec.family == "cycle") return cycle(spec.n);
  if (spec.family == "complete") return complete(spec.n);
  throw std::invalid_argument("unknown graph family: " + spec.family);
}

}  // namespace trifactor
