#ifndef TRIFACTOR_ABSORBER_HPP
#define TRIFACTOR_ABSORBER_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "trifactor/chains.hpp"
#include "trifactor/factor.hpp"
#include "trifactor/graph.hpp"

namespace trifactor {

/// Small undirected graph on indices 0..n-1 (n <= 64), adjacency as bitmasks.
/// This is the shape vertex-cover and union arguments take.
struct IndexGraph {
  int n = 0;
  std::vector<std::uint64_t> adj;

  explicit IndexGraph(int n_ = 0) : n(n_), adj(static_cast<std::size_t>(n_), 0) {}
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  long long edge_total() const;
};

/// Exact minimum vertex cover size; branch and bound with degree-0/1
/// reductions and a matching lower bound. n <= 64 (runtime_error above).
int vertex_cover_size(const IndexGraph& g);

/// Same, also returning one optimal cover as a bitmask.
std::pair<int, std::uint64_t> vertex_cover_with_witness(const IndexGraph& g);

/// Link structure of one lower chain against a family of upper chains:
/// vertex set = upper indices 0..upper_count-1; {j, k} is an edge when some
/// host triangle meets the removable sets of the lower chain and of uppers j
/// and k. Each edge keeps one witness triangle {r_lower, s_j, u_k}.
struct AuxGraph {
  int owner = -1;
  int upper_count = 0;
  std::vector<std::pair<int, int>> edges;        // j < k, lexicographic
  std::vector<std::array<int, 3>> witnesses;     // aligned with edges

  IndexGraph index_graph() const;
};

/// Builds the aux graph of `lower` against `uppers` (all chains pairwise
/// vertex-disjoint, or invalid_argument).
AuxGraph build_aux_graph(const Graph& g, const Chain& lower,
                         std::span<const Chain> uppers);

/// Cover-size test used for choosing absorbable chains: every nonempty index
/// family J up to j_cap must have tau(union of its graphs) >= 3|J|.
struct HaxellCheck {
  enum class Verdict { holds, violated, no_violation_found };
  Verdict verdict = Verdict::holds;
  std::vector<int> violating;  // J for a found violation
  int tau = 0;                 // cover size of that union
  std::vector<int> cover;      // one minimum cover of that union
};

/// Exhaustive check over all nonempty J with |J| <= j_cap. Throws
/// runtime_error when the enumeration or cover caps would be exceeded
/// (more than 22 graphs with j_cap > 3, or any union on > 64 vertices).
HaxellCheck haxell_condition_exhaustive(std::span<const AuxGraph> graphs,
                                        int j_cap);

/// Randomized check: `trials` random nonempty J with |J| <= j_cap. Finding a
/// violation is a certificate; not finding one is only "no violation found".
HaxellCheck haxell_condition_sampled(std::span<const AuxGraph> graphs,
                                     int j_cap, long long trials,
                                     std::uint64_t seed);

/// One representative edge per graph, pairwise vertex-disjoint; exhaustive
/// backtracking (graphs in ascending edge-count order), so `nullopt` is a
/// proof no such system exists.
struct SdrSolution {
  std::vector<int> edge_index;                 // per graph, into its edge list
  std::vector<std::pair<int, int>> edges;
};
std::optional<SdrSolution> haxell_sdr(std::span<const AuxGraph> graphs);

/// Deletion-based choice of 2t absorbable lower chains out of 3t candidates,
/// given the t upper chains: repeatedly find a violating family J among the
/// still-active candidates (|J| <= floor(t/12); vacuous when t < 12) and
/// discard it; fail when fewer than 2t survive.
struct Selection {
  bool ok = false;
  std::vector<int> chosen;      // 2t surviving candidate indices, ascending
  std::vector<int> discarded;   // B
  std::vector<AuxGraph> aux;    // per candidate (all 3t), owner = index
};
Selection select_absorbable(const Graph& g, std::span<const Chain> candidates,
                            std::span<const Chain> uppers);

/// One cascade round. Covers every leftover lower chain (indices `leftover`),
/// consuming some uppers: first greedily tiles triples of leftover chains
/// joined by a traversing triangle, then solves an edge SDR over the aux
/// graphs of the rest, spending two uppers per remaining chain. `aux` is
/// aligned with `lowers`. On success the piece is a triangle tiling of
/// exactly (union of leftover lower chains) + (union of used upper chains).
struct ResolveResult {
  bool ok = false;
  TriangleFactor piece;
  std::vector<int> used_upper;  // ascending
  std::vector<int> self_tiled;  // leftover indices covered by the greedy step
};
ResolveResult resolve_level(const Graph& g, std::span<const int> leftover,
                            std::span<const Chain> lowers,
                            std::span<const Chain> uppers,
                            std::span<const AuxGraph> aux);

}  // namespace trifactor

#endif
