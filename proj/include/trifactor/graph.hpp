#ifndef TRIFACTOR_GRAPH_HPP
#define TRIFACTOR_GRAPH_HPP

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace trifactor {

/// Subset of the vertex index range [0, universe), stored as 64-bit words.
/// Set algebra requires matching universes.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);

  static VertexSet full(int universe);
  static VertexSet of(int universe, std::initializer_list<int> members);
  static VertexSet of(int universe, std::span<const int> members);

  int universe() const { return universe_; }
  int size() const;
  bool empty() const { return size() == 0; }
  bool contains(int v) const;

  void add(int v);
  void remove(int v);
  void clear();

  /// Smallest member; -1 when empty.
  int min() const;

  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator-=(const VertexSet& o);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  bool operator==(const VertexSet&) const = default;

  /// Members in ascending order.
  std::vector<int> elements() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        int b = __builtin_ctzll(bits);
        f(static_cast<int>(w * 64) + b);
        bits &= bits - 1;
      }
    }
  }

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> mutable_words() { return words_; }

 private:
  int universe_ = 0;
  std::vector<std::uint64_t> words_;

  void check_same_universe(const VertexSet& o) const;
};

/// Immutable simple undirected graph on vertices 0..n-1. Adjacency is stored
/// as one bit row per vertex, so neighborhood intersections and pair counts
/// are word operations.
class Graph {
 public:
  Graph() = default;

  /// Builds from an edge list. Rejects out-of-range endpoints, self-loops and
  /// duplicate edges (regardless of orientation).
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
  static Graph from_edges(int n,
                          std::initializer_list<std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  long long edge_count() const { return static_cast<long long>(edges_.size()); }

  bool adjacent(int u, int v) const;
  int degree(int v) const;
  int min_degree() const;

  /// Edges as (u, v) with u < v, sorted lexicographically.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  VertexSet all_vertices() const { return VertexSet::full(n_); }
  VertexSet neighbors(int v) const;

  /// N(v) restricted to `within`.
  VertexSet neighbors_in(int v, const VertexSet& within) const;
  int degree_in(int v, const VertexSet& within) const;

  /// Number of (x, y) pairs with x in X, y in Y, xy an edge. Edges with both
  /// endpoints in the intersection contribute twice.
  long long edge_count_between(const VertexSet& X, const VertexSet& Y) const;

  /// Subgraph induced by `within`, relabeled to 0..|within|-1, plus the map
  /// from new index to original vertex (ascending).
  std::pair<Graph, std::vector<int>> induced_subgraph(
      const VertexSet& within) const;

  std::span<const std::uint64_t> row(int v) const;

  /// Empty graph on n vertices.
  static Graph empty(int n);

 private:
  int n_ = 0;
  int row_words_ = 0;
  std::vector<std::uint64_t> bits_;  // n_ rows of row_words_ each
  std::vector<int> degrees_;
  std::vector<std::pair<int, int>> edges_;

  void check_vertex(int v) const;
};

/// Plain-text format: first line "n m", then m lines "u v" with 0 <= u < v < n.
/// Self-loops, duplicates, wrong orientation or malformed counts are errors.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
std::string edge_list_string(const Graph& g);

}  // namespace trifactor

#endif
