#include "trifactor/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace trifactor {

namespace {
int word_count(int universe) { return (universe + 63) / 64; }
}  // namespace

VertexSet::VertexSet(int universe) : universe_(universe) {
  if (universe < 0) throw std::invalid_argument("VertexSet: negative universe");
  words_.assign(word_count(universe), 0);
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (int w = 0; w < word_count(universe); ++w) s.words_[w] = ~0ULL;
  int spare = word_count(universe) * 64 - universe;
  if (spare > 0 && !s.words_.empty()) s.words_.back() >>= spare;
  return s;
}

VertexSet VertexSet::of(int universe, std::initializer_list<int> members) {
  VertexSet s(universe);
  for (int v : members) s.add(v);
  return s;
}

VertexSet VertexSet::of(int universe, std::span<const int> members) {
  VertexSet s(universe);
  for (int v : members) s.add(v);
  return s;
}

int VertexSet::size() const {
  int c = 0;
  for (std::uint64_t w : words_) c += std::popcount(w);
  return c;
}

bool VertexSet::contains(int v) const {
  if (v < 0 || v >= universe_) return false;
  return (words_[v >> 6] >> (v & 63)) & 1ULL;
}

void VertexSet::add(int v) {
  if (v < 0 || v >= universe_)
    throw std::invalid_argument("VertexSet::add: index out of range");
  words_[v >> 6] |= 1ULL << (v & 63);
}

void VertexSet::remove(int v) {
  if (v < 0 || v >= universe_)
    throw std::invalid_argument("VertexSet::remove: index out of range");
  words_[v >> 6] &= ~(1ULL << (v & 63));
}

void VertexSet::clear() { std::fill(words_.begin(), words_.end(), 0ULL); }

int VertexSet::min() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w]) return static_cast<int>(w * 64) + __builtin_ctzll(words_[w]);
  return -1;
}

void VertexSet::check_same_universe(const VertexSet& o) const {
  if (universe_ != o.universe_)
    throw std::invalid_argument("VertexSet: universe mismatch");
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] & ~other.words_[w]) return false;
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  check_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] & other.words_[w]) return true;
  return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  check_same_universe(o);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  check_same_universe(o);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
  check_same_universe(o);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~o.words_[w];
  return *this;
}

std::vector<int> VertexSet::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each([&](int v) { out.push_back(v); });
  return out;
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
  Graph g;
  g.n_ = n;
  g.row_words_ = word_count(n);
  g.bits_.assign(static_cast<std::size_t>(n) * g.row_words_, 0ULL);
  g.degrees_.assign(n, 0);
  g.edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("Graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("Graph: self-loop");
    if (u > v) std::swap(u, v);
    std::uint64_t& word = g.bits_[static_cast<std::size_t>(u) * g.row_words_ + (v >> 6)];
    if ((word >> (v & 63)) & 1ULL)
      throw std::invalid_argument("Graph: duplicate edge");
    word |= 1ULL << (v & 63);
    g.bits_[static_cast<std::size_t>(v) * g.row_words_ + (u >> 6)] |= 1ULL << (u & 63);
    ++g.degrees_[u];
    ++g.degrees_[v];
    g.edges_.emplace_back(u, v);
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  return g;
}

Graph Graph::from_edges(int n,
                        std::initializer_list<std::pair<int, int>> edges) {
  std::vector<std::pair<int, int>> v(edges);
  return from_edges(n, std::span<const std::pair<int, int>>(v));
}

Graph Graph::empty(int n) {
  return from_edges(n, std::span<const std::pair<int, int>>{});
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::invalid_argument("Graph: vertex out of range");
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return (bits_[static_cast<std::size_t>(u) * row_words_ + (v >> 6)] >> (v & 63)) & 1ULL;
}

int Graph::degree(int v) const {
  check_vertex(v);
  return degrees_[v];
}

int Graph::min_degree() const {
  if (n_ == 0) throw std::invalid_argument("min_degree: empty graph");
  return *std::min_element(degrees_.begin(), degrees_.end());
}

std::span<const std::uint64_t> Graph::row(int v) const {
  check_vertex(v);
  return {bits_.data() + static_cast<std::size_t>(v) * row_words_,
          static_cast<std::size_t>(row_words_)};
}

VertexSet Graph::neighbors(int v) const {
  check_vertex(v);
  VertexSet s(n_);
  auto r = row(v);
  std::copy(r.begin(), r.end(), s.mutable_words().begin());
  return s;
}

VertexSet Graph::neighbors_in(int v, const VertexSet& within) const {
  check_vertex(v);
  if (within.universe() != n_)
    throw std::invalid_argument("neighbors_in: universe mismatch");
  VertexSet s(n_);
  auto r = row(v);
  auto w = within.words();
  auto out = s.mutable_words();
  for (std::size_t i = 0; i < r.size(); ++i) out[i] = r[i] & w[i];
  return s;
}

int Graph::degree_in(int v, const VertexSet& within) const {
  check_vertex(v);
  if (within.universe() != n_)
    throw std::invalid_argument("degree_in: universe mismatch");
  auto r = row(v);
  auto w = within.words();
  int c = 0;
  for (std::size_t i = 0; i < r.size(); ++i) c += std::popcount(r[i] & w[i]);
  return c;
}

long long Graph::edge_count_between(const VertexSet& X,
                                    const VertexSet& Y) const {
  if (X.universe() != n_ || Y.universe() != n_)
    throw std::invalid_argument("edge_count_between: universe mismatch");
  long long total = 0;
  X.for_each([&](int x) { total += degree_in(x, Y); });
  return total;
}

std::pair<Graph, std::vector<int>> Graph::induced_subgraph(
    const VertexSet& within) const {
  if (within.universe() != n_)
    throw std::invalid_argument("induced_subgraph: universe mismatch");
  std::vector<int> map = within.elements();
  std::vector<int> inverse(n_, -1);
  for (std::size_t i = 0; i < map.size(); ++i) inverse[map[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> sub_edges;
  for (auto [u, v] : edges_)
    if (inverse[u] >= 0 && inverse[v] >= 0)
      sub_edges.emplace_back(inverse[u], inverse[v]);
  return {from_edges(static_cast<int>(map.size()), sub_edges), std::move(map)};
}

Graph parse_edge_list(std::istream& in) {
  std::string line;
  auto next_line = [&](std::string& out) {
    while (std::getline(in, out)) {
      if (!out.empty() && out.back() == '\r') out.pop_back();
      if (!out.empty()) return true;
    }
    return false;
  };
  if (!next_line(line)) throw std::invalid_argument("edge list: empty input");
  long long n = 0, m = 0;
  {
    std::istringstream head(line);
    std::string extra;
    if (!(head >> n >> m) || (head >> extra))
      throw std::invalid_argument("edge list: malformed header");
  }
  if (n < 0 || m < 0 || n > std::numeric_limits<int>::max())
    throw std::invalid_argument("edge list: bad sizes in header");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_line(line))
      throw std::invalid_argument("edge list: fewer edges than header claims");
    std::istringstream row(line);
    long long u = 0, v = 0;
    std::string extra;
    if (!(row >> u >> v) || (row >> extra))
      throw std::invalid_argument("edge list: malformed edge line");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge list: endpoint out of range");
    if (u == v) throw std::invalid_argument("edge list: self-loop");
    if (u > v) throw std::invalid_argument("edge list: expected u < v");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (next_line(line))
    throw std::invalid_argument("edge list: trailing content after m edges");
  return Graph::from_edges(static_cast<int>(n), edges);
}

Graph parse_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string edge_list_string(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

}  // namespace trifactor
