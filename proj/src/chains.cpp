#include "trifactor/chains.hpp"

#include <algorithm>
#include <json.hpp>
#include <stdexcept>

#include "trifactor/oracle.hpp"

namespace trifactor {

Chain Chain::single(int v) {
  Chain c;
  c.level = 0;
  c.removable = {v};
  c.vertices = {v};
  return c;
}

VertexSet Chain::vertex_set(int universe) const {
  return VertexSet::of(universe, vertices);
}

VertexSet Chain::removable_set(int universe) const {
  return VertexSet::of(universe, removable);
}

std::pair<Graph, std::vector<int>> Chain::chain_graph() const {
  std::vector<int> map = vertices;  // ascending
  std::vector<int> inverse_domain;
  auto local = [&](int host) {
    auto it = std::lower_bound(map.begin(), map.end(), host);
    return static_cast<int>(it - map.begin());
  };
  std::vector<std::pair<int, int>> edges;
  auto push = [&](int u, int v) {
    int a = local(u), b = local(v);
    if (a > b) std::swap(a, b);
    edges.emplace_back(a, b);
  };
  for (const ChainBlock& blk : blocks) {
    push(blk.left, blk.a);
    push(blk.left, blk.b);
    push(blk.a, blk.b);
    push(blk.a, blk.right);
    push(blk.b, blk.right);
  }
  return {Graph::from_edges(static_cast<int>(map.size()), edges), map};
}

std::string Chain::to_json() const {
  nlohmann::json j;
  j["level"] = level;
  j["vertices"] = vertices;
  j["removable"] = removable;
  nlohmann::json blks = nlohmann::json::array();
  for (const ChainBlock& b : blocks)
    blks.push_back({b.left, b.a, b.b, b.right});
  j["blocks"] = blks;
  return j.dump();
}

Chain Chain::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  Chain c;
  c.level = j.at("level").get<int>();
  c.vertices = j.at("vertices").get<std::vector<int>>();
  c.removable = j.at("removable").get<std::vector<int>>();
  for (const auto& b : j.at("blocks")) {
    if (!b.is_array() || b.size() != 4)
      throw std::invalid_argument("chain json: block is not a 4-tuple");
    c.blocks.push_back({b[0].get<int>(), b[1].get<int>(), b[2].get<int>(),
                        b[3].get<int>()});
  }
  return c;
}

std::pair<bool, std::pair<int, int>> is_k4_minus(
    const Graph& g, const std::array<int, 4>& vs) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (vs[i] == vs[j])
        throw std::invalid_argument("is_k4_minus: repeated vertex");
  int missing_i = -1, missing_j = -1, edge_count = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      if (g.adjacent(vs[i], vs[j])) {
        ++edge_count;
      } else {
        missing_i = vs[i];
        missing_j = vs[j];
      }
    }
  if (edge_count != 5) return {false, {-1, -1}};
  return {true, {missing_i, missing_j}};
}

std::optional<BlockExtension> find_k4_minus_extension(const Graph& g, int v,
                                                      const VertexSet& pool) {
  if (pool.contains(v))
    throw std::invalid_argument("find_k4_minus_extension: v inside pool");
  VertexSet nv = g.neighbors_in(v, pool);
  std::optional<BlockExtension> found;
  nv.for_each([&](int a) {
    if (found) return;
    VertexSet nb = g.neighbors_in(a, nv);  // adjacent to both v and a, in pool
    nb.for_each([&](int b) {
      if (found || b <= a) return;
      // w: adjacent to a and b, in pool, distinct from a, b (v is not in
      // the pool). No constraint on the v-w pair.
      VertexSet wset = g.neighbors_in(a, pool);
      wset &= g.neighbors(b);
      wset.for_each([&](int w) {
        if (found || w == a || w == b) return;
        found = BlockExtension{a, b, w};
      });
    });
  });
  return found;
}

ChainBuildResult build_chain_dfs(
    const Graph& g, const VertexSet& pool, int target_level,
    const std::function<void(const DfsState&, int)>& observer) {
  if (target_level < 0)
    throw std::invalid_argument("build_chain_dfs: negative level");
  if (pool.universe() != g.vertex_count())
    throw std::invalid_argument("build_chain_dfs: universe mismatch");
  ChainBuildResult result;
  DfsState& st = result.state;
  st.chain.reset();
  st.dead = VertexSet(g.vertex_count());
  st.dead_support = VertexSet(g.vertex_count());
  st.unexplored = pool;

  auto arrived = [&]() {
    return st.chain && st.chain->level == target_level;
  };

  while (!st.unexplored.empty() && !arrived()) {
    ++result.steps;
    int rule;
    if (!st.chain) {
      // Rule 1: start a fresh chain at the minimum unexplored vertex.
      int v = st.unexplored.min();
      st.unexplored.remove(v);
      st.chain = Chain::single(v);
      rule = 1;
    } else if (auto ext = find_k4_minus_extension(g, st.chain->last_removable(),
                                                  st.unexplored)) {
      // Rule 2: glue a block onto the last removable vertex.
      Chain& c = *st.chain;
      ChainBlock blk{c.last_removable(), ext->a, ext->b, ext->w};
      c.blocks.push_back(blk);
      c.removable.push_back(ext->w);
      ++c.level;
      c.vertices.push_back(ext->a);
      c.vertices.push_back(ext->b);
      c.vertices.push_back(ext->w);
      std::sort(c.vertices.begin(), c.vertices.end());
      st.unexplored.remove(ext->a);
      st.unexplored.remove(ext->b);
      st.unexplored.remove(ext->w);
      rule = 2;
    } else {
      // Rule 3: retreat. The dead endpoint joins D; its block partners,
      // when the chain has a block, join D'.
      Chain& c = *st.chain;
      int r = c.last_removable();
      st.dead.add(r);
      if (c.level == 0) {
        st.chain.reset();
      } else {
        ChainBlock blk = c.blocks.back();
        st.dead_support.add(blk.a);
        st.dead_support.add(blk.b);
        c.blocks.pop_back();
        c.removable.pop_back();
        --c.level;
        auto drop = [&](int v) {
          c.vertices.erase(
              std::find(c.vertices.begin(), c.vertices.end(), v));
        };
        drop(blk.a);
        drop(blk.b);
        drop(blk.right);
      }
      rule = 3;
    }
    if (st.dead_support.size() > 2 * st.dead.size())
      throw std::logic_error("build_chain_dfs: support invariant broken");
    if (observer) observer(st, rule);
  }
  if (arrived()) result.chain = st.chain;
  return result;
}

bool verify_chain(const Graph& g, const Chain& chain, int oracle_cap) {
  const int l = chain.level;
  if (l < 0) return false;
  if (static_cast<int>(chain.removable.size()) != l + 1) return false;
  if (static_cast<int>(chain.blocks.size()) != l) return false;
  if (static_cast<int>(chain.vertices.size()) != 3 * l + 1) return false;

  // Collect the structural vertex list and check distinctness and range.
  std::vector<int> all;
  all.push_back(chain.removable[0]);
  for (int k = 0; k < l; ++k) {
    const ChainBlock& blk = chain.blocks[k];
    if (blk.left != chain.removable[k]) return false;
    if (blk.right != chain.removable[k + 1]) return false;
    all.push_back(blk.a);
    all.push_back(blk.b);
    all.push_back(blk.right);
  }
  for (int v : all)
    if (v < 0 || v >= g.vertex_count()) return false;
  std::vector<int> sorted = all;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    return false;
  if (sorted != chain.vertices) return false;

  // Each block's five pattern edges must be host edges.
  for (const ChainBlock& blk : chain.blocks) {
    if (!g.adjacent(blk.left, blk.a) || !g.adjacent(blk.left, blk.b) ||
        !g.adjacent(blk.a, blk.b) || !g.adjacent(blk.a, blk.right) ||
        !g.adjacent(blk.b, blk.right))
      return false;
  }

  if (l > oracle_cap) return true;

  // Removability, checked on the chain's own edge set: deleting a removable
  // vertex leaves a tiling, deleting any other vertex leaves none.
  auto [h, map] = chain.chain_graph();
  VertexSet removable_host = chain.removable_set(g.vertex_count());
  for (int local = 0; local < h.vertex_count(); ++local) {
    VertexSet rest = h.all_vertices();
    rest.remove(local);
    bool tiled = exact_triangle_factor(h, rest).has_value();
    bool should = removable_host.contains(map[local]);
    if (tiled != should) return false;
  }
  return true;
}

TriangleFactor chain_factor_after_removal(const Chain& chain, int r) {
  auto it = std::find(chain.removable.begin(), chain.removable.end(), r);
  if (it == chain.removable.end())
    throw std::invalid_argument(
        "chain_factor_after_removal: vertex is not removable");
  int pos = static_cast<int>(it - chain.removable.begin());
  TriangleFactor out;
  for (int k = 0; k < chain.level; ++k) {
    const ChainBlock& blk = chain.blocks[k];
    if (k < pos)
      out.add(blk.left, blk.a, blk.b);
    else
      out.add(blk.a, blk.b, blk.right);
  }
  return out;
}

}  // namespace trifactor
