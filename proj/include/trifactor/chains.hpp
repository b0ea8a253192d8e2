#ifndef TRIFACTOR_CHAINS_HPP
#define TRIFACTOR_CHAINS_HPP

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trifactor/factor.hpp"
#include "trifactor/graph.hpp"

namespace trifactor {

/// One diamond block: four host vertices carrying the 5-edge pattern
///   left-a, left-b, a-b, a-right, b-right.
/// left and right are the block's degree-2 pattern vertices; consecutive
/// blocks of a chain share them.
struct ChainBlock {
  int left = -1;
  int a = -1;
  int b = -1;
  int right = -1;
};

/// A level-l chain: l blocks glued in a row at their shared degree-2
/// vertices, 3l+1 host vertices total, l+1 of them removable (the glue
/// points plus the two ends). A 0-chain is a single vertex. Removing exactly
/// one removable vertex leaves the chain's own edge set with a perfect
/// triangle tiling; removing a non-removable vertex never does.
struct Chain {
  int level = 0;
  std::vector<ChainBlock> blocks;  // size = level
  std::vector<int> removable;      // size = level + 1, in glue order
  std::vector<int> vertices;       // all 3*level+1 vertices, ascending

  static Chain single(int v);

  int last_removable() const { return removable.back(); }
  VertexSet vertex_set(int universe) const;
  VertexSet removable_set(int universe) const;

  /// The chain's own 5-edges-per-block graph, relabeled to 0..3l, plus the
  /// map from new index back to host vertex.
  std::pair<Graph, std::vector<int>> chain_graph() const;

  std::string to_json() const;
  static Chain from_json(const std::string& text);
};

/// True iff the four distinct vertices induce exactly five edges; also
/// returns the unique non-adjacent pair (the two degree-2 vertices).
std::pair<bool, std::pair<int, int>> is_k4_minus(const Graph& g,
                                                 const std::array<int, 4>& vs);

/// Smallest (a, b, w) in lexicographic order with a < b, all inside `pool`,
/// carrying the block pattern around v: edges v-a, v-b, a-b, a-w, b-w. The
/// pattern is subgraph containment; v-w may or may not be a host edge.
/// v must not lie in `pool`.
struct BlockExtension {
  int a = -1, b = -1, w = -1;
};
std::optional<BlockExtension> find_k4_minus_extension(const Graph& g, int v,
                                                      const VertexSet& pool);

/// Search state: the partial chain (absent before the first start and after
/// a full collapse), dead removable vertices D, their discarded block
/// partners D', and the unexplored pool U.
struct DfsState {
  std::optional<Chain> chain;
  VertexSet dead;          // D
  VertexSet dead_support;  // D'
  VertexSet unexplored;    // U
};

struct ChainBuildResult {
  std::optional<Chain> chain;  // set on success
  DfsState state;              // final state (success or exhaustion)
  long long steps = 0;
};

/// Depth-first chain growth inside g[pool] to the requested level.
/// Repeats: start a fresh chain at the minimum unexplored vertex; extend the
/// last removable vertex by the lexicographically first block whose other
/// three vertices are unexplored; or, when no block exists, backtrack (last
/// removable joins D, its two block partners join D'). Stops at the target
/// level or when the pool runs out. |D'| <= 2|D| throughout; `observer`, when
/// set, runs after every applied rule (1 start, 2 extend, 3 backtrack).
ChainBuildResult build_chain_dfs(
    const Graph& g, const VertexSet& pool, int target_level,
    const std::function<void(const DfsState&, int)>& observer = nullptr);

/// Full structural check of a chain against its host graph; for levels up to
/// `oracle_cap` also confirms by exact search that removing each removable
/// vertex leaves a tiling of the chain graph and removing any other vertex
/// does not.
bool verify_chain(const Graph& g, const Chain& chain, int oracle_cap = 6);

/// The positional tiling left after deleting removable vertex r: blocks up to
/// r's position lean on their left glue vertex, later blocks on their right.
/// r must be removable (invalid_argument otherwise).
TriangleFactor chain_factor_after_removal(const Chain& chain, int r);

}  // namespace trifactor

#endif
