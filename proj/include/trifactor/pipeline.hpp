#ifndef TRIFACTOR_PIPELINE_HPP
#define TRIFACTOR_PIPELINE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "trifactor/absorber.hpp"
#include "trifactor/chains.hpp"
#include "trifactor/factor.hpp"
#include "trifactor/graph.hpp"

namespace trifactor {

/// Knobs for the constructive solver. Zero or negative values mean "derive
/// from the graph" where noted.
struct PipelineConfig {
  std::uint64_t seed = 1;
  int level_scale = 0;     // top-level chain count; 0 = largest that fits, >= 2
  int q_override = -1;     // levels above the singletons; -1 = derived
  int max_restarts = 200;  // independent attempts before giving up
  double p_override = 0;   // density for degree floors; 0 = 2m / (n(n-1))
  double side_degree_fraction = 1.0 / 6.0;  // split keeps deg >= n*p*this per side
};

/// Random halving of the vertex set: sides within one of each other, first
/// side the larger on odd n.
struct Split {
  VertexSet side1;
  VertexSet side2;
};

/// Draws one split and accepts it only when every vertex keeps at least
/// n*p*fraction neighbors on each side.
std::optional<Split> equipartition(const Graph& g, double p, double fraction,
                                   std::uint64_t seed);

/// One absorber level: `count(chains)` chains of the given length, and below
/// the top level the link graphs against the level above, aligned with
/// `chains`.
struct BuiltLevel {
  int length = 0;
  std::vector<Chain> chains;
  std::vector<AuxGraph> aux;
};

/// Lays out the level structure inside `pool`: the top level q (length 2^q,
/// or single vertices when q = 0) grows chain by chain; each level below
/// builds three candidates per chain above and keeps the two thirds that
/// survive the deletion filter, so counts double going down and level i has
/// length 2^i (level 0: single vertices). Vertices of dropped candidates
/// return to the pool. nullopt when any level cannot complete.
std::optional<std::vector<BuiltLevel>> build_levels(const Graph& g,
                                                    const VertexSet& pool,
                                                    int q, int top_count);

/// Greedy maximal triangle pack inside `pool`: scan vertices ascending, take
/// the lexicographically first triangle still available, remove it. The
/// returned remainder spans no triangle.
std::pair<TriangleFactor, VertexSet> greedy_triangle_pack(const Graph& g,
                                                          const VertexSet& pool);

/// Covers each vertex of `low` in ascending order (skipping any already spent
/// as an earlier partner) by a triangle whose other two vertices lie in
/// side1 and are still free; `free` shrinks by every vertex used. nullopt
/// when some vertex has no free partner edge left.
std::optional<TriangleFactor> cover_low_degree(const Graph& g,
                                               const VertexSet& low,
                                               const VertexSet& side1,
                                               VertexSet& free);

/// Covers every vertex of `leftover` by a triangle through two distinct
/// singleton chains, no singleton spent twice (disjoint-representative search
/// over the per-vertex link graphs). Returns the covering piece and the
/// surviving singleton indices, or nullopt when no disjoint assignment
/// exists.
std::optional<std::pair<TriangleFactor, std::vector<int>>> absorb_leftover(
    const Graph& g, const VertexSet& leftover, std::span<const Chain> singles);

struct StageTiming {
  std::string stage;
  double ms = 0;
};

struct LevelStat {
  int count = 0;
  int length = 0;
};

/// Outcome of a solver run. Counters describe the last attempt; timings
/// accumulate per stage across all attempts.
struct RunReport {
  bool ok = false;
  int attempts = 0;
  std::vector<std::string> attempt_failures;  // stage name per failed attempt
  std::string failure;                        // empty when ok

  int n = 0;
  double p = 0;
  std::uint64_t seed = 0;
  int q = -1;
  std::vector<LevelStat> levels;
  int side1 = 0;
  int side2 = 0;
  int low_degree = 0;                   // vertices below the singleton-degree floor
  int packed = 0;                       // triangles taken by the greedy pack
  int leftover = 0;                     // pack remainder absorbed into singletons
  std::vector<int> cascade_leftover;    // unspent chains entering each round
  std::vector<int> cascade_self_tiled;  // leftover chains closed in triples

  TriangleFactor factor;
  std::vector<StageTiming> timings;

  std::string to_json(int indent = 2) const;
};

/// Runs the full constructive solver: split, levels, low-degree cover, greedy
/// pack, absorption of the remainder into the singletons, one cascade round
/// per level, and the top-level finish. Restarts with a derived seed on any
/// stage failure, up to max_restarts attempts. A returned ok = true factor is
/// always verified internally before it is reported.
RunReport run_pipeline(const Graph& g, const PipelineConfig& config = {});

}  // namespace trifactor

#endif
