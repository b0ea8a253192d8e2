#include "trifactor/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "trifactor/oracle.hpp"
#include "trifactor/rng.hpp"

namespace trifactor {
namespace {

double density(const Graph& g) {
  long long n = g.vertex_count();
  if (n < 2) return 0;
  return 2.0 * static_cast<double>(g.edge_count()) /
         (static_cast<double>(n) * static_cast<double>(n - 1));
}

// Peak vertex footprint inside the second side per unit of top-level scale.
// Level i holds 2^(q-i) chains of 3*len+1 vertices (len = 0 at level 0, 2^i
// above); while level i is under construction the kept levels above it
// coexist with its own 3t/2 candidate overbuild. The hierarchy fits iff
// scale * peak_unit(q) <= |V2|.
long long peak_unit(int q) {
  long long peak = 0;
  long long kept_above = 0;
  for (int i = q; i >= 0; --i) {
    long long len = (i == 0) ? 0 : (1LL << i);
    long long cost = 3 * len + 1;
    long long chains = 1LL << (q - i);
    long long build = (i == q) ? chains * cost : 3 * (chains / 2) * cost;
    peak = std::max(peak, kept_above + build);
    kept_above += chains * cost;
  }
  return peak;
}

int derived_q(int n) {
  double ratio =
      static_cast<double>(n) / (16.0e4 * std::log(static_cast<double>(n)));
  if (ratio <= 1.0) return 1;
  return std::max(1, static_cast<int>(std::ceil(std::log2(ratio))));
}

// Accumulates wall time into the named stage on scope exit.
class StageClock {
 public:
  StageClock(std::vector<StageTiming>& sink, std::string stage)
      : sink_(sink),
        stage_(std::move(stage)),
        start_(std::chrono::steady_clock::now()) {}
  ~StageClock() {
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start_)
                    .count();
    for (StageTiming& t : sink_)
      if (t.stage == stage_) {
        t.ms += ms;
        return;
      }
    sink_.push_back({stage_, ms});
  }

 private:
  std::vector<StageTiming>& sink_;
  std::string stage_;
  std::chrono::steady_clock::time_point start_;
};

// One full attempt. Fills the per-attempt counters of `rep` and, on success,
// its factor. Returns the failing stage name, empty on success.
std::string attempt(const Graph& g, const PipelineConfig& config, double p,
                    std::uint64_t attempt_seed, RunReport& rep) {
  const int n = g.vertex_count();
  rep.side1 = 0;
  rep.side2 = 0;
  rep.q = -1;
  rep.levels.clear();
  rep.low_degree = 0;
  rep.packed = 0;
  rep.leftover = 0;
  rep.cascade_leftover.clear();
  rep.cascade_self_tiled.clear();

  std::optional<Split> split;
  {
    StageClock clock(rep.timings, "split");
    split = equipartition(g, p, config.side_degree_fraction,
                          derive_seed(attempt_seed, "split"));
  }
  if (!split) return "split";
  rep.side1 = split->side1.size();
  rep.side2 = split->side2.size();

  int q = config.q_override;
  if (q < 0) {
    q = derived_q(n);
    while (q > 1 && 2 * peak_unit(q) > rep.side2) --q;
    // Too small to host even two top chains with their candidate overbuild:
    // drop to a bare singleton absorber.
    if (2 * peak_unit(q) > rep.side2) q = 0;
  }
  int top = config.level_scale;
  if (top <= 0) {
    long long fit = rep.side2 / (q == 0 ? 2 : peak_unit(q));
    top = static_cast<int>(std::max<long long>(2, fit));
  }
  rep.q = q;

  std::optional<std::vector<BuiltLevel>> levels;
  {
    StageClock clock(rep.timings, "levels");
    levels = build_levels(g, split->side2, q, top);
  }
  if (!levels) return "levels";
  for (const BuiltLevel& lv : *levels)
    rep.levels.push_back({static_cast<int>(lv.chains.size()), lv.length});

  TriangleFactor factor;
  VertexSet chain_vertices(n);
  for (const BuiltLevel& lv : *levels)
    for (const Chain& c : lv.chains) chain_vertices |= c.vertex_set(n);

  const std::vector<Chain>& singles = (*levels)[0].chains;
  const int t0 = static_cast<int>(singles.size());
  VertexSet u0(n);
  for (const Chain& c : singles) u0.add(c.vertices[0]);

  VertexSet free = g.all_vertices() - chain_vertices;
  {
    StageClock clock(rep.timings, "low-degree-cover");
    VertexSet low(n);
    free.for_each([&](int v) {
      if (g.degree_in(v, u0) < static_cast<double>(t0) * p / 2) low.add(v);
    });
    rep.low_degree = low.size();
    auto covered = cover_low_degree(g, low, split->side1, free);
    if (!covered) return "low-degree-cover";
    factor.append(*covered);
  }

  {
    StageClock clock(rep.timings, "pack");
    auto [packed, rest] = greedy_triangle_pack(g, free);
    rep.packed = static_cast<int>(packed.triangles.size());
    factor.append(packed);
    free = std::move(rest);
  }

  std::vector<int> leftover_idx;
  {
    StageClock clock(rep.timings, "absorb");
    rep.leftover = free.size();
    auto absorbed = absorb_leftover(g, free, singles);
    if (!absorbed) return "absorb";
    factor.append(absorbed->first);
    leftover_idx = std::move(absorbed->second);
  }
  rep.cascade_leftover.push_back(static_cast<int>(leftover_idx.size()));

  for (int i = 0; i < q; ++i) {
    StageClock clock(rep.timings, "cascade");
    const BuiltLevel& lo = (*levels)[i];
    const BuiltLevel& hi = (*levels)[i + 1];
    ResolveResult res =
        resolve_level(g, leftover_idx, lo.chains, hi.chains, lo.aux);
    if (!res.ok) return "cascade";
    factor.append(res.piece);
    rep.cascade_self_tiled.push_back(static_cast<int>(res.self_tiled.size()));
    leftover_idx.clear();
    for (int j = 0; j < static_cast<int>(hi.chains.size()); ++j)
      if (!std::binary_search(res.used_upper.begin(), res.used_upper.end(), j))
        leftover_idx.push_back(j);
    rep.cascade_leftover.push_back(static_cast<int>(leftover_idx.size()));
  }

  {
    StageClock clock(rep.timings, "finish");
    const BuiltLevel& topl = (*levels)[q];
    if (leftover_idx.size() % 3 != 0)
      throw std::logic_error("pipeline: top leftover not divisible by three");
    for (std::size_t a = 0; a < leftover_idx.size(); a += 3) {
      const Chain& ca = topl.chains[leftover_idx[a]];
      const Chain& cb = topl.chains[leftover_idx[a + 1]];
      const Chain& cc = topl.chains[leftover_idx[a + 2]];
      auto tri = exists_traversing_triangle(g, ca.removable_set(n),
                                            cb.removable_set(n),
                                            cc.removable_set(n));
      if (!tri) return "finish";
      factor.add((*tri)[0], (*tri)[1], (*tri)[2]);
      for (const Chain* ch : {&ca, &cb, &cc}) {
        VertexSet rs = ch->removable_set(n);
        int hit = -1;
        for (int x : *tri)
          if (rs.contains(x)) hit = x;
        factor.append(chain_factor_after_removal(*ch, hit));
      }
    }
  }

  {
    StageClock clock(rep.timings, "verify");
    if (!verify_triangle_factor(g, factor, g.all_vertices())) return "verify";
  }
  rep.factor = std::move(factor);
  return "";
}

}  // namespace

std::optional<Split> equipartition(const Graph& g, double p, double fraction,
                                   std::uint64_t seed) {
  const int n = g.vertex_count();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  Rng rng(seed);
  rng.shuffle(order);
  Split s{VertexSet(n), VertexSet(n)};
  int half = (n + 1) / 2;
  for (int i = 0; i < n; ++i) (i < half ? s.side1 : s.side2).add(order[i]);
  double floor_deg = static_cast<double>(n) * p * fraction;
  for (int v = 0; v < n; ++v)
    if (g.degree_in(v, s.side1) < floor_deg ||
        g.degree_in(v, s.side2) < floor_deg)
      return std::nullopt;
  return s;
}

std::optional<std::vector<BuiltLevel>> build_levels(const Graph& g,
                                                    const VertexSet& pool,
                                                    int q, int top_count) {
  if (q < 0 || top_count < 1)
    throw std::invalid_argument("build_levels: bad shape");
  const int n = g.vertex_count();
  std::vector<BuiltLevel> levels(static_cast<std::size_t>(q) + 1);
  VertexSet avail = pool;

  auto grow = [&](int length) -> std::optional<Chain> {
    ChainBuildResult res = build_chain_dfs(g, avail, length);
    if (!res.chain) return std::nullopt;
    avail -= res.chain->vertex_set(n);
    return std::move(res.chain);
  };

  levels[q].length = (q == 0) ? 0 : (1 << q);
  for (int c = 0; c < top_count; ++c) {
    auto ch = grow(levels[q].length);
    if (!ch) return std::nullopt;
    levels[q].chains.push_back(std::move(*ch));
  }

  for (int i = q - 1; i >= 0; --i) {
    int above = static_cast<int>(levels[i + 1].chains.size());
    levels[i].length = (i == 0) ? 0 : (1 << i);
    std::vector<Chain> candidates;
    for (int c = 0; c < 3 * above; ++c) {
      auto ch = grow(levels[i].length);
      if (!ch) return std::nullopt;
      candidates.push_back(std::move(*ch));
    }
    Selection sel = select_absorbable(g, candidates, levels[i + 1].chains);
    if (!sel.ok) return std::nullopt;
    for (std::size_t k = 0; k < sel.chosen.size(); ++k) {
      levels[i].chains.push_back(candidates[sel.chosen[k]]);
      AuxGraph a = sel.aux[sel.chosen[k]];
      a.owner = static_cast<int>(k);
      levels[i].aux.push_back(std::move(a));
    }
    for (const Chain& c : candidates) avail |= c.vertex_set(n);
    for (const Chain& c : levels[i].chains) avail -= c.vertex_set(n);
  }
  return levels;
}

std::pair<TriangleFactor, VertexSet> greedy_triangle_pack(
    const Graph& g, const VertexSet& pool) {
  TriangleFactor factor;
  VertexSet rest = pool;
  for (int x : pool.elements()) {
    if (!rest.contains(x)) continue;
    std::vector<int> nb = g.neighbors_in(x, rest).elements();
    int y = -1, z = -1;
    for (std::size_t a = 0; a < nb.size() && y < 0; ++a)
      for (std::size_t b = a + 1; b < nb.size(); ++b)
        if (g.adjacent(nb[a], nb[b])) {
          y = nb[a];
          z = nb[b];
          break;
        }
    if (y < 0) continue;
    factor.add(x, y, z);
    rest.remove(x);
    rest.remove(y);
    rest.remove(z);
  }
  return {std::move(factor), std::move(rest)};
}

std::optional<TriangleFactor> cover_low_degree(const Graph& g,
                                               const VertexSet& low,
                                               const VertexSet& side1,
                                               VertexSet& free) {
  TriangleFactor factor;
  for (int v : low.elements()) {
    if (!free.contains(v)) continue;  // spent as an earlier partner
    std::vector<int> pool = g.neighbors_in(v, free & side1).elements();
    int x = -1, y = -1;
    for (std::size_t a = 0; a < pool.size() && x < 0; ++a)
      for (std::size_t b = a + 1; b < pool.size(); ++b)
        if (g.adjacent(pool[a], pool[b])) {
          x = pool[a];
          y = pool[b];
          break;
        }
    if (x < 0) return std::nullopt;
    factor.add(v, x, y);
    free.remove(v);
    free.remove(x);
    free.remove(y);
  }
  return factor;
}

std::optional<std::pair<TriangleFactor, std::vector<int>>> absorb_leftover(
    const Graph& g, const VertexSet& leftover, std::span<const Chain> singles) {
  std::vector<int> left = leftover.elements();
  std::vector<AuxGraph> links;
  links.reserve(left.size());
  for (int v : left)
    links.push_back(build_aux_graph(g, Chain::single(v), singles));
  auto sdr = haxell_sdr(links);
  if (!sdr) return std::nullopt;
  TriangleFactor factor;
  std::vector<bool> used(singles.size(), false);
  for (std::size_t i = 0; i < left.size(); ++i) {
    auto [j, k] = sdr->edges[i];
    factor.add(left[i], singles[j].vertices[0], singles[k].vertices[0]);
    used[j] = true;
    used[k] = true;
  }
  std::vector<int> surviving;
  for (std::size_t j = 0; j < singles.size(); ++j)
    if (!used[j]) surviving.push_back(static_cast<int>(j));
  return std::make_pair(std::move(factor), std::move(surviving));
}

std::string RunReport::to_json(int indent) const {
  nlohmann::json j;
  j["ok"] = ok;
  j["n"] = n;
  j["p"] = p;
  j["seed"] = seed;
  j["attempts"] = attempts;
  j["attempt_failures"] = attempt_failures;
  j["failure"] = failure;
  j["q"] = q;
  nlohmann::json lv = nlohmann::json::array();
  for (const LevelStat& s : levels)
    lv.push_back({{"count", s.count}, {"length", s.length}});
  j["levels"] = lv;
  j["sides"] = {side1, side2};
  j["low_degree"] = low_degree;
  j["packed"] = packed;
  j["leftover"] = leftover;
  j["cascade"] = {{"leftover", cascade_leftover},
                  {"self_tiled", cascade_self_tiled}};
  nlohmann::json tris = nlohmann::json::array();
  for (const auto& t : factor.triangles) tris.push_back({t[0], t[1], t[2]});
  j["triangles"] = tris;
  nlohmann::json tim = nlohmann::json::array();
  for (const StageTiming& t : timings)
    tim.push_back({{"stage", t.stage}, {"ms", t.ms}});
  j["timings"] = tim;
  return j.dump(indent);
}

RunReport run_pipeline(const Graph& g, const PipelineConfig& config) {
  if (config.level_scale < 0)
    throw std::invalid_argument("run_pipeline: negative level_scale");
  if (config.q_override < -1)
    throw std::invalid_argument("run_pipeline: bad q_override");
  RunReport rep;
  rep.n = g.vertex_count();
  rep.seed = config.seed;
  rep.p = config.p_override > 0 ? config.p_override : density(g);
  if (rep.n < 3 || rep.n % 3 != 0) {
    rep.failure = "divisibility";
    return rep;
  }
  int tries = std::max(1, config.max_restarts);
  for (int k = 0; k < tries; ++k) {
    rep.attempts = k + 1;
    std::string stage = attempt(g, config, rep.p,
                                derive_seed(config.seed, "attempt",
                                            static_cast<std::uint64_t>(k)),
                                rep);
    if (stage.empty()) {
      rep.ok = true;
      rep.failure.clear();
      return rep;
    }
    rep.attempt_failures.push_back(stage);
    rep.failure = stage;
  }
  return rep;
}

}  // namespace trifactor
