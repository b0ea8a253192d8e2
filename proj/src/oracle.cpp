#include "trifactor/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace trifactor {

void TriangleFactor::add(int a, int b, int c) {
  std::array<int, 3> t{a, b, c};
  std::sort(t.begin(), t.end());
  triangles.push_back(t);
}

void TriangleFactor::append(const TriangleFactor& other) {
  triangles.insert(triangles.end(), other.triangles.begin(),
                   other.triangles.end());
}

bool verify_triangle_factor(const Graph& g, const TriangleFactor& factor,
                            const VertexSet& target) {
  return triangle_factor_violation(g, factor, target).empty();
}

std::string triangle_factor_violation(const Graph& g,
                                      const TriangleFactor& factor,
                                      const VertexSet& target) {
  if (target.universe() != g.vertex_count())
    return "target universe does not match the graph";
  VertexSet covered(g.vertex_count());
  for (std::size_t i = 0; i < factor.triangles.size(); ++i) {
    const auto& t = factor.triangles[i];
    std::string label = "triple " + std::to_string(i);
    for (int v : t)
      if (v < 0 || v >= g.vertex_count())
        return label + ": vertex " + std::to_string(v) + " out of range";
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2])
      return label + ": overlap, a vertex repeats within the triple";
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b)
        if (!g.adjacent(t[a], t[b]))
          return label + ": missing edge " + std::to_string(t[a]) + "-" +
                 std::to_string(t[b]);
    for (int v : t) {
      if (covered.contains(v))
        return label + ": overlap, vertex " + std::to_string(v) +
               " already covered by an earlier triple";
      covered.add(v);
    }
  }
  VertexSet missed = target - covered;
  if (missed.size() > 0)
    return "vertex " + std::to_string(missed.elements()[0]) + " is not covered";
  VertexSet extra = covered - target;
  if (extra.size() > 0)
    return "vertex " + std::to_string(extra.elements()[0]) +
           " lies outside the target set";
  return "";
}

std::vector<std::array<int, 3>> enumerate_triangles(const Graph& g) {
  std::vector<std::array<int, 3>> out;
  int n = g.vertex_count();
  VertexSet all = g.all_vertices();
  for (int x = 0; x < n; ++x) {
    VertexSet nx = g.neighbors(x);
    nx.for_each([&](int y) {
      if (y <= x) return;
      VertexSet common = g.neighbors_in(y, nx);
      common.for_each([&](int z) {
        if (z > y) out.push_back({x, y, z});
      });
    });
  }
  return out;
}

std::optional<std::array<int, 3>> exists_traversing_triangle(
    const Graph& g, const VertexSet& A, const VertexSet& B,
    const VertexSet& C) {
  int n = g.vertex_count();
  if (A.universe() != n || B.universe() != n || C.universe() != n)
    throw std::invalid_argument("exists_traversing_triangle: universe mismatch");
  auto hits = [&](const VertexSet& s, int x, int y, int z) {
    return s.contains(x) || s.contains(y) || s.contains(z);
  };
  for (int x = 0; x < n; ++x) {
    VertexSet nx = g.neighbors(x);
    std::optional<std::array<int, 3>> found;
    nx.for_each([&](int y) {
      if (found || y <= x) return;
      VertexSet common = g.neighbors_in(y, nx);
      common.for_each([&](int z) {
        if (found || z <= y) return;
        if (hits(A, x, y, z) && hits(B, x, y, z) && hits(C, x, y, z))
          found = std::array<int, 3>{x, y, z};
      });
    });
    if (found) return found;
  }
  return std::nullopt;
}

namespace {

bool factor_search(const Graph& g, VertexSet& remaining,
                   TriangleFactor& acc) {
  int v = remaining.min();
  if (v < 0) return true;
  remaining.remove(v);
  VertexSet nv = g.neighbors_in(v, remaining);
  bool done = false;
  std::array<int, 2> picked{-1, -1};
  nv.for_each([&](int y) {
    if (done) return;
    VertexSet common = g.neighbors_in(y, nv);
    common.for_each([&](int z) {
      if (done || z <= y) return;
      remaining.remove(y);
      remaining.remove(z);
      if (factor_search(g, remaining, acc)) {
        done = true;
        picked = {y, z};
        return;
      }
      remaining.add(y);
      remaining.add(z);
    });
  });
  if (done) {
    acc.add(v, picked[0], picked[1]);
    return true;
  }
  remaining.add(v);
  return false;
}

}  // namespace

std::optional<TriangleFactor> exact_triangle_factor(const Graph& g,
                                                    const VertexSet& target,
                                                    int size_cap) {
  if (target.universe() != g.vertex_count())
    throw std::invalid_argument("exact_triangle_factor: universe mismatch");
  int k = target.size();
  if (k % 3 != 0)
    throw std::invalid_argument(
        "exact_triangle_factor: target size not divisible by 3");
  if (k > size_cap)
    throw std::runtime_error("exact_triangle_factor: target exceeds size cap");
  VertexSet remaining = target;
  TriangleFactor acc;
  if (!factor_search(g, remaining, acc)) return std::nullopt;
  // Triples were appended on unwind; restore branch order.
  std::reverse(acc.triangles.begin(), acc.triangles.end());
  return acc;
}

}  // namespace trifactor
