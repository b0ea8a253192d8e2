#ifndef TRIFACTOR_ORACLE_HPP
#define TRIFACTOR_ORACLE_HPP

#include <array>
#include <optional>
#include <vector>

#include "trifactor/factor.hpp"
#include "trifactor/graph.hpp"

namespace trifactor {

/// All triangles of g as ascending triples, in lexicographic order.
std::vector<std::array<int, 3>> enumerate_triangles(const Graph& g);

/// First triangle (lexicographic over ascending triples) whose vertex set
/// intersects each of A, B, C. Sets may overlap. None if no such triangle.
std::optional<std::array<int, 3>> exists_traversing_triangle(const Graph& g,
                                                             const VertexSet& A,
                                                             const VertexSet& B,
                                                             const VertexSet& C);

/// Exact decision + construction: a partition of `target` into vertex-disjoint
/// triangles of g, or none if no such partition exists. Backtracking exact
/// cover, branching on the minimum-index uncovered vertex. |target| must be
/// divisible by 3 (otherwise invalid_argument) and at most `size_cap`
/// (otherwise runtime_error: this is a brute-force tool, not the solver).
std::optional<TriangleFactor> exact_triangle_factor(const Graph& g,
                                                    const VertexSet& target,
                                                    int size_cap = 45);

}  // namespace trifactor

#endif
