#ifndef TRIFACTOR_FACTOR_HPP
#define TRIFACTOR_FACTOR_HPP

#include <array>
#include <string>
#include <vector>

#include "trifactor/graph.hpp"

namespace trifactor {

/// A collection of vertex triples, each meant to be a triangle of some host
/// graph. Triples are stored with ascending entries.
struct TriangleFactor {
  std::vector<std::array<int, 3>> triangles;

  void add(int a, int b, int c);
  void append(const TriangleFactor& other);
  int covered_count() const { return static_cast<int>(triangles.size()) * 3; }
};

/// True iff the triples are pairwise vertex-disjoint host triangles whose
/// union is exactly `target`.
bool verify_triangle_factor(const Graph& g, const TriangleFactor& factor,
                            const VertexSet& target);

/// Empty string if the factor verifies, otherwise a one-line description of
/// the first violation found.
std::string triangle_factor_violation(const Graph& g,
                                      const TriangleFactor& factor,
                                      const VertexSet& target);

}  // namespace trifactor

#endif
