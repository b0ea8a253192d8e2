#ifndef TRIFACTOR_GENERATORS_HPP
#define TRIFACTOR_GENERATORS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "trifactor/graph.hpp"

namespace trifactor {

/// G(n, p): each pair independently an edge with probability p.
Graph gnp(int n, double p, std::uint64_t seed);

/// Uniform-ish random d-regular simple graph: pairing model with restarts on
/// loops/multi-edges (capped, then a circulant fallback), followed by 10*n*d
/// random double-edge swaps. Requires 0 <= d < n and n*d even.
Graph random_regular(int n, int d, std::uint64_t seed);

/// Paley graph on q vertices: q prime, q = 1 (mod 4); a~b iff a-b is a
/// nonzero quadratic residue.
Graph paley(int q);

/// Complete multipartite graph with the given part sizes.
Graph complete_multipartite(const std::vector<int>& parts);

Graph cycle(int n);
Graph complete(int n);

/// Named generator request, as exposed by the CLI.
struct GenSpec {
  std::string family;       // gnp | random-regular | paley |
                            // complete-multipartite | cycle | complete
  int n = 0;                // vertex count (or q for paley)
  double p = 0.0;           // gnp
  int d = 0;                // random-regular
  std::vector<int> parts;   // complete-multipartite
  std::uint64_t seed = 0;
};

Graph build_graph(const GenSpec& spec);

}  // namespace trifactor

#endif
