#ifndef TRIFACTOR_SPECTRAL_HPP
#define TRIFACTOR_SPECTRAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trifactor/graph.hpp"

namespace trifactor {

/// Adjacency spectrum of a graph, eigenvalues sorted descending.
struct SpectralReport {
  int n = 0;
  std::vector<double> eigenvalues;  // descending
  double lambda = 0.0;              // max(|second largest|, |smallest|)
  bool is_regular = false;
  int d = 0;  // common degree when regular, otherwise max degree
};

/// Dense symmetric eigensolve of the adjacency matrix. n is capped (default
/// 5000); beyond the cap this throws runtime_error rather than grind.
SpectralReport analyze_spectrum(const Graph& g, int size_cap = 5000);

/// Certified pseudorandomness parameters for a graph: for all vertex sets X,
/// Y, |e(X,Y) - |X||Y|p| <= beta * sqrt(|X||Y|), edges inside the
/// intersection counted twice.
struct JumbledParams {
  double p = 0.0;
  double beta = 0.0;
  std::string origin;  // "exact", "sampled" or "mixing-lemma"
};

/// Smallest beta that satisfies the two-set inequality for every pair of
/// nonempty sets, by scanning all 2^n set pairs (per-X closed form over Y).
/// n must be at most 20; above that this throws runtime_error.
double bijumbled_beta_exact(const Graph& g, double p);

/// One sampled counterexample to the (p, beta) inequality, or none after
/// `trials` random pairs. Set sizes are drawn from the grid
/// {1, sqrt(n), n/4, n/2, n}, membership uniform.
struct RefuteResult {
  bool violated = false;
  VertexSet X, Y;
  double deviation = 0.0;  // |e - |X||Y|p| / sqrt(|X||Y|) for the found pair
};
RefuteResult bijumbled_refute_sampled(const Graph& g, const JumbledParams& params,
                                      long long trials, std::uint64_t seed);

/// Second-eigenvalue bound as bijumbledness: a d-regular graph with second
/// eigenvalue lambda is (d/n, lambda)-bijumbled. Requires regularity.
JumbledParams mixing_lemma_params(const SpectralReport& report);

/// Hypothesis checks for the two sufficient conditions the solver's design is
/// calibrated against, with numeric margins (bound - value; positive passes).
struct ThresholdReport {
  double epsilon = 0.0;
  double p = 0.0;
  // lambda form: lambda < epsilon * d^2 / (n ln n); regular graphs only.
  bool lambda_form_applicable = false;
  bool lambda_form_pass = false;
  double lambda = 0.0;
  double lambda_bound = 0.0;
  // bijumbled form: beta <= epsilon n p^2 / ln n and min degree >= np/2.
  bool bijumbled_form_applicable = false;
  bool bijumbled_form_pass = false;
  double beta = 0.0;
  double beta_bound = 0.0;
  int min_degree = 0;
  double min_degree_bound = 0.0;
};

/// Evaluates both threshold forms. When `given` is absent, (p, beta) come
/// from the mixing lemma for regular graphs; for irregular graphs without
/// explicit params the bijumbled form is marked not applicable. n >= 3.
ThresholdReport theorem_threshold_check(
    const Graph& g, double epsilon,
    const std::optional<JumbledParams>& given = std::nullopt);

/// JSON text of the full spectral/pseudorandomness analysis (keys: n, d,
/// lambda, eigen_min, eigen_second, p, beta, origin, verdicts).
std::string spectral_report_json(const Graph& g, double epsilon,
                                 int eigen_cap = 5000);

}  // namespace trifactor

#endif
