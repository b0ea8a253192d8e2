#include "trifactor/spectral.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <json.hpp>
#include <stdexcept>

#include "trifactor/rng.hpp"

namespace trifactor {

SpectralReport analyze_spectrum(const Graph& g, int size_cap) {
  int n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("analyze_spectrum: empty graph");
  if (n > size_cap)
    throw std::runtime_error("analyze_spectrum: graph exceeds eigensolve cap");
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (auto [u, v] : g.edges()) {
    a(u, v) = 1.0;
    a(v, u) = 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("analyze_spectrum: eigensolver failed");

  SpectralReport report;
  report.n = n;
  report.eigenvalues.assign(solver.eigenvalues().data(),
                            solver.eigenvalues().data() + n);
  std::sort(report.eigenvalues.begin(), report.eigenvalues.end(),
            std::greater<double>());
  if (n >= 2)
    report.lambda = std::max(std::abs(report.eigenvalues[1]),
                             std::abs(report.eigenvalues[n - 1]));
  report.is_regular = true;
  int d0 = g.degree(0);
  int dmax = 0;
  for (int v = 0; v < n; ++v) {
    int dv = g.degree(v);
    dmax = std::max(dmax, dv);
    if (dv != d0) report.is_regular = false;
  }
  report.d = report.is_regular ? d0 : dmax;
  return report;
}

namespace {

// |e - |X||Y|p| / sqrt(|X||Y|). Every pair score in this file goes through
// here, so the exact maximum and any sampled re-check of the same pair agree
// to the last bit.
double deviation_ratio(long long e, long long x, long long y, double p) {
  double xy = static_cast<double>(x) * static_cast<double>(y);
  return std::abs(static_cast<double>(e) - xy * p) / std::sqrt(xy);
}

}  // namespace

double bijumbled_beta_exact(const Graph& g, double p) {
  int n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("bijumbled_beta_exact: empty graph");
  if (n > 20)
    throw std::runtime_error("bijumbled_beta_exact: n exceeds enumeration cap");
  if (p < 0.0 || p > 1.0)
    throw std::invalid_argument("bijumbled_beta_exact: p outside [0, 1]");

  // For fixed X, e(X, Y) over sets Y of size k ranges over an integer
  // interval whose endpoints come from the k largest and k smallest values
  // of |N(y) ∩ X|, and |e - |X|kp| peaks at an endpoint. Prefix sums stay in
  // integers; Gray-code order keeps the count vector incremental across X.
  std::vector<int> count(n, 0);  // |N(y) ∩ X| per y
  std::vector<int> sorted(n);
  double best = 0.0;
  std::uint32_t gray_prev = 0;
  int size_x = 0;
  for (std::uint32_t i = 1; i < (1u << n); ++i) {
    std::uint32_t gray = i ^ (i >> 1);
    std::uint32_t changed = gray ^ gray_prev;
    int v = __builtin_ctz(changed);
    bool added = gray & changed;
    auto rv = g.row(v);
    // n <= 20: one word.
    std::uint64_t bits = rv[0];
    while (bits) {
      int y = __builtin_ctzll(bits);
      bits &= bits - 1;
      count[y] += added ? 1 : -1;
    }
    size_x += added ? 1 : -1;
    gray_prev = gray;

    sorted = count;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    long long top = 0, bottom = 0;
    for (int k = 1; k <= n; ++k) {
      top += sorted[k - 1];
      bottom += sorted[n - k];
      best = std::max({best, deviation_ratio(top, size_x, k, p),
                       deviation_ratio(bottom, size_x, k, p)});
    }
  }
  return best;
}

namespace {

VertexSet random_subset(int n, int k, Rng& rng) {
  // Partial Fisher-Yates over 0..n-1, first k entries.
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i;
  VertexSet s(n);
  for (int i = 0; i < k; ++i) {
    int j = i + rng.index(n - i);
    std::swap(pool[i], pool[j]);
    s.add(pool[i]);
  }
  return s;
}

std::vector<int> size_grid(int n) {
  std::vector<int> sizes{1, static_cast<int>(std::lround(std::sqrt(n))),
                         n / 4, n / 2, n};
  for (int& s : sizes) s = std::clamp(s, 1, n);
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  return sizes;
}

}  // namespace

RefuteResult bijumbled_refute_sampled(const Graph& g,
                                      const JumbledParams& params,
                                      long long trials, std::uint64_t seed) {
  int n = g.vertex_count();
  if (n < 1)
    throw std::invalid_argument("bijumbled_refute_sampled: empty graph");
  std::vector<int> sizes = size_grid(n);
  Rng rng(derive_seed(seed, "refute-sampled"));
  RefuteResult result;
  for (long long t = 0; t < trials; ++t) {
    int kx = sizes[rng.index(static_cast<int>(sizes.size()))];
    int ky = sizes[rng.index(static_cast<int>(sizes.size()))];
    VertexSet X = random_subset(n, kx, rng);
    VertexSet Y = random_subset(n, ky, rng);
    double ratio = deviation_ratio(g.edge_count_between(X, Y), kx, ky, params.p);
    if (ratio > params.beta) {
      result.violated = true;
      result.X = std::move(X);
      result.Y = std::move(Y);
      result.deviation = ratio;
      return result;
    }
  }
  return result;
}

JumbledParams mixing_lemma_params(const SpectralReport& report) {
  if (!report.is_regular)
    throw std::invalid_argument("mixing_lemma_params: graph is not regular");
  JumbledParams params;
  params.p = static_cast<double>(report.d) / report.n;
  params.beta = report.lambda;
  params.origin = "mixing-lemma";
  return params;
}

ThresholdReport theorem_threshold_check(
    const Graph& g, double epsilon, const std::optional<JumbledParams>& given) {
  int n = g.vertex_count();
  if (n < 3) throw std::invalid_argument("theorem_threshold_check: n < 3");
  if (epsilon <= 0.0)
    throw std::invalid_argument("theorem_threshold_check: epsilon <= 0");
  SpectralReport spec = analyze_spectrum(g);
  double logn = std::log(static_cast<double>(n));

  ThresholdReport out;
  out.epsilon = epsilon;
  out.lambda = spec.lambda;
  if (spec.is_regular) {
    out.lambda_form_applicable = true;
    double d = spec.d;
    out.lambda_bound = epsilon * d * d / (n * logn);
    out.lambda_form_pass = spec.lambda < out.lambda_bound;
  }

  std::optional<JumbledParams> params = given;
  if (!params && spec.is_regular) params = mixing_lemma_params(spec);
  if (params) {
    out.bijumbled_form_applicable = true;
    out.p = params->p;
    out.beta = params->beta;
    out.beta_bound = epsilon * n * params->p * params->p / logn;
    out.min_degree = g.min_degree();
    out.min_degree_bound = n * params->p / 2.0;
    out.bijumbled_form_pass = params->beta <= out.beta_bound &&
                              out.min_degree >= out.min_degree_bound;
  } else {
    out.p = n > 1 ? 2.0 * g.edge_count() / (static_cast<double>(n) * (n - 1))
                  : 0.0;
  }
  return out;
}

std::string spectral_report_json(const Graph& g, double epsilon,
                                 int eigen_cap) {
  SpectralReport spec = analyze_spectrum(g, eigen_cap);
  int n = spec.n;

  JumbledParams params;
  bool have_params = false;
  if (spec.is_regular) {
    params = mixing_lemma_params(spec);
    have_params = true;
  } else if (n <= 20) {
    params.p = n > 1 ? 2.0 * g.edge_count() / (static_cast<double>(n) * (n - 1))
                     : 0.0;
    params.beta = bijumbled_beta_exact(g, params.p);
    params.origin = "exact";
    have_params = true;
  }

  nlohmann::json j;
  j["n"] = n;
  j["d"] = spec.d;
  j["regular"] = spec.is_regular;
  j["lambda"] = spec.lambda;
  j["eigen_min"] = spec.eigenvalues.back();
  j["eigen_second"] = n >= 2 ? spec.eigenvalues[1] : 0.0;
  if (have_params) {
    j["p"] = params.p;
    j["beta"] = params.beta;
    j["origin"] = params.origin;
  } else {
    j["p"] = n > 1 ? 2.0 * g.edge_count() / (static_cast<double>(n) * (n - 1))
                   : 0.0;
    j["beta"] = nullptr;
    j["origin"] = "sampled";
  }

  nlohmann::json verdicts;
  if (n >= 3) {
    ThresholdReport t = theorem_threshold_check(
        g, epsilon, have_params ? std::optional<JumbledParams>(params)
                                : std::nullopt);
    verdicts["lambda_form"] = {
        {"applicable", t.lambda_form_applicable},
        {"pass", t.lambda_form_pass},
        {"lambda", t.lambda},
        {"bound", t.lambda_bound},
        {"margin", t.lambda_bound - t.lambda},
    };
    verdicts["bijumbled_form"] = {
        {"applicable", t.bijumbled_form_applicable},
        {"pass", t.bijumbled_form_pass},
        {"beta", t.beta},
        {"bound", t.beta_bound},
        {"margin", t.beta_bound - t.beta},
        {"min_degree", t.min_degree},
        {"min_degree_bound", t.min_degree_bound},
    };
  } else {
    verdicts["lambda_form"] = {{"applicable", false}, {"pass", false}};
    verdicts["bijumbled_form"] = {{"applicable", false}, {"pass", false}};
  }
  j["verdicts"] = verdicts;
  j["epsilon"] = epsilon;
  return j.dump(2);
}

}  // namespace trifactor
