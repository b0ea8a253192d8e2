#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "trifactor/factor.hpp"
#include "trifactor/generators.hpp"
#include "trifactor/graph.hpp"
#include "trifactor/pipeline.hpp"
#include "trifactor/rng.hpp"
#include "trifactor/spectral.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using trifactor::Graph;

// Exit codes: 0 success, 1 honest negative result, 2 usage or input error,
// 3 resource cap exceeded.
enum : int { kOk = 0, kNegative = 1, kUsage = 2, kCapped = 3 };

Graph load_graph(const std::string& path) {
  if (path == "-") return trifactor::parse_edge_list(std::cin);
  return trifactor::parse_edge_list_file(path);
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

nlohmann::json manifest(const std::string& command, const std::string& input,
                        nlohmann::json config) {
  return {{"command", command},
          {"input", input},
          {"version", kVersion},
          {"config", std::move(config)}};
}

nlohmann::json threshold_json(const trifactor::ThresholdReport& t) {
  return {{"epsilon", t.epsilon},
          {"p", t.p},
          {"lambda_form",
           {{"applicable", t.lambda_form_applicable},
            {"pass", t.lambda_form_pass},
            {"lambda", t.lambda},
            {"bound", t.lambda_bound}}},
          {"bijumbled_form",
           {{"applicable", t.bijumbled_form_applicable},
            {"pass", t.bijumbled_form_pass},
            {"beta", t.beta},
            {"bound", t.beta_bound},
            {"min_degree", t.min_degree},
            {"min_degree_bound", t.min_degree_bound}}}};
}

int run_generate(const trifactor::GenSpec& spec, const std::string& out) {
  Graph g = trifactor::build_graph(spec);
  write_text(out, trifactor::edge_list_string(g));
  std::cerr << g.vertex_count() << " " << g.edge_count() << " " << spec.family
            << "\n";
  return kOk;
}

int run_analyze(const std::string& input, double epsilon, int cap,
                const std::string& out) {
  Graph g = load_graph(input);
  std::string report;
  try {
    report = trifactor::spectral_report_json(g, epsilon, cap);
  } catch (const std::runtime_error& e) {
    std::cerr << "analyze: " << e.what() << "\n";
    return kCapped;
  }
  nlohmann::json j = manifest("analyze", input,
                              {{"epsilon", epsilon}, {"eigen_cap", cap}});
  j["report"] = nlohmann::json::parse(report);
  write_text(out, j.dump(2));
  return kOk;
}

int run_solve(const std::string& input, trifactor::PipelineConfig cfg,
              double epsilon, int trials, const std::string& out,
              const std::string& factor_out) {
  Graph g = load_graph(input);

  nlohmann::json j = manifest(
      "solve", input,
      {{"seed", cfg.seed},
       {"epsilon", epsilon},
       {"level_scale", cfg.level_scale},
       {"q_override", cfg.q_override},
       {"max_restarts", cfg.max_restarts},
       {"p_override", cfg.p_override},
       {"trials", trials}});
  try {
    j["threshold"] = threshold_json(trifactor::theorem_threshold_check(g, epsilon));
  } catch (const std::runtime_error&) {
    j["threshold"] = nullptr;
  }

  trifactor::RunReport rep;
  int trial = 0;
  std::uint64_t master = cfg.seed;
  for (; trial < trials; ++trial) {
    cfg.seed = trial == 0 ? master
                          : trifactor::derive_seed(master, "trial",
                                                   static_cast<std::uint64_t>(trial));
    rep = trifactor::run_pipeline(g, cfg);
    if (rep.ok) break;
  }
  if (trial == trials) trial = trials - 1;

  j["trial"] = trial;
  j["report"] = nlohmann::json::parse(rep.to_json());
  write_text(out, j.dump(2));

  if (rep.ok && !factor_out.empty()) {
    nlohmann::json f;
    f["triangles"] = nlohmann::json::array();
    for (const auto& t : rep.factor.triangles)
      f["triangles"].push_back({t[0], t[1], t[2]});
    write_text(factor_out, f.dump(2));
  }
  if (rep.ok) return kOk;
  // A vertex count not divisible by three is a malformed request, not a
  // negative search result.
  if (rep.failure == "divisibility") {
    std::cerr << "solve: vertex count " << rep.n
              << " is not divisible by three\n";
    return kUsage;
  }
  return kNegative;
}

int run_verify(const std::string& input, const std::string& factor_path) {
  Graph g = load_graph(input);
  std::ifstream in(factor_path);
  if (!in) throw std::runtime_error("cannot open factor file: " + factor_path);
  nlohmann::json f = nlohmann::json::parse(in);
  if (!f.contains("triangles") || !f["triangles"].is_array())
    throw std::runtime_error("factor file: missing \"triangles\" array");
  trifactor::TriangleFactor factor;
  for (const auto& t : f["triangles"]) {
    if (!t.is_array() || t.size() != 3)
      throw std::runtime_error("factor file: each triangle needs 3 vertices");
    factor.add(t[0].get<int>(), t[1].get<int>(), t[2].get<int>());
  }
  std::string violation =
      trifactor::triangle_factor_violation(g, factor, g.all_vertices());
  bool ok = violation.empty();
  if (!ok) std::cerr << "verify: " << violation << "\n";
  nlohmann::json j = {{"ok", ok},
                      {"n", g.vertex_count()},
                      {"triangles", factor.triangles.size()}};
  std::cout << j.dump() << "\n";
  return ok ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constructive triangle-factor toolkit"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Write a named graph as an edge list");
  trifactor::GenSpec spec;
  std::string gen_out = "-";
  gen->add_option("--family", spec.family,
                  "gnp | random-regular | paley | complete-multipartite | "
                  "cycle | complete")
      ->required();
  gen->add_option("--n", spec.n, "vertex count (q for paley)");
  gen->add_option("--p", spec.p, "edge probability (gnp)");
  gen->add_option("--d", spec.d, "degree (random-regular)");
  gen->add_option("--parts", spec.parts, "part sizes (complete-multipartite)");
  gen->add_option("--seed", spec.seed, "generator seed")->default_val(1);
  gen->add_option("--out", gen_out, "output path, - for stdout");

  // analyze
  auto* ana = app.add_subcommand(
      "analyze", "Spectral and pseudorandomness report for a graph");
  std::string ana_in;
  std::string ana_out = "-";
  double ana_eps = 0.1;
  int ana_cap = 5000;
  ana->add_option("input", ana_in, "edge-list path, - for stdin")->required();
  ana->add_option("--epsilon", ana_eps, "threshold slack");
  ana->add_option("--eigen-cap", ana_cap, "largest n the eigensolver accepts");
  ana->add_option("--out", ana_out, "output path, - for stdout");

  // solve
  auto* sol = app.add_subcommand("solve", "Find a triangle factor");
  std::string sol_in;
  std::string sol_out = "-";
  std::string sol_factor_out;
  trifactor::PipelineConfig cfg;
  double sol_eps = 0.1;
  int trials = 1;
  sol->add_option("input", sol_in, "edge-list path, - for stdin")->required();
  sol->add_option("--seed", cfg.seed, "master seed")->default_val(1);
  sol->add_option("--epsilon", sol_eps, "threshold slack for the advisory check");
  sol->add_option("--level-scale", cfg.level_scale,
                  "top-level chain count, 0 = auto");
  sol->add_option("--q", cfg.q_override, "levels above the singletons, -1 = auto");
  sol->add_option("--max-restarts", cfg.max_restarts, "attempts per trial");
  sol->add_option("--p", cfg.p_override, "density override for degree floors");
  sol->add_option("--trials", trials, "independent master seeds to try")
      ->check(CLI::PositiveNumber);
  sol->add_option("--out", sol_out, "report path, - for stdout");
  sol->add_option("--factor-out", sol_factor_out, "write the factor JSON here");

  // verify
  auto* ver = app.add_subcommand("verify", "Check a factor file against a graph");
  std::string ver_in;
  std::string ver_factor;
  ver->add_option("input", ver_in, "edge-list path, - for stdin")->required();
  ver->add_option("--factor", ver_factor, "factor JSON path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (gen->parsed()) return run_generate(spec, gen_out);
    if (ana->parsed()) return run_analyze(ana_in, ana_eps, ana_cap, ana_out);
    if (sol->parsed())
      return run_solve(sol_in, cfg, sol_eps, trials, sol_out, sol_factor_out);
    if (ver->parsed()) return run_verify(ver_in, ver_factor);
  } catch (const std::exception& e) {
    std::cerr << argv[0] << ": " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
