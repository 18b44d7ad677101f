// Command-line front end: instance generation, instance facts, exact
// oracles, Monte-Carlo verification runs, trade-off curves, structural
// property checks, and the lower-bound computations.
//
// Exit codes: 0 success, 1 validation error, 2 a report carried a false
// pass flag. All randomness sits behind --seed; identical flags give
// byte-identical output for any --threads value.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ordmatch/errors.hpp"
#include "ordmatch/generators.hpp"
#include "ordmatch/harness.hpp"
#include "ordmatch/json_io.hpp"
#include "ordmatch/log.hpp"
#include "ordmatch/oracles.hpp"
#include "ordmatch/rng.hpp"

namespace {

using nlohmann::ordered_json;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ordmatch::ValidationError("cannot write output file: " + out_path);
  out << text;
}

std::vector<double> parse_alpha_grid(const std::string& grid) {
  std::vector<double> alphas;
  std::stringstream ss(grid);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    size_t pos = 0;
    double v = std::stod(tok, &pos);
    if (pos != tok.size())
      throw ordmatch::ValidationError("--alpha-grid: bad value '" + tok + "'");
    if (!(v >= 0.0 && v <= 1.0))
      throw ordmatch::ValidationError("--alpha-grid: alpha out of range [0, 1]");
    alphas.push_back(v);
  }
  if (alphas.empty()) throw ordmatch::ValidationError("--alpha-grid: empty grid");
  return alphas;
}

ordmatch::Algo parse_alg(const std::string& name) {
  if (name == "random") return ordmatch::Algo::random;
  if (name == "rsd") return ordmatch::Algo::rsd;
  if (name == "rsd-partial") return ordmatch::Algo::rsd_partial;
  if (name == "two-sided") return ordmatch::Algo::two_sided;
  if (name == "total-order") return ordmatch::Algo::total_order;
  throw ordmatch::ValidationError("--alg: unknown algorithm '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ordinal bipartite matching: algorithms, oracles, verification"};
  app.require_subcommand(1);

  // ---- gen ----
  auto* gen = app.add_subcommand("gen", "generate an instance document");
  std::string g_kind, g_variant = "w1", g_out;
  int g_n = 8, g_dim = 2;
  double g_nu = 0.5, g_eps = 1e-6, g_beta = 2.0;
  uint64_t g_seed = 0;
  bool g_seed_given = false;
  gen->add_option("--kind", g_kind,
                  "euclidean | metric-closure | figure2 | lb-two-sided | "
                  "lb-one-sided | beta-bounded")
      ->required();
  gen->add_option("--n", g_n, "instance size");
  gen->add_option("--dim", g_dim, "euclidean dimension");
  gen->add_option("--nu", g_nu, "heavy-row fraction (lb-one-sided)");
  gen->add_option("--epsilon", g_eps, "tie-splitting epsilon (lb-two-sided)");
  gen->add_option("--beta", g_beta, "weight spread bound (beta-bounded)");
  gen->add_option("--seed", g_seed, "generator seed")
      ->each([&](const std::string&) { g_seed_given = true; });
  gen->add_option("--variant", g_variant, "lb-two-sided variant: w1 | w2");
  gen->add_option("--out", g_out, "output file (default: stdout)");

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "report derived instance facts");
  std::string v_instance, v_out;
  verify->add_option("--instance", v_instance, "instance file")->required();
  verify->add_option("--out", v_out, "output file (default: stdout)");

  // ---- oracle ----
  auto* oracle = app.add_subcommand("oracle", "exact optimum and minimum");
  std::string o_instance, o_out;
  oracle->add_option("--instance", o_instance, "instance file")->required();
  oracle->add_option("--out", o_out, "output file (default: stdout)");

  // ---- run ----
  auto* run = app.add_subcommand("run", "Monte-Carlo verification run");
  std::string r_alg, r_instance, r_out;
  double r_alpha = -1.0;
  int64_t r_trials = 10000;
  uint64_t r_seed = 0;
  bool r_seed_given = false;
  int r_threads = 0;
  run->add_option("--alg", r_alg,
                  "random | rsd | rsd-partial | two-sided | total-order")
      ->required();
  run->add_option("--instance", r_instance, "instance file")->required();
  run->add_option("--alpha", r_alpha, "information budget in [0, 1]");
  run->add_option("--trials", r_trials, "trial count (>= 2)");
  run->add_option("--seed", r_seed, "run seed")
      ->each([&](const std::string&) { r_seed_given = true; })
      ->required();
  run->add_option("--threads", r_threads, "worker threads (0 = default)");
  run->add_option("--out", r_out, "output file (default: stdout)");

  // ---- curve ----
  auto* curve = app.add_subcommand("curve", "information/quality trade-off CSV");
  std::string c_alg = "rsd-partial", c_kind = "euclidean", c_grid = "0,0.25,0.5,0.75,1";
  std::vector<std::string> c_instance_files;
  std::string c_out;
  int c_n = 20, c_dim = 2, c_instances = 20;
  double c_beta = 2.0;
  int64_t c_trials = 10000;
  uint64_t c_seed = 0;
  int c_threads = 0;
  curve->add_option("--alg", c_alg, "algorithm family (chooses the model)");
  curve->add_option("--kind", c_kind, "generator kind for the family");
  curve->add_option("--n", c_n, "instance size");
  curve->add_option("--dim", c_dim, "euclidean dimension");
  curve->add_option("--beta", c_beta, "weight spread (beta-bounded families)");
  curve->add_option("--instances", c_instances, "family size when generating");
  curve->add_option("--instance", c_instance_files,
                    "instance file(s); overrides --kind family");
  curve->add_option("--alpha-grid", c_grid, "comma-separated alphas");
  curve->add_option("--trials", c_trials, "trials per (alpha, instance)");
  curve->add_option("--seed", c_seed, "run seed")->required();
  curve->add_option("--threads", c_threads, "worker threads (0 = default)");
  curve->add_option("--out", c_out, "output file (default: stdout)");

  // ---- lemmas ----
  auto* lemmas = app.add_subcommand("lemmas", "structural property spot-checks");
  uint64_t l_seed = 0;
  int64_t l_instances = 100;
  std::string l_out;
  lemmas->add_option("--seed", l_seed, "suite seed")->required();
  lemmas->add_option("--instances", l_instances, "instances per check");
  lemmas->add_option("--out", l_out, "output file (default: stdout)");

  // ---- lowerbound ----
  auto* lower = app.add_subcommand("lowerbound", "lower-bound computations");
  double lb_eps = 1e-6, lb_nu = 0.6180339887498949;
  int lb_n = 1000;
  std::string lb_out;
  lower->add_option("--epsilon", lb_eps, "two-sided pair epsilon");
  lower->add_option("--nu", lb_nu, "one-sided heavy-row fraction");
  lower->add_option("--n", lb_n, "one-sided family size");
  lower->add_option("--out", lb_out, "output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (gen->parsed()) {
      const bool needs_seed = g_kind == "euclidean" || g_kind == "metric-closure" ||
                              g_kind == "beta-bounded";
      if (needs_seed && !g_seed_given)
        throw ordmatch::ValidationError("--seed is required for kind '" + g_kind + "'");
      ordmatch::GenSpec spec;
      spec.kind = g_kind;
      spec.n = g_n;
      spec.dim = g_dim;
      spec.nu = g_nu;
      spec.eps = g_eps;
      spec.beta = g_beta;
      spec.seed = g_seed;
      spec.variant = g_variant;
      auto inst = ordmatch::generate(spec);
      emit(ordmatch::instance_to_json(inst), g_out);
      std::fprintf(stderr, "generated %s (n=%d)%s%s\n", inst.id().c_str(), inst.n,
                   g_out.empty() ? "" : " -> ", g_out.c_str());
      return 0;
    }

    if (verify->parsed()) {
      auto inst = ordmatch::load_instance_file(v_instance);
      ordered_json doc;
      doc["instance"] = inst.id();
      doc["n"] = inst.n;
      doc["metric"] = ordmatch::check_metric(inst);
      auto beta = ordmatch::beta_ratio(inst);
      if (beta.has_value())
        doc["beta"] = *beta;
      else
        doc["beta"] = nullptr;
      emit(doc.dump(2) + "\n", v_out);
      std::fprintf(stderr, "verified %s: metric=%s\n", inst.id().c_str(),
                   doc["metric"].get<bool>() ? "true" : "false");
      return 0;
    }

    if (oracle->parsed()) {
      auto inst = ordmatch::load_instance_file(o_instance);
      auto opt = ordmatch::opt_matching(inst);
      auto mn = ordmatch::min_matching(inst);
      ordered_json doc;
      doc["instance"] = inst.id();
      doc["opt_weight"] = ordmatch::matching_weight(inst, opt);
      doc["min_weight"] = ordmatch::matching_weight(inst, mn);
      auto pairs_of = [](const ordmatch::Matching& m) {
        auto arr = ordered_json::array();
        for (auto [x, y] : m.pairs) arr.push_back(ordered_json::array({x, y}));
        return arr;
      };
      doc["opt_matching"] = pairs_of(opt);
      doc["min_matching"] = pairs_of(mn);
      emit(doc.dump(2) + "\n", o_out);
      std::fprintf(stderr, "oracle %s: opt=%.12g min=%.12g\n", inst.id().c_str(),
                   doc["opt_weight"].get<double>(), doc["min_weight"].get<double>());
      return 0;
    }

    if (run->parsed()) {
      auto inst = ordmatch::load_instance_file(r_instance);
      auto algo = parse_alg(r_alg);
      double alpha = r_alpha;
      if (alpha < 0) {  // not given: the two fixed-budget algorithms default
        if (algo == ordmatch::Algo::random) alpha = 0.0;
        else if (algo == ordmatch::Algo::rsd) alpha = 1.0;
        else throw ordmatch::ValidationError("--alpha is required for --alg " + r_alg);
      }
      if (!(alpha >= 0.0 && alpha <= 1.0))
        throw ordmatch::ValidationError("--alpha out of range [0, 1]");
      if (algo == ordmatch::Algo::random && alpha != 0.0)
        throw ordmatch::ValidationError("--alg random expects --alpha 0");
      if (algo == ordmatch::Algo::rsd && alpha != 1.0)
        throw ordmatch::ValidationError("--alg rsd expects --alpha 1");
      (void)r_seed_given;
      ordmatch::RunOptions opts;
      opts.threads = r_threads;
      auto report = ordmatch::run_trials(inst, algo, alpha, r_trials, r_seed, opts);
      emit(ordmatch::trial_report_to_json(report), r_out);
      std::fprintf(stderr, "run %s alpha=%g: ratio=%.4f bound=%.4f %s\n",
                   report.algorithm.c_str(), report.alpha, report.empirical_ratio,
                   report.theoretical_ratio, report.pass ? "pass" : "FAIL");
      return report.pass ? 0 : 2;
    }

    if (curve->parsed()) {
      auto algo = parse_alg(c_alg);
      auto model = ordmatch::model_of(algo);
      auto grid = parse_alpha_grid(c_grid);
      std::vector<ordmatch::Instance> family;
      if (!c_instance_files.empty()) {
        for (const auto& path : c_instance_files)
          family.push_back(ordmatch::load_instance_file(path));
      } else {
        if (c_instances < 1)
          throw ordmatch::ValidationError("curve: --instances must be >= 1");
        for (int i = 0; i < c_instances; ++i) {
          ordmatch::GenSpec spec;
          spec.kind = c_kind;
          spec.n = c_n;
          spec.dim = c_dim;
          spec.beta = c_beta;
          spec.seed = ordmatch::Rng::mix(c_seed + 0x5eedbeef + static_cast<uint64_t>(i));
          family.push_back(ordmatch::generate(spec));
        }
      }
      ordmatch::RunOptions opts;
      opts.threads = c_threads;
      auto points = ordmatch::tradeoff_curve(family, model, grid, c_trials, c_seed, opts);
      emit(ordmatch::curve_to_csv(points), c_out);
      bool all_pass = true;
      for (const auto& p : points) all_pass = all_pass && p.all_pass;
      std::fprintf(stderr, "curve %s: %zu points, %s\n",
                   ordmatch::to_string(model).c_str(), points.size(),
                   all_pass ? "all points pass" : "FAILING points");
      return all_pass ? 0 : 2;
    }

    if (lemmas->parsed()) {
      auto ledger = ordmatch::lemma_property_suite(l_seed, l_instances);
      emit(ordmatch::property_ledger_to_json(ledger), l_out);
      std::fprintf(stderr, "lemmas: %zu checks, %s\n", ledger.checks.size(),
                   ledger.all_pass ? "all pass" : "FAILURES");
      return ledger.all_pass ? 0 : 2;
    }

    if (lower->parsed()) {
      auto mix = ordmatch::lb_two_sided_optimal_mix(lb_eps);
      const double one_sided = ordmatch::lb_one_sided_ratio(lb_n, lb_nu);
      ordered_json doc;
      doc["two_sided"] = {{"epsilon", lb_eps},
                          {"p_star", mix.p_star},
                          {"factor", mix.factor}};
      doc["one_sided"] = {{"n", lb_n}, {"nu", lb_nu}, {"factor", one_sided}};
      emit(doc.dump(2) + "\n", lb_out);
      std::fprintf(stderr, "lowerbound: two-sided factor %.6f at p*=%.4f; "
                   "one-sided factor %.6f\n", mix.factor, mix.p_star, one_sided);
      return 0;
    }
  } catch (const ordmatch::BudgetViolation& e) {
    std::fprintf(stderr, "budget violation: %s\n", e.what());
    return 2;
  } catch (const ordmatch::ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 1;
}
