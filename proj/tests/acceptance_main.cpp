// Acceptance gate: every verification target below is exercised end to
// end and printed as one pass/fail line. The process exits non-zero when
// any line fails. Tolerances are pinned here, next to each check.
//
// The Monte-Carlo pass rule throughout is the harness rule: the empirical
// mean must reach (optimum x guaranteed fraction) minus three standard
// errors. Exact checks use the stated numeric tolerance and no slack.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ordmatch/generators.hpp"
#include "ordmatch/harness.hpp"
#include "ordmatch/instance.hpp"
#include "ordmatch/json_io.hpp"
#include "ordmatch/oracles.hpp"
#include "ordmatch/rng.hpp"

#ifndef ORDMATCH_BIN
#error "ORDMATCH_BIN must point at the command-line binary"
#endif

using namespace ordmatch;

namespace {

constexpr uint64_t kSeed = 20260819ull;
constexpr int64_t kTrials = 10000;

struct Outcome {
  bool pass = false;
  std::string detail;
};

// Every Monte-Carlo run feeds the information audit (checked as its own
// criterion at the end).
struct AuditRecord {
  std::string algorithm;
  double alpha;
  std::string instance;
  int64_t max;
  int64_t budget;
};
std::vector<AuditRecord> g_audit;

TrialReport checked_run(const Instance& inst, Algo algo, double alpha,
                        uint64_t seed) {
  auto r = run_trials(inst, algo, alpha, kTrials, seed);
  g_audit.push_back({r.algorithm, r.alpha, r.instance_id, r.audit_max,
                     r.audit_budget});
  return r;
}

TrialReport checked_run(const Instance& inst, Model model, double alpha,
                        uint64_t seed) {
  auto r = run_trials(inst, model, alpha, kTrials, seed);
  g_audit.push_back({r.algorithm, r.alpha, r.instance_id, r.audit_max,
                     r.audit_budget});
  return r;
}

uint64_t child_seed(uint64_t salt, uint64_t index) {
  return Rng::mix(kSeed ^ Rng::mix(salt) ^ (index + 1));
}

// the same per-cell derivation the curve uses, so per-instance runs here
// reproduce curve cells exactly
uint64_t curve_cell_seed(uint64_t seed, size_t alpha_index, size_t inst_index) {
  return Rng::mix(seed ^ ((static_cast<uint64_t>(alpha_index) << 32) |
                          (inst_index + 1)));
}

// alternating distance-based and three-hop-capped instances
Instance metric_instance(uint64_t salt, int index, int n) {
  const uint64_t s = child_seed(salt, static_cast<uint64_t>(index));
  if (index % 2 == 0) return gen_euclidean(n, 2, s);
  return gen_metric_closure(n, s);
}

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof(buf), f, ap);
  va_end(ap);
  return buf;
}

// ---------------------------------------------------------------------
// 1. Full-budget dictatorship: every run on 200 distance instances and
//    200 capped instances (n = 20) passes against 1/(1 + sqrt(2)), and
//    the exact expectation clears the same fraction on 100 small
//    instances with no sampling slack.
Outcome one_sided_full_budget_bound() {
  const double bound = 1.0 / (1.0 + std::sqrt(2.0));
  int runs = 0, run_fails = 0, exact_fails = 0;
  for (int i = 0; i < 400; ++i) {
    Instance inst = (i < 200)
                        ? gen_euclidean(20, 2, child_seed(0x11, i))
                        : gen_metric_closure(20, child_seed(0x12, i));
    auto r = checked_run(inst, Algo::rsd, 1.0, child_seed(0x13, i));
    ++runs;
    const bool bound_ok = std::abs(r.theoretical_ratio - bound) <= 1e-9 &&
                          std::abs(r.theoretical_ratio - 0.414214) <= 5e-7;
    if (!r.pass || !bound_ok) ++run_fails;
  }
  for (int i = 0; i < 100; ++i) {
    const int n = 3 + i % 6;  // 3..8
    Instance inst = metric_instance(0x14, i, n);
    const double ratio = exact_rsd_expectation(inst, n) / opt_weight(inst);
    if (ratio + 1e-12 < bound) ++exact_fails;
  }
  return {run_fails == 0 && exact_fails == 0,
          fmt("%d/%d runs pass at bound %.6f; %d/100 exact expectations clear it",
              runs - run_fails, runs, bound, 100 - exact_fails)};
}

// ---------------------------------------------------------------------
// 2. Uniform random matching: the empirical mean tracks total/n within
//    four standard errors on 50 instances, and the exact ratio clears
//    1/3 on 100 small metric instances.
Outcome random_matching_closed_form() {
  int mean_fails = 0, exact_fails = 0;
  for (int i = 0; i < 50; ++i) {
    Instance inst = metric_instance(0x21, i, 20);
    auto r = checked_run(inst, Algo::random, 0.0, child_seed(0x22, i));
    const double closed = exact_random_expectation(inst);
    if (std::abs(r.mean_weight - closed) > 4.0 * r.std_err) ++mean_fails;
    if (!r.pass) ++mean_fails;
  }
  for (int i = 0; i < 100; ++i) {
    const int n = 3 + i % 6;
    Instance inst = metric_instance(0x23, i, n);
    const double ratio = exact_random_expectation(inst) / opt_weight(inst);
    if (ratio + 1e-12 < 1.0 / 3.0) ++exact_fails;
  }
  return {mean_fails == 0 && exact_fails == 0,
          fmt("50 means within 4 std errs (%d off); %d/100 exact ratios >= 1/3",
              mean_fails, 100 - exact_fails)};
}

// ---------------------------------------------------------------------
// 3. One-sided budget sweep: alpha in {0, 1/4, 1/2, 3/4, 1} over 100
//    metric instances (n = 20); every cell passes and the bound column
//    is 1/(3 - (2 - sqrt(2)) alpha) to 1e-9.
Outcome one_sided_partial_budget_curve() {
  const std::vector<double> alphas = {0.0, 0.25, 0.5, 0.75, 1.0};
  std::vector<Instance> family;
  for (int i = 0; i < 100; ++i) family.push_back(metric_instance(0x31, i, 20));
  int cells = 0, fails = 0, bound_fails = 0;
  for (size_t ai = 0; ai < alphas.size(); ++ai) {
    const double formula = 1.0 / (3.0 - (2.0 - std::sqrt(2.0)) * alphas[ai]);
    if (std::abs(theoretical_bound(Model::one_sided, alphas[ai]) - formula) >
        1e-9)
      ++bound_fails;
    for (size_t ii = 0; ii < family.size(); ++ii) {
      auto r = checked_run(family[ii], Model::one_sided, alphas[ai],
                           curve_cell_seed(kSeed ^ 0x32, ai, ii));
      ++cells;
      if (!r.pass || std::abs(r.theoretical_ratio - formula) > 1e-9) ++fails;
    }
  }
  return {fails == 0 && bound_fails == 0,
          fmt("%d/%d cells pass over 5 budgets; bound column matches to 1e-9",
              cells - fails, cells)};
}

// ---------------------------------------------------------------------
// 4. Two-sided mixed regime at alpha in {1/2, 5/8, 3/4} against
//    (2a^2 - 3a + 3)/((3 - 2a)(3 - a)); at 3/4 the bound is 1/1.8.
Outcome two_sided_mixed_regime() {
  const std::vector<double> alphas = {0.5, 0.625, 0.75};
  std::vector<Instance> family;
  for (int i = 0; i < 40; ++i) family.push_back(metric_instance(0x41, i, 20));
  int cells = 0, fails = 0;
  bool bounds_ok = true;
  for (size_t ai = 0; ai < alphas.size(); ++ai) {
    const double a = alphas[ai];
    const double formula =
        (2.0 * a * a - 3.0 * a + 3.0) / ((3.0 - 2.0 * a) * (3.0 - a));
    for (size_t ii = 0; ii < family.size(); ++ii) {
      auto r = checked_run(family[ii], Algo::two_sided_mixed, a,
                           curve_cell_seed(kSeed ^ 0x42, ai, ii));
      ++cells;
      if (!r.pass || std::abs(r.theoretical_ratio - formula) > 1e-9) ++fails;
    }
  }
  if (std::abs(theoretical_bound(Model::two_sided, 0.75) - 1.0 / 1.8) > 1e-9)
    bounds_ok = false;
  return {fails == 0 && bounds_ok,
          fmt("%d/%d cells pass; bound at 3/4 equals 1/1.8", cells - fails,
              cells)};
}

// ---------------------------------------------------------------------
// 5. Two-sided low regime at alpha in {0, 1/4, 1/2} against 1/(3 - a).
Outcome two_sided_low_regime() {
  const std::vector<double> alphas = {0.0, 0.25, 0.5};
  std::vector<Instance> family;
  for (int i = 0; i < 40; ++i) family.push_back(metric_instance(0x51, i, 20));
  int cells = 0, fails = 0;
  for (size_t ai = 0; ai < alphas.size(); ++ai) {
    const double formula = 1.0 / (3.0 - alphas[ai]);
    for (size_t ii = 0; ii < family.size(); ++ii) {
      auto r = checked_run(family[ii], Algo::two_sided_low_alpha, alphas[ai],
                           curve_cell_seed(kSeed ^ 0x52, ai, ii));
      ++cells;
      if (!r.pass || std::abs(r.theoretical_ratio - formula) > 1e-9) ++fails;
    }
  }
  return {fails == 0, fmt("%d/%d cells pass against 1/(3 - alpha)",
                          cells - fails, cells)};
}

// ---------------------------------------------------------------------
// 6. Total-order sweep at alpha in {0, 1/4, 1/2, 3/4} against
//    (2 - sqrt(1 - a))/(2 + sqrt(1 - a)); at 3/4 the bound is exactly 0.6.
Outcome total_order_curve() {
  const std::vector<double> alphas = {0.0, 0.25, 0.5, 0.75};
  std::vector<Instance> family;
  for (int i = 0; i < 40; ++i) family.push_back(metric_instance(0x61, i, 20));
  int cells = 0, fails = 0;
  for (size_t ai = 0; ai < alphas.size(); ++ai) {
    const double s = std::sqrt(1.0 - alphas[ai]);
    const double formula = (2.0 - s) / (2.0 + s);
    for (size_t ii = 0; ii < family.size(); ++ii) {
      auto r = checked_run(family[ii], Algo::total_order, alphas[ai],
                           curve_cell_seed(kSeed ^ 0x62, ai, ii));
      ++cells;
      if (!r.pass || std::abs(r.theoretical_ratio - formula) > 1e-9) ++fails;
    }
  }
  const bool sixty =
      std::abs(theoretical_bound(Model::total_order, 0.75) - 0.6) <= 1e-9;
  return {fails == 0 && sixty,
          fmt("%d/%d cells pass; bound at 3/4 is 0.6", cells - fails, cells)};
}

// ---------------------------------------------------------------------
// 7. Bounded weight spread without a metric: full dictatorship against
//    1/(sqrt(beta - 3/4) + 1/2) for beta in {1, 2, 4}; beta = 1 forces
//    ratio exactly 1.
Outcome bounded_spread_no_metric() {
  int fails = 0;
  bool beta1_exact = true;
  for (double beta : {1.0, 2.0, 4.0}) {
    const double formula = 1.0 / (std::sqrt(beta - 0.75) + 0.5);
    for (int i = 0; i < 25; ++i) {
      Instance inst =
          gen_beta_bounded(16, beta, child_seed(0x71, i * 8 + (int)beta));
      auto r = checked_run(inst, Algo::rsd, 1.0,
                           child_seed(0x72, i * 8 + (int)beta));
      // the stated guarantee for the nominal spread, with sampling slack
      if (r.mean_weight < r.opt_weight * formula - 3.0 * r.std_err) ++fails;
      if (!r.pass) ++fails;
      if (beta == 1.0 && std::abs(r.empirical_ratio - 1.0) > 1e-12)
        beta1_exact = false;
    }
  }
  return {fails == 0 && beta1_exact,
          fmt("75 runs clear the spread bound (%d off); flat spread gives "
              "ratio 1 exactly",
              fails)};
}

// ---------------------------------------------------------------------
// 8. Single-heavy-edge family: optimum is N + 2 for N in 2..64; the
//    exact dictatorship expectation at N = 3 is 11/3 to 1e-12, with a
//    brute-force enumeration over all dictator orders as the oracle.
Outcome single_heavy_edge_family() {
  for (int n = 2; n <= 64; ++n) {
    if (std::abs(opt_weight(gen_figure2(n)) - (n + 2.0)) > 1e-9)
      return {false, fmt("optimum at n=%d is not n + 2", n)};
  }
  // order enumeration, independent of the subset dynamic program
  auto fig = gen_figure2(3);
  std::vector<int> order = {0, 1, 2};
  double acc = 0;
  int perms = 0;
  do {
    std::vector<char> ym(3, 0);
    double w = 0;
    for (int x : order) {
      int best = -1;
      double bw = -1;
      for (int y = 0; y < 3; ++y)
        if (!ym[y] && fig.at(x, y) > bw) {
          bw = fig.at(x, y);
          best = y;
        }
      ym[best] = 1;
      w += bw;
    }
    acc += w;
    ++perms;
  } while (std::next_permutation(order.begin(), order.end()));
  const double enumerated = acc / perms;
  const double dp = exact_rsd_expectation(fig, 3);
  const bool ok = std::abs(enumerated - 11.0 / 3.0) <= 1e-12 &&
                  std::abs(dp - 11.0 / 3.0) <= 1e-12;
  return {ok, fmt("optimum n + 2 for n in 2..64; order enumeration %.12f and "
                  "subset program %.12f both equal 11/3",
                  enumerated, dp)};
}

// ---------------------------------------------------------------------
// 9. Lower-bound constructions: best mix on the indistinguishable pair
//    is p* = 1/2 with factor 4/3 (to 1e-3); the one-sided family at
//    n = 1000, nu = (sqrt(5) - 1)/2 yields factor 1.618 (to 0.01).
Outcome lower_bound_constructions() {
  auto mix = lb_two_sided_optimal_mix(1e-6);
  const double nu = (std::sqrt(5.0) - 1.0) / 2.0;
  const double one = lb_one_sided_ratio(1000, nu);
  const bool ok = std::abs(mix.p_star - 0.5) <= 1e-3 &&
                  std::abs(mix.factor - 4.0 / 3.0) <= 1e-3 &&
                  std::abs(one - 1.618) <= 0.01;
  return {ok, fmt("p* = %.4f, factor = %.6f; one-sided factor = %.6f",
                  mix.p_star, mix.factor, one)};
}

// ---------------------------------------------------------------------
// 10. Structural property suite: five spot-checks, 100 instances each.
Outcome structural_property_suite() {
  auto ledger = lemma_property_suite(kSeed, 100);
  std::string names;
  int fails = 0;
  for (const auto& c : ledger.checks) {
    if (!c.pass) {
      ++fails;
      names += (names.empty() ? "" : ", ") + c.name;
    }
  }
  if (ledger.checks.size() != 5) return {false, "expected five checks"};
  return {ledger.all_pass && fails == 0,
          ledger.all_pass ? "5/5 checks pass on 100 instances each"
                          : fmt("failing: %s", names.c_str())};
}

// ---------------------------------------------------------------------
// 11. Oracle cross-validation: the assignment solver agrees with
//     exhaustive search on 200 small instances to 1e-9.
Outcome oracle_cross_validation() {
  int fails = 0;
  for (int i = 0; i < 200; ++i) {
    const int n = 2 + i % 7;  // 2..8
    const uint64_t s = child_seed(0xb1, i);
    Instance inst = (i % 3 == 0)   ? gen_beta_bounded(n, 4.0, s)
                    : (i % 3 == 1) ? gen_euclidean(n, 2, s)
                                   : gen_metric_closure(n, s);
    const double exact = matching_weight(inst, brute_force_opt(inst));
    if (std::abs(opt_weight(inst) - exact) > 1e-9) ++fails;
  }
  return {fails == 0, fmt("200/200 agreements within 1e-9 (%d off)", fails)};
}

// ---------------------------------------------------------------------
// 12. Information audit: across every Monte-Carlo run above, the deepest
//     answered query stays inside the budget. The ledger is written next
//     to the binary's working directory and must carry zero violations.
Outcome information_audit_ledger() {
  int64_t violations = 0;
  for (const auto& rec : g_audit)
    if (rec.max > rec.budget - 1) ++violations;
  nlohmann::ordered_json doc;
  doc["runs"] = static_cast<int64_t>(g_audit.size());
  doc["violations"] = violations;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& rec : g_audit) {
    if (rec.max <= rec.budget - 1) continue;  // ledger lists offenders only
    rows.push_back({{"algorithm", rec.algorithm},
                    {"alpha", rec.alpha},
                    {"instance", rec.instance},
                    {"max", rec.max},
                    {"budget", rec.budget}});
  }
  doc["offending_runs"] = rows;
  std::ofstream out("acceptance_audit_ledger.json", std::ios::binary);
  if (out) out << doc.dump(2) << "\n";
  return {violations == 0 && !g_audit.empty(),
          fmt("%zu audited runs, %lld violations (ledger: "
              "acceptance_audit_ledger.json)",
              g_audit.size(), static_cast<long long>(violations))};
}

// ---------------------------------------------------------------------
// 13. Determinism: the trade-off curve is byte-identical across repeat
//     runs and across thread counts, through the library and through the
//     command line.
Outcome determinism_across_threads() {
  std::vector<GenSpec> family;
  for (int i = 0; i < 6; ++i) {
    GenSpec spec;
    spec.kind = "euclidean";
    spec.n = 12;
    spec.seed = child_seed(0xd1, i);
    family.push_back(spec);
  }
  const std::vector<double> grid = {0.0, 0.5, 1.0};
  RunOptions one;
  one.threads = 1;
  RunOptions eight;
  eight.threads = 8;
  auto a = curve_to_csv(tradeoff_curve(family, Model::one_sided, grid, 2000,
                                       kSeed, one));
  auto b = curve_to_csv(tradeoff_curve(family, Model::one_sided, grid, 2000,
                                       kSeed, eight));
  auto c = curve_to_csv(tradeoff_curve(family, Model::one_sided, grid, 2000,
                                       kSeed, one));
  const bool lib_ok = a == b && a == c;

  namespace fs = std::filesystem;
  auto dir = fs::temp_directory_path() / "ordmatch-acceptance";
  fs::create_directories(dir);
  auto f1 = dir / "curve-t1.csv";
  auto f2 = dir / "curve-t8.csv";
  auto f3 = dir / "curve-t1-again.csv";
  const std::string base =
      std::string(ORDMATCH_BIN) +
      " curve --alg rsd-partial --kind euclidean --n 10 --instances 4"
      " --alpha-grid 0,0.5,1 --trials 500 --seed 123";
  auto shell = [](const std::string& cmd) {
    int rc = std::system((cmd + " >/dev/null 2>&1").c_str());
    return rc != -1 && WIFEXITED(rc) && WEXITSTATUS(rc) == 0;
  };
  bool cli_ok = shell(base + " --threads 1 --out " + f1.string()) &&
                shell(base + " --threads 8 --out " + f2.string()) &&
                shell(base + " --threads 1 --out " + f3.string());
  if (cli_ok) {
    auto slurp = [](const fs::path& p) {
      std::ifstream in(p, std::ios::binary);
      std::ostringstream ss;
      ss << in.rdbuf();
      return ss.str();
    };
    auto s1 = slurp(f1), s2 = slurp(f2), s3 = slurp(f3);
    cli_ok = !s1.empty() && s1 == s2 && s1 == s3;
  }
  return {lib_ok && cli_ok,
          fmt("library CSV identical across reruns and 1 vs 8 threads: %s; "
              "command line: %s",
              lib_ok ? "yes" : "NO", cli_ok ? "yes" : "NO")};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> fn;
  };
  const std::vector<Criterion> criteria = {
      {"one-sided-full-budget-bound", one_sided_full_budget_bound},
      {"random-matching-closed-form", random_matching_closed_form},
      {"one-sided-partial-budget-curve", one_sided_partial_budget_curve},
      {"two-sided-mixed-regime", two_sided_mixed_regime},
      {"two-sided-low-regime", two_sided_low_regime},
      {"total-order-curve", total_order_curve},
      {"bounded-spread-no-metric", bounded_spread_no_metric},
      {"single-heavy-edge-family", single_heavy_edge_family},
      {"lower-bound-constructions", lower_bound_constructions},
      {"structural-property-suite", structural_property_suite},
      {"oracle-cross-validation", oracle_cross_validation},
      {"information-audit-ledger", information_audit_ledger},
      {"determinism-across-threads", determinism_across_threads},
  };

  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[i].fn();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (!out.pass) ++failed;
    std::printf("criterion %2zu/13 %-32s %s  (%.1fs)  %s\n", i + 1,
                criteria[i].name, out.pass ? "PASS" : "FAIL", secs,
                out.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("acceptance: %zu/13 criteria pass\n", criteria.size() - failed);
  return failed == 0 ? 0 : 1;
}
