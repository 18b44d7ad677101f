#include "ordmatch/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>

#ifdef ORDMATCH_HAVE_OPENMP
#include <omp.h>
#endif

#include <json.hpp>

#include "ordmatch/algorithms.hpp"
#include "ordmatch/errors.hpp"
#include "ordmatch/json_io.hpp"
#include "ordmatch/log.hpp"
#include "ordmatch/oracles.hpp"
#include "ordmatch/rng.hpp"

namespace ordmatch {

using nlohmann::ordered_json;

std::string to_string(Model m) {
  switch (m) {
    case Model::one_sided: return "one-sided";
    case Model::two_sided: return "two-sided";
    case Model::total_order: return "total-order";
  }
  return "?";
}

std::string to_string(Algo a) {
  switch (a) {
    case Algo::random: return "random";
    case Algo::rsd: return "rsd";
    case Algo::rsd_partial: return "rsd-partial";
    case Algo::two_sided: return "two-sided";
    case Algo::two_sided_low_alpha: return "two-sided-low";
    case Algo::two_sided_mixed: return "two-sided-mix";
    case Algo::total_order: return "total-order";
  }
  return "?";
}

Model model_of(Algo a) {
  switch (a) {
    case Algo::random:
    case Algo::rsd:
    case Algo::rsd_partial:
      return Model::one_sided;
    case Algo::two_sided:
    case Algo::two_sided_low_alpha:
    case Algo::two_sided_mixed:
      return Model::two_sided;
    case Algo::total_order:
      return Model::total_order;
  }
  return Model::one_sided;
}

double theoretical_bound(Model model, double alpha, std::optional<double> beta) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw ValidationError("theoretical_bound: alpha must lie in [0, 1]");
  if (beta.has_value()) {
    // Bounded weight spread instead of a metric: guarantee for the full
    // dictatorship only.
    if (model != Model::one_sided || alpha != 1.0)
      throw ValidationError(
          "theoretical_bound: beta form applies to the one-sided model at alpha = 1");
    if (*beta < 1.0) throw ValidationError("theoretical_bound: beta must be >= 1");
    return 1.0 / (std::sqrt(*beta - 0.75) + 0.5);
  }
  switch (model) {
    case Model::one_sided:
      return 1.0 / (3.0 - (2.0 - std::sqrt(2.0)) * alpha);
    case Model::two_sided: {
      if (alpha < 0.5) return 1.0 / (3.0 - alpha);
      const double a = std::min(alpha, 0.75);
      return (2.0 * a * a - 3.0 * a + 3.0) / ((3.0 - 2.0 * a) * (3.0 - a));
    }
    case Model::total_order: {
      const double s = std::sqrt(1.0 - std::min(alpha, 0.75));
      return (2.0 - s) / (2.0 + s);
    }
  }
  throw ValidationError("theoretical_bound: unknown model");
}

namespace {

// Guarantee matched to the algorithm actually being run. Non-metric
// instances carry no guarantee except the bounded-spread dictatorship
// case; those runs report a zero bound and pass vacuously.
double bound_for(Algo algo, double alpha, bool metric, std::optional<double> beta) {
  if (!metric) {
    if ((algo == Algo::rsd || algo == Algo::rsd_partial) && alpha == 1.0 &&
        beta.has_value())
      return theoretical_bound(Model::one_sided, 1.0, beta);
    return 0.0;
  }
  switch (algo) {
    case Algo::random: return theoretical_bound(Model::one_sided, 0.0);
    case Algo::rsd: return theoretical_bound(Model::one_sided, 1.0);
    case Algo::rsd_partial: return theoretical_bound(Model::one_sided, alpha);
    case Algo::two_sided: return theoretical_bound(Model::two_sided, alpha);
    case Algo::two_sided_low_alpha: return 1.0 / (3.0 - std::min(alpha, 0.5));
    case Algo::two_sided_mixed: {
      const double a = std::min(std::max(alpha, 0.5), 0.75);
      return (2.0 * a * a - 3.0 * a + 3.0) / ((3.0 - 2.0 * a) * (3.0 - a));
    }
    case Algo::total_order: return theoretical_bound(Model::total_order, alpha);
  }
  return 0.0;
}

struct NeumaierSum {
  double s = 0, c = 0;
  void add(double v) {
    double t = s + v;
    if (std::abs(s) >= std::abs(v))
      c += (s - t) + v;
    else
      c += (v - t) + s;
    s = t;
  }
  double value() const { return s + c; }
};

// Everything derived once per run and shared read-only across trials.
struct TrialContext {
  const Instance& inst;
  Algo algo;
  double alpha;
  std::optional<OneSidedView> one;
  std::optional<TwoSidedView> two;
  std::optional<TotalOrderView> total;

  TrialContext(const Instance& inst_, Algo algo_, double alpha_)
      : inst(inst_), algo(algo_), alpha(alpha_) {
    switch (algo) {
      case Algo::random:
        break;
      case Algo::rsd:
      case Algo::rsd_partial:
        one.emplace(OneSidedView::derive(inst, alpha));
        break;
      case Algo::two_sided:
      case Algo::two_sided_low_alpha:
      case Algo::two_sided_mixed:
        two.emplace(TwoSidedView::derive(inst, alpha));
        break;
      case Algo::total_order:
        total.emplace(TotalOrderView::derive(inst, alpha));
        break;
    }
  }

  Matching run(Rng& rng) const {
    switch (algo) {
      case Algo::random: return random_matching(inst.n, rng);
      case Algo::rsd: return rsd(*one, rng);
      case Algo::rsd_partial: return rsd_partial(*one, rng);
      case Algo::two_sided: return two_sided(*two, rng);
      case Algo::two_sided_low_alpha: return two_sided_low_alpha(*two, rng);
      case Algo::two_sided_mixed: return two_sided_mixed(*two, rng);
      case Algo::total_order: return total_order_mixed(*total, rng);
    }
    throw ValidationError("run_trials: unknown algorithm");
  }

  int64_t audit_budget() const {
    if (one) return one->depth();
    if (two) return two->depth();
    if (total) return static_cast<int64_t>(total->prefix_len());
    return 0;
  }

  int64_t audit_max() const {
    if (one) return one->audit_max_rank();
    if (two) return two->audit_max_rank();
    if (total) return total->audit_max_pos();
    return -1;
  }
};

double one_trial(const TrialContext& ctx, uint64_t seed, int64_t t) {
  // The stream id folds the seed in with the trial index, so the weight
  // of trial t does not depend on which thread computes it.
  Rng rng(seed, seed ^ static_cast<uint64_t>(t));
  Matching m = ctx.run(rng);
  if (!m.perfect())
    throw ValidationError("run_trials: algorithm returned a non-perfect matching");
  return matching_weight(ctx.inst, m);
}

void fill_weights_serial(const TrialContext& ctx, uint64_t seed,
                         std::vector<double>& weights) {
  for (int64_t t = 0; t < static_cast<int64_t>(weights.size()); ++t)
    weights[t] = one_trial(ctx, seed, t);
}

void fill_weights_parallel(const TrialContext& ctx, uint64_t seed,
                           std::vector<double>& weights, int threads) {
#ifdef ORDMATCH_HAVE_OPENMP
  const auto count = static_cast<int64_t>(weights.size());
  std::string first_error;
  bool failed = false;
#pragma omp parallel for schedule(static) num_threads(threads)
  for (int64_t t = 0; t < count; ++t) {
    try {
      weights[t] = one_trial(ctx, seed, t);
    } catch (const std::exception& e) {
      // Exceptions must not unwind out of the parallel region.
#pragma omp critical
      {
        if (!failed) {
          failed = true;
          first_error = e.what();
        }
      }
    }
  }
  if (failed) throw ValidationError(first_error);
#else
  (void)threads;
  fill_weights_serial(ctx, seed, weights);
#endif
}

TrialReport finish_report(const TrialContext& ctx, int64_t trials,
                          const std::vector<double>& weights) {
  NeumaierSum sum;
  for (double w : weights) sum.add(w);
  const double mean = sum.value() / trials;
  NeumaierSum sq;
  for (double w : weights) sq.add((w - mean) * (w - mean));
  const double sample_var = trials > 1 ? sq.value() / (trials - 1) : 0.0;
  const double std_err = std::sqrt(sample_var / trials);

  const bool metric = check_metric(ctx.inst);
  const std::optional<double> beta = metric ? std::nullopt : beta_ratio(ctx.inst);

  TrialReport r;
  r.algorithm = to_string(ctx.algo);
  r.model = model_of(ctx.algo);
  r.alpha = ctx.alpha;
  r.instance_id = ctx.inst.id();
  r.trials = trials;
  r.mean_weight = mean;
  r.std_err = std_err;
  r.opt_weight = opt_weight(ctx.inst);
  r.empirical_ratio = mean / r.opt_weight;
  r.theoretical_ratio = bound_for(ctx.algo, ctx.alpha, metric, beta);
  r.pass = mean >= r.opt_weight * r.theoretical_ratio - 3.0 * std_err;
  r.audit_max = ctx.audit_max();
  r.audit_budget = ctx.audit_budget();
  return r;
}

TrialReport run_trials_impl(const Instance& inst, Algo algo, double alpha,
                            int64_t trials, uint64_t seed, int threads) {
  if (trials < 2) throw ValidationError("run_trials: trials must be >= 2");
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw ValidationError("run_trials: alpha must lie in [0, 1]");
  TrialContext ctx(inst, algo, alpha);
  std::vector<double> weights(static_cast<size_t>(trials));
  int nt = threads;
#ifdef ORDMATCH_HAVE_OPENMP
  if (nt <= 0) nt = omp_get_max_threads();
#else
  if (nt <= 0) nt = 1;
#endif
  if (nt == 1)
    fill_weights_serial(ctx, seed, weights);
  else
    fill_weights_parallel(ctx, seed, weights, nt);
  auto report = finish_report(ctx, trials, weights);
  log_debug("run_trials: %s alpha=%g inst=%s mean=%.6f ratio=%.4f bound=%.4f",
            report.algorithm.c_str(), report.alpha, report.instance_id.c_str(),
            report.mean_weight, report.empirical_ratio, report.theoretical_ratio);
  return report;
}

Algo model_facade(Model model, double alpha) {
  switch (model) {
    case Model::one_sided:
      return alpha == 1.0 ? Algo::rsd
                          : (alpha == 0.0 ? Algo::random : Algo::rsd_partial);
    case Model::two_sided:
      return Algo::two_sided;
    case Model::total_order:
      return Algo::total_order;
  }
  return Algo::random;
}

}  // namespace

TrialReport run_trials(const Instance& inst, Algo algo, double alpha,
                       int64_t trials, uint64_t seed, const RunOptions& opts) {
  return run_trials_impl(inst, algo, alpha, trials, seed, opts.threads);
}

TrialReport run_trials(const Instance& inst, Model model, double alpha,
                       int64_t trials, uint64_t seed, const RunOptions& opts) {
  Algo algo = model_facade(model, alpha);
  auto r = run_trials_impl(inst, algo, alpha, trials, seed, opts.threads);
  // A random run is still a one-sided run at zero budget; rsd_partial at
  // alpha = 0 draws identically, so the label is the only difference.
  return r;
}

TrialReport run_trials_serial(const Instance& inst, Algo algo, double alpha,
                              int64_t trials, uint64_t seed) {
  return run_trials_impl(inst, algo, alpha, trials, seed, 1);
}

std::string trial_report_to_json(const TrialReport& r) {
  ordered_json doc;
  doc["algorithm"] = r.algorithm;
  doc["model"] = to_string(r.model);
  doc["alpha"] = r.alpha;
  doc["instance"] = r.instance_id;
  doc["trials"] = r.trials;
  doc["mean_weight"] = r.mean_weight;
  doc["std_err"] = r.std_err;
  doc["opt_weight"] = r.opt_weight;
  doc["empirical_ratio"] = r.empirical_ratio;
  doc["theoretical_ratio"] = r.theoretical_ratio;
  // The factor form (>= 1) of the same guarantee, to keep both readings
  // of "c-approximation" unambiguous.
  doc["theoretical_factor"] =
      r.theoretical_ratio > 0 ? 1.0 / r.theoretical_ratio : 0.0;
  doc["pass"] = r.pass;
  doc["audit"] = {{"max", r.audit_max}, {"budget", r.audit_budget}};
  return doc.dump(2) + "\n";
}

std::vector<CurvePoint> tradeoff_curve(const std::vector<GenSpec>& family,
                                       Model model,
                                       const std::vector<double>& alpha_grid,
                                       int64_t trials, uint64_t seed,
                                       const RunOptions& opts) {
  std::vector<Instance> instances;
  instances.reserve(family.size());
  for (const auto& spec : family) instances.push_back(generate(spec));
  return tradeoff_curve(instances, model, alpha_grid, trials, seed, opts);
}

std::vector<CurvePoint> tradeoff_curve(const std::vector<Instance>& instances,
                                       Model model,
                                       const std::vector<double>& alpha_grid,
                                       int64_t trials, uint64_t seed,
                                       const RunOptions& opts) {
  if (instances.empty()) throw ValidationError("tradeoff_curve: empty family");
  std::vector<CurvePoint> points;
  points.reserve(alpha_grid.size());
  for (size_t ai = 0; ai < alpha_grid.size(); ++ai) {
    const double alpha = alpha_grid[ai];
    CurvePoint pt;
    pt.model = model;
    pt.alpha = alpha;
    pt.trials = trials;
    pt.instances = static_cast<int64_t>(instances.size());
    pt.theoretical_bound = theoretical_bound(model, alpha);
    NeumaierSum ratio_sum;
    double var_sum = 0;
    for (size_t ii = 0; ii < instances.size(); ++ii) {
      // Every (alpha, instance) cell owns a child seed, so any cell can
      // be recomputed in isolation.
      const uint64_t child =
          Rng::mix(seed ^ ((static_cast<uint64_t>(ai) << 32) | (ii + 1)));
      auto r = run_trials(instances[ii], model, alpha, trials, child, opts);
      ratio_sum.add(r.empirical_ratio);
      const double se_ratio = r.std_err / r.opt_weight;
      var_sum += se_ratio * se_ratio;
      pt.all_pass = pt.all_pass && r.pass;
    }
    pt.empirical_ratio = ratio_sum.value() / static_cast<double>(instances.size());
    pt.std_err = std::sqrt(var_sum) / static_cast<double>(instances.size());
    points.push_back(pt);
  }
  return points;
}

std::string curve_to_csv(const std::vector<CurvePoint>& points) {
  std::string out = "model,alpha,empirical_ratio,theoretical_bound,std_err,trials,instances\n";
  char buf[256];
  for (const auto& p : points) {
    std::snprintf(buf, sizeof(buf), "%s,%.10g,%.12g,%.12g,%.12g,%lld,%lld\n",
                  to_string(p.model).c_str(), p.alpha, p.empirical_ratio,
                  p.theoretical_bound, p.std_err,
                  static_cast<long long>(p.trials),
                  static_cast<long long>(p.instances));
    out += buf;
  }
  return out;
}

MixLowerBound lb_two_sided_optimal_mix(double eps) {
  const Instance w1 = gen_lb_two_sided_w1(eps);
  const Instance w2 = gen_lb_two_sided_w2(eps);
  // The two candidate perfect matchings every deterministic ordinal
  // algorithm must mix between: the cross diagonal (optimal on w1) and
  // the main diagonal (optimal on w2).
  Matching cross, diag;
  cross.n = diag.n = 2;
  cross.pairs = {{0, 1}, {1, 0}};
  diag.pairs = {{0, 0}, {1, 1}};
  const double opt1 = opt_weight(w1), opt2 = opt_weight(w2);
  const double cross1 = matching_weight(w1, cross), diag1 = matching_weight(w1, diag);
  const double cross2 = matching_weight(w2, cross), diag2 = matching_weight(w2, diag);

  // Play the cross matching with probability p on both instances; the
  // adversary shows whichever instance the mix serves worse. 1-D grid,
  // step 1e-4.
  MixLowerBound best;
  double best_min = -1.0;
  for (int i = 0; i <= 10000; ++i) {
    const double p = i * 1e-4;
    const double r1 = (p * cross1 + (1.0 - p) * diag1) / opt1;
    const double r2 = (p * cross2 + (1.0 - p) * diag2) / opt2;
    const double worst = std::min(r1, r2);
    if (worst > best_min) {
      best_min = worst;
      best.p_star = p;
    }
  }
  best.factor = 1.0 / best_min;
  return best;
}

double lb_one_sided_ratio(int n, double nu) {
  if (n < 1) throw ValidationError("lb_one_sided_ratio: n must be >= 1");
  if (!(nu >= 0 && nu <= 1))
    throw ValidationError("lb_one_sided_ratio: nu must lie in [0, 1]");
  return (2.0 * nu + 1.0) / (nu * (1.0 / n + nu) + 1.0);
}

namespace {

double residual_max_weight(const Instance& inst, const ResidualState& st) {
  double mx = 0;
  for (int x = 0; x < inst.n; ++x) {
    if (st.x_matched[x]) continue;
    for (int y = 0; y < inst.n; ++y) {
      if (st.y_matched[y]) continue;
      mx = std::max(mx, inst.at(x, y));
    }
  }
  return mx;
}

double block_sum(const Instance& inst, const std::vector<char>& in_x,
                 const std::vector<char>& in_y, bool want_x, bool want_y) {
  double s = 0;
  for (int x = 0; x < inst.n; ++x) {
    if (static_cast<bool>(in_x[x]) != want_x) continue;
    for (int y = 0; y < inst.n; ++y) {
      if (static_cast<bool>(in_y[y]) != want_y) continue;
      s += inst.at(x, y);
    }
  }
  return s;
}

}  // namespace

PropertyLedger lemma_property_suite(uint64_t seed, int64_t instances) {
  PropertyLedger ledger;
  const double kTol = 1e-9;

  auto metric_instance = [&](uint64_t salt, int64_t idx, int n_eu,
                             int n_mc) -> Instance {
    const uint64_t s = Rng::mix(seed ^ Rng::mix(salt + static_cast<uint64_t>(idx)));
    if (idx % 2 == 0) return gen_euclidean(n_eu, 2, s);
    return gen_metric_closure(n_mc, s);
  };

  auto record_failure = [](PropertyCheck& c, const Instance& inst,
                           const char* fmt, double got, double need) {
    ++c.failures;
    if (!c.counterexample.empty()) return;
    char buf[160];
    std::snprintf(buf, sizeof(buf), fmt, got, need);
    // Keep the full offending instance so the failure can be replayed.
    c.counterexample = inst.id() + ": " + buf + "\n" + instance_to_json(inst);
  };

  // (a) Every edge the greedy walk selects carries at least one third of
  // the heaviest edge still in the residual graph, on metric instances.
  {
    PropertyCheck c;
    c.name = "undominated-edge-vs-residual-max";
    c.instances = instances;
    for (int64_t i = 0; i < instances; ++i) {
      Instance inst = metric_instance(0xa1, i, 10, 8);
      auto view = TwoSidedView::derive(inst, 1.0);
      ResidualState st(inst.n);
      Rng rng(seed, 0xa100 + static_cast<uint64_t>(i));
      bool bad = false;
      for (int round = 0; round < inst.n && !bad; ++round) {
        const double residual_max = residual_max_weight(inst, st);
        std::vector<int> xs;
        for (int x = 0; x < inst.n; ++x)
          if (!st.x_matched[x]) xs.push_back(x);
        auto [a, b] = chain_walk(view, xs[rng.uniform_index(xs.size())], st);
        const double w = inst.at(a, b);
        if (3.0 * w + kTol * std::max(1.0, residual_max) < residual_max) {
          bad = true;
          record_failure(c, inst, "3*selected %.9g < residual max %.9g", 3 * w,
                         residual_max);
        }
        st.mark(a, b);
      }
    }
    c.pass = c.failures == 0;
    ledger.checks.push_back(std::move(c));
  }

  // (b) A k-round greedy matching keeps at least gamma/(3-2*gamma) of the
  // optimum for gamma = k/n, in the regime gamma <= 3/4 the mixed
  // algorithm uses.
  {
    PropertyCheck c;
    c.name = "greedy-k-share-of-opt";
    c.instances = instances;
    const double gammas[] = {0.25, 0.5, 0.625, 0.75};
    for (int64_t i = 0; i < instances; ++i) {
      Instance inst = metric_instance(0xb2, i, 12, 9);
      const double gamma = gammas[i % 4];
      const int k = static_cast<int>(budget_floor(gamma, inst.n));
      if (k < 1) continue;
      auto view = TwoSidedView::derive(inst, 1.0);
      Rng rng(seed, 0xb200 + static_cast<uint64_t>(i));
      const double w = matching_weight(inst, greedy_undominated_k(view, k, rng));
      const double geff = static_cast<double>(k) / inst.n;
      const double need = geff / (3.0 - 2.0 * geff) * opt_weight(inst);
      if (w + kTol * std::max(1.0, need) < need)
        record_failure(c, inst, "greedy weight %.9g < required %.9g", w, need);
    }
    c.pass = c.failures == 0;
    ledger.checks.push_back(std::move(c));
  }

  // (c) Submatrix bound: for any equal-size node subsets T, the optimum
  // is controlled by the T-block plus the two cross blocks.
  {
    PropertyCheck c;
    c.name = "subset-block-bound-on-opt";
    c.instances = instances;
    for (int64_t i = 0; i < instances; ++i) {
      Instance inst = metric_instance(0xc3, i, 10, 8);
      Rng rng(seed, 0xc300 + static_cast<uint64_t>(i));
      const int m = 1 + static_cast<int>(rng.uniform_index(inst.n));
      std::vector<int> xs(inst.n), ys(inst.n);
      for (int v = 0; v < inst.n; ++v) xs[v] = ys[v] = v;
      rng.shuffle(xs);
      rng.shuffle(ys);
      std::vector<char> in_x(inst.n, 0), in_y(inst.n, 0);
      for (int v = 0; v < m; ++v) {
        in_x[xs[v]] = 1;
        in_y[ys[v]] = 1;
      }
      const double w_tt = block_sum(inst, in_x, in_y, true, true);
      const double w_t_rest = block_sum(inst, in_x, in_y, true, false);
      const double w_rest_t = block_sum(inst, in_x, in_y, false, true);
      const double lhs = m * opt_weight(inst);
      const double rhs =
          (2.0 + static_cast<double>(inst.n) / m) * w_tt + w_t_rest + w_rest_t;
      if (lhs > rhs + kTol * std::max(1.0, lhs))
        record_failure(c, inst, "subset bound violated: %.9g > %.9g", lhs, rhs);
    }
    c.pass = c.failures == 0;
    ledger.checks.push_back(std::move(c));
  }

  // (d) The heaviest-edge-first greedy k-matching keeps at least k/n of
  // the optimum while k/n <= 1/2.
  {
    PropertyCheck c;
    c.name = "ordered-greedy-share-of-opt";
    c.instances = instances;
    const double gammas[] = {0.25, 0.5};
    for (int64_t i = 0; i < instances; ++i) {
      Instance inst = metric_instance(0xd4, i, 12, 9);
      const double gamma = gammas[i % 2];
      const int k = static_cast<int>(budget_floor(gamma, inst.n));
      if (k < 1) continue;
      auto view = TotalOrderView::derive(inst, 1.0);
      const double w = matching_weight(inst, greedy_total_order_k(view, k));
      const double need = static_cast<double>(k) / inst.n * opt_weight(inst);
      if (w + kTol * std::max(1.0, need) < need)
        record_failure(c, inst, "ordered greedy %.9g < required %.9g", w, need);
    }
    c.pass = c.failures == 0;
    ledger.checks.push_back(std::move(c));
  }

  // (e) Exact enumeration at small n: the expected weight picked in every
  // dictatorship round dominates the expected average edge weight of the
  // residual graph left after all rounds.
  {
    PropertyCheck c;
    c.name = "dictator-round-vs-residual-average";
    c.instances = instances;
    for (int64_t i = 0; i < instances; ++i) {
      const int n = 3 + static_cast<int>(i % 4);  // 3..6
      Instance inst = metric_instance(0xe5, i, n, n);
      const double alpha = (i % 2 == 0) ? 1.0 : 0.5;
      const int rounds = static_cast<int>(budget_floor(alpha, n));
      auto profile = exact_rsd_round_profile(inst, rounds);
      for (double round_w : profile.round_weight) {
        if (round_w + kTol * std::max(1.0, profile.residual_avg_edge) <
            profile.residual_avg_edge) {
          record_failure(c, inst, "round %.9g < residual average %.9g", round_w,
                         profile.residual_avg_edge);
          break;
        }
      }
    }
    c.pass = c.failures == 0;
    ledger.checks.push_back(std::move(c));
  }

  for (const auto& c : ledger.checks) ledger.all_pass = ledger.all_pass && c.pass;
  return ledger;
}

std::string property_ledger_to_json(const PropertyLedger& ledger) {
  ordered_json doc;
  auto checks = ordered_json::array();
  for (const auto& c : ledger.checks) {
    ordered_json jc;
    jc["name"] = c.name;
    jc["instances"] = c.instances;
    jc["failures"] = c.failures;
    jc["pass"] = c.pass;
    if (!c.counterexample.empty()) jc["counterexample"] = c.counterexample;
    checks.push_back(std::move(jc));
  }
  doc["checks"] = std::move(checks);
  doc["pass"] = ledger.all_pass;
  return doc.dump(2) + "\n";
}

}  // namespace ordmatch
