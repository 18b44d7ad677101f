#ifndef ORDMATCH_HARNESS_HPP
#define ORDMATCH_HARNESS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ordmatch/generators.hpp"
#include "ordmatch/instance.hpp"

namespace ordmatch {

enum class Model { one_sided, two_sided, total_order };

// Algorithm selector for trial runs. The two-sided entries exist
// separately from the dispatching facade so each regime can be measured
// against its own guarantee.
enum class Algo {
  random,
  rsd,
  rsd_partial,
  two_sided,            // facade: dispatches on alpha
  two_sided_low_alpha,  // alpha <= 1/2 regime, forced
  two_sided_mixed,      // alpha >= 1/2 regime, forced
  total_order,
};

std::string to_string(Model m);
std::string to_string(Algo a);
Model model_of(Algo a);

// Guaranteed fraction of the optimum for a model at information budget
// alpha on metric instances. With `beta` set (one-sided model, full
// budget) the guarantee for weights bounded in [m, beta*m] is returned
// instead and no metric assumption is made.
double theoretical_bound(Model model, double alpha,
                         std::optional<double> beta = std::nullopt);

// One Monte-Carlo verification run: `trials` independent executions of
// one algorithm on one instance, measured against the exact optimum.
struct TrialReport {
  std::string algorithm;
  Model model = Model::one_sided;
  double alpha = 0;
  std::string instance_id;
  int64_t trials = 0;
  double mean_weight = 0;
  double std_err = 0;
  double opt_weight = 0;
  double empirical_ratio = 0;
  double theoretical_ratio = 0;
  bool pass = false;
  // Information-budget audit: the deepest query the algorithm made vs
  // what the view would have allowed.
  int64_t audit_max = -1;
  int64_t audit_budget = 0;
};

struct RunOptions {
  int threads = 0;  // 0: library default
};

TrialReport run_trials(const Instance& inst, Algo algo, double alpha,
                       int64_t trials, uint64_t seed,
                       const RunOptions& opts = {});

// Model-level entry point: dispatches one-sided to rsd_partial (rsd at
// alpha = 1, random at alpha = 0), two-sided to the facade, total-order
// to the mixed algorithm.
TrialReport run_trials(const Instance& inst, Model model, double alpha,
                       int64_t trials, uint64_t seed,
                       const RunOptions& opts = {});

// Plain loop without any parallel machinery; the reference the threaded
// path is checked against (reports must be bit-identical).
TrialReport run_trials_serial(const Instance& inst, Algo algo, double alpha,
                              int64_t trials, uint64_t seed);

std::string trial_report_to_json(const TrialReport& r);

// One point of an information/quality trade-off curve: an alpha value,
// the bound at that alpha, and the mean empirical ratio over a family.
struct CurvePoint {
  Model model = Model::one_sided;
  double alpha = 0;
  double empirical_ratio = 0;
  double theoretical_bound = 0;
  double std_err = 0;
  int64_t trials = 0;
  int64_t instances = 0;
  bool all_pass = true;  // conjunction of the per-instance pass flags
};

std::vector<CurvePoint> tradeoff_curve(const std::vector<GenSpec>& family,
                                       Model model,
                                       const std::vector<double>& alpha_grid,
                                       int64_t trials, uint64_t seed,
                                       const RunOptions& opts = {});

std::vector<CurvePoint> tradeoff_curve(const std::vector<Instance>& family,
                                       Model model,
                                       const std::vector<double>& alpha_grid,
                                       int64_t trials, uint64_t seed,
                                       const RunOptions& opts = {});

// Fixed column order; byte-identical for identical inputs regardless of
// thread count.
std::string curve_to_csv(const std::vector<CurvePoint>& points);

// Best mixing weight between the two deterministic-preference matchings
// on the lower-bound instance pair: maximizes the worse of the two
// approximation ratios. Returns the optimal probability of the
// high-diagonal matching and the resulting worst-case factor (>= 1).
struct MixLowerBound {
  double p_star = 0;
  double factor = 0;
};
MixLowerBound lb_two_sided_optimal_mix(double eps);

// Optimum-to-random-expectation ratio of the one-sided lower-bound
// family, in closed form.
double lb_one_sided_ratio(int n, double nu);

// Numeric spot-checks of the structural facts the guarantees lean on.
// Each check samples >= `instances` random instances and records any
// counterexample.
struct PropertyCheck {
  std::string name;
  int64_t instances = 0;
  int64_t failures = 0;
  bool pass = true;
  std::string counterexample;  // empty when pass
};
struct PropertyLedger {
  std::vector<PropertyCheck> checks;
  bool all_pass = true;
};
PropertyLedger lemma_property_suite(uint64_t seed, int64_t instances = 100);

std::string property_ledger_to_json(const PropertyLedger& ledger);

}  // namespace ordmatch

#endif
