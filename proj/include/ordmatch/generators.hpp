#ifndef ORDMATCH_GENERATORS_HPP
#define ORDMATCH_GENERATORS_HPP

#include <cstdint>
#include <string>

#include "ordmatch/instance.hpp"

namespace ordmatch {

// Instance families used by the verification harness. Every generator is
// a pure function of its arguments: same spec + seed, same instance.

// Distances between n random X points and n random Y points drawn
// uniformly from [0,1]^dim. Satisfies the relaxed triangle inequality.
Instance gen_euclidean(int n, int dim, uint64_t seed);

// One heavy edge: w(x0,y0) = 3, every other weight 1. The optimum is
// n + 2 while every x ranks y0 first, which is what makes dictatorship
// order matter.
Instance gen_figure2(int n);

// The 2x2 pair used by the two-sided lower-bound argument. Both
// instances induce identical preference orders on both sides, yet their
// optima disagree about which diagonal to take.
//   W1: w(ac) = w(bd) = 1+eps, w(bc) = 3,   w(ad) = 1     (opt 4)
//   W2: w(ac) = w(bd) = 1-eps, w(bc) = 1,   w(ad) = eps   (opt 2-2eps)
// Requires 0 < eps < 1/3 so the orders and optima are strict.
Instance gen_lb_two_sided_w1(double eps);
Instance gen_lb_two_sided_w2(double eps);

// One-sided lower-bound family: rows i < floor(nu*n) have weight 3 on
// columns j <= i and 1 elsewhere; all later rows are all-ones. Optimum
// (2nu+1)*n at integral nu*n; a random matching only reaches
// (nu*(1/n+nu)+1)*n in expectation.
Instance gen_lb_one_sided(int n, double nu);

// Independent weights uniform on [1, beta]; bounded spread, generally
// not metric.
Instance gen_beta_bounded(int n, double beta, uint64_t seed);

// Random positive weights repaired into a metric by iteratively capping
// each entry at its cheapest three-hop detour until a fixpoint.
Instance gen_metric_closure(int n, uint64_t seed);

// Parsed generator request (mirrors the CLI flags).
struct GenSpec {
  std::string kind;  // euclidean | metric-closure | figure2 | lb-two-sided
                     // | lb-one-sided | beta-bounded
  int n = 0;
  int dim = 2;
  double nu = 0.5;
  double eps = 1e-6;
  double beta = 2.0;
  uint64_t seed = 0;
  std::string variant;  // lb-two-sided: "w1" (default) or "w2"
};

Instance generate(const GenSpec& spec);

}  // namespace ordmatch

#endif
