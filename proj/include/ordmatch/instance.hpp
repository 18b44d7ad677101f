#ifndef ORDMATCH_INSTANCE_HPP
#define ORDMATCH_INSTANCE_HPP

#include <optional>
#include <string>
#include <vector>

namespace ordmatch {

// A complete bipartite weight matrix between n "left" nodes (X side) and
// n "right" nodes (Y side). Weights are non-negative and finite; this is
// validated at construction. Derived facts (metric property, weight
// spread) are computed on demand, never trusted from input documents.
struct Instance {
  int n = 0;
  std::vector<double> weights;  // row-major, weights[x*n + y]
  std::string name;

  double at(int x, int y) const { return weights[static_cast<size_t>(x) * n + y]; }
  double& at(int x, int y) { return weights[static_cast<size_t>(x) * n + y]; }

  // Validates shape and entries; throws ValidationError.
  static Instance make(int n, std::vector<double> w, std::string name = "");

  double total_weight() const;
  double max_weight() const;
  double min_weight() const;

  // Stable identifier for reports: the name when present, otherwise a
  // short content digest.
  std::string id() const;
};

// Exhaustive check of the relaxed bipartite triangle inequality:
// w(x1,y1) <= w(x1,y2) + w(x2,y1) + w(x2,y2) for all quadruples.
bool check_metric(const Instance& inst);

// max/min weight ratio; empty when some weight is zero.
std::optional<double> beta_ratio(const Instance& inst);

// True when all weights lie in [m, beta*m] for m = min weight > 0.
bool check_beta(const Instance& inst, double beta);

}  // namespace ordmatch

#endif
