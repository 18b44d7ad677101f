#ifndef ORDMATCH_ORACLES_HPP
#define ORDMATCH_ORACLES_HPP

#include "ordmatch/instance.hpp"
#include "ordmatch/matching.hpp"

namespace ordmatch {

// Exact references the empirical harness measures against. These see the
// full weight matrix; none of them reuse the ordinal algorithm code.

// Maximum-weight perfect matching via the O(n^3) potentials method.
Matching opt_matching(const Instance& inst);
double opt_weight(const Instance& inst);

// Minimum-weight perfect matching, same machinery.
Matching min_matching(const Instance& inst);
double min_weight(const Instance& inst);

// Exhaustive search over all n! perfect matchings; n <= 10.
Matching brute_force_opt(const Instance& inst);

// Exact expected matching weight of random serial dictatorship truncated
// to `rounds` dictator picks followed by uniform random completion.
// Dynamic program over (remaining X, remaining Y) subset pairs; n <= 12.
// rounds = n gives full RSD.
double exact_rsd_expectation(const Instance& inst, int rounds);

// Expected weight of a uniformly random perfect matching: total / n.
double exact_random_expectation(const Instance& inst);

// Exact expected weight of the edge selected in each dictatorship round
// (1-based rounds 1..rounds), plus the expected average edge weight of
// the residual graph after those rounds. Enumerates the state space
// exactly; meant for n <= 6.
struct RsdRoundProfile {
  std::vector<double> round_weight;   // size `rounds`
  double residual_avg_edge = 0.0;     // 0 when the residual graph is empty
};
RsdRoundProfile exact_rsd_round_profile(const Instance& inst, int rounds);

}  // namespace ordmatch

#endif
