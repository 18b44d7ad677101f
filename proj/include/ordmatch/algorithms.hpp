#ifndef ORDMATCH_ALGORITHMS_HPP
#define ORDMATCH_ALGORITHMS_HPP

#include <utility>

#include "ordmatch/matching.hpp"
#include "ordmatch/rng.hpp"
#include "ordmatch/views.hpp"

namespace ordmatch {

// Matched/unmatched bookkeeping shared by the ordinal algorithms.
struct ResidualState {
  std::vector<char> x_matched;
  std::vector<char> y_matched;
  int matched = 0;

  explicit ResidualState(int n) : x_matched(n, 0), y_matched(n, 0) {}
  void mark(int x, int y) {
    x_matched[x] = 1;
    y_matched[y] = 1;
    ++matched;
  }
};

// Uniformly random perfect matching; needs no preference information.
Matching random_matching(int n, Rng& rng);

// Random serial dictatorship: repeatedly pick an unmatched x uniformly at
// random and give it its favourite remaining y. Requires a full view
// (alpha = 1).
Matching rsd(const OneSidedView& view, Rng& rng);

// floor(alpha*n) dictatorship rounds, then a uniformly random matching on
// whatever is left. alpha = 1 recovers rsd, alpha = 0 random_matching.
Matching rsd_partial(const OneSidedView& view, Rng& rng);

// Follow top-of-remaining-list pointers from start_x, alternating sides,
// until the two endpoints name each other first. The weights along the
// walk never decrease, so the returned edge is undominated in the
// residual graph; if the walk revisits a node every edge on the closed
// cycle is tied, and the closing edge is returned.
std::pair<int, int> chain_walk(const TwoSidedView& view, int start_x,
                               const ResidualState& st);

// k rounds of: pick a random unmatched x, chain-walk to an undominated
// edge, match it. Throws if k exceeds what the view's budget supports.
Matching greedy_undominated_k(const TwoSidedView& view, int k, Rng& rng);

// For alpha <= 1/2: floor(alpha*n) greedy undominated rounds, then a
// random matching on the rest.
Matching two_sided_low_alpha(const TwoSidedView& view, Rng& rng);

// For alpha >= 1/2: run floor(a*n) greedy undominated rounds (a capped
// at 3/4), then play one of two completions at random: keep everything
// and fill randomly, or keep a random floor((2a-1)*n) of the greedy edges
// and cross-match the released nodes with the untouched ones.
Matching two_sided_mixed(const TwoSidedView& view, Rng& rng);

// Dispatch: alpha < 1/2 goes to two_sided_low_alpha, else two_sided_mixed.
Matching two_sided(const TwoSidedView& view, Rng& rng);

// Scan the visible prefix of the global edge order, heaviest first, and
// take every edge whose endpoints are both still free, stopping after k
// edges. Deterministic. Throws if k exceeds what the budget guarantees.
Matching greedy_total_order_k(const TotalOrderView& view, int k);

// Total-order analogue of two_sided_mixed, built on a greedy prefix of
// k = floor((1 - sqrt(1-a))*n) edges, a capped at 3/4.
Matching total_order_mixed(const TotalOrderView& view, Rng& rng);

// Mixing weight between the two completions, per model.
struct MixParams {
  double alpha;  // effective (capped) budget
  double p_m1;   // probability of the "keep the greedy matching" branch

  static MixParams two_sided(double alpha);
  static MixParams total_order(double alpha);
};

// Largest k the total-order budget can always serve: after k greedy picks
// at most 2nk - k^2 positions have been consumed, which stays within
// floor(alpha*n^2) exactly when k <= floor((1 - sqrt(1-alpha))*n).
int greedy_total_order_k_max(double alpha, int n);

}  // namespace ordmatch

#endif
