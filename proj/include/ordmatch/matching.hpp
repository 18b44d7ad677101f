#ifndef ORDMATCH_MATCHING_HPP
#define ORDMATCH_MATCHING_HPP

#include <utility>
#include <vector>

#include "ordmatch/instance.hpp"

namespace ordmatch {

// A (possibly partial) bipartite matching: index pairs (x, y), no node
// on either side used twice. Algorithms emit pairs sorted by x.
struct Matching {
  int n = 0;
  std::vector<std::pair<int, int>> pairs;

  bool perfect() const { return static_cast<int>(pairs.size()) == n; }
  void sort_pairs();
};

// Sum of matched edge weights. Throws ValidationError on out-of-range
// indices or a repeated endpoint.
double matching_weight(const Instance& inst, const Matching& m);

// Shape check without throwing.
bool valid_matching(const Instance& inst, const Matching& m);

}  // namespace ordmatch

#endif
