#include "ordmatch/matching.hpp"

#include <algorithm>

#include "ordmatch/errors.hpp"

namespace ordmatch {

void Matching::sort_pairs() {
  std::sort(pairs.begin(), pairs.end());
}

double matching_weight(const Instance& inst, const Matching& m) {
  std::vector<char> used_x(inst.n, 0), used_y(inst.n, 0);
  double s = 0;
  for (auto [x, y] : m.pairs) {
    if (x < 0 || x >= inst.n || y < 0 || y >= inst.n)
      throw ValidationError("matching: index out of range");
    if (used_x[x] || used_y[y])
      throw ValidationError("matching: node matched twice");
    used_x[x] = used_y[y] = 1;
    s += inst.at(x, y);
  }
  return s;
}

bool valid_matching(const Instance& inst, const Matching& m) {
  std::vector<char> used_x(inst.n, 0), used_y(inst.n, 0);
  for (auto [x, y] : m.pairs) {
    if (x < 0 || x >= inst.n || y < 0 || y >= inst.n) return false;
    if (used_x[x] || used_y[y]) return false;
    used_x[x] = used_y[y] = 1;
  }
  return true;
}

}  // namespace ordmatch
