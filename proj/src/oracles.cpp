#include "ordmatch/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "ordmatch/errors.hpp"

namespace ordmatch {

namespace {

// Minimum-cost assignment, O(n^3) shortest-augmenting-path method with
// row/column potentials. 1-indexed internals; handles arbitrary finite
// costs. Returns col -> row (1-based).
std::vector<int> solve_assignment(const std::vector<double>& cost, int n) {
  const double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), minv(n + 1);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  std::vector<char> used(n + 1);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::fill(minv.begin(), minv.end(), kInf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      int i0 = p[j0], j1 = 0;
      double delta = kInf;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        double cur = cost[static_cast<size_t>(i0 - 1) * n + (j - 1)] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  return p;
}

Matching assignment_matching(const Instance& inst, bool maximize) {
  const int n = inst.n;
  std::vector<double> cost(inst.weights);
  if (maximize)
    for (double& c : cost) c = -c;
  auto p = solve_assignment(cost, n);
  Matching m;
  m.n = n;
  for (int j = 1; j <= n; ++j) m.pairs.emplace_back(p[j] - 1, j - 1);
  m.sort_pairs();
  return m;
}

int lowest_bit_index(uint32_t mask) { return std::countr_zero(mask); }

// x's favourite y among maskY: max weight, ties to the lower index.
int top_choice(const Instance& inst, int x, uint32_t maskY) {
  int best = -1;
  double bw = -1.0;
  for (uint32_t m = maskY; m != 0; m &= m - 1) {
    int y = lowest_bit_index(m);
    double w = inst.at(x, y);
    if (w > bw) {  // strict: lower index wins ties
      bw = w;
      best = y;
    }
  }
  return best;
}

double residual_total(const Instance& inst, uint32_t maskX, uint32_t maskY) {
  double s = 0;
  for (uint32_t mx = maskX; mx != 0; mx &= mx - 1) {
    int x = lowest_bit_index(mx);
    for (uint32_t my = maskY; my != 0; my &= my - 1) s += inst.at(x, lowest_bit_index(my));
  }
  return s;
}

}  // namespace

Matching opt_matching(const Instance& inst) { return assignment_matching(inst, true); }

double opt_weight(const Instance& inst) {
  return matching_weight(inst, opt_matching(inst));
}

Matching min_matching(const Instance& inst) { return assignment_matching(inst, false); }

double min_weight(const Instance& inst) {
  return matching_weight(inst, min_matching(inst));
}

Matching brute_force_opt(const Instance& inst) {
  const int n = inst.n;
  if (n > 10) throw ValidationError("brute_force_opt: n must be <= 10");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best = perm;
  double bw = -1.0;
  do {
    double w = 0;
    for (int i = 0; i < n; ++i) w += inst.at(i, perm[i]);
    if (w > bw) {
      bw = w;
      best = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  Matching m;
  m.n = n;
  for (int i = 0; i < n; ++i) m.pairs.emplace_back(i, best[i]);
  return m;
}

double exact_rsd_expectation(const Instance& inst, int rounds) {
  const int n = inst.n;
  if (n > 12) throw ValidationError("exact_rsd_expectation: n must be <= 12");
  if (rounds < 0 || rounds > n)
    throw ValidationError("exact_rsd_expectation: rounds out of range");

  // States are (remaining X, remaining Y) bitmask pairs; the number of
  // completed rounds is implied by the popcount, so the key needs only
  // the two masks.
  std::unordered_map<uint32_t, double> memo;
  memo.reserve(1u << std::min(2 * n, 22));

  auto rec = [&](auto&& self, uint32_t maskX, uint32_t maskY) -> double {
    if (maskX == 0) return 0.0;
    const int k = std::popcount(maskX);
    const int done = n - k;
    if (done == rounds)  // dictators exhausted: uniform random completion
      return residual_total(inst, maskX, maskY) / k;
    const uint32_t key = (maskX << n) | maskY;
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    double acc = 0;
    for (uint32_t mx = maskX; mx != 0; mx &= mx - 1) {
      int x = lowest_bit_index(mx);
      int y = top_choice(inst, x, maskY);
      acc += inst.at(x, y) +
             self(self, maskX & ~(1u << x), maskY & ~(1u << y));
    }
    acc /= k;
    memo.emplace(key, acc);
    return acc;
  };
  return rec(rec, (1u << n) - 1, (1u << n) - 1);
}

double exact_random_expectation(const Instance& inst) {
  return inst.total_weight() / inst.n;
}

RsdRoundProfile exact_rsd_round_profile(const Instance& inst, int rounds) {
  const int n = inst.n;
  if (n > 10) throw ValidationError("exact_rsd_round_profile: n must be <= 10");
  if (rounds < 0 || rounds > n)
    throw ValidationError("exact_rsd_round_profile: rounds out of range");

  RsdRoundProfile profile;
  // Forward sweep over reachable (remaining X, remaining Y) states with
  // their probabilities.
  std::unordered_map<uint64_t, double> cur;
  cur.emplace((static_cast<uint64_t>((1u << n) - 1) << n) | ((1u << n) - 1), 1.0);
  for (int r = 0; r < rounds; ++r) {
    std::unordered_map<uint64_t, double> next;
    double round_weight = 0;
    for (auto [key, prob] : cur) {
      const auto maskX = static_cast<uint32_t>(key >> n);
      const auto maskY = static_cast<uint32_t>(key & ((1u << n) - 1));
      const int k = std::popcount(maskX);
      const double p_each = prob / k;
      for (uint32_t mx = maskX; mx != 0; mx &= mx - 1) {
        int x = lowest_bit_index(mx);
        int y = top_choice(inst, x, maskY);
        round_weight += p_each * inst.at(x, y);
        uint64_t nk = (static_cast<uint64_t>(maskX & ~(1u << x)) << n) |
                      (maskY & ~(1u << y));
        next[nk] += p_each;
      }
    }
    profile.round_weight.push_back(round_weight);
    cur = std::move(next);
  }
  double avg = 0;
  for (auto [key, prob] : cur) {
    const auto maskX = static_cast<uint32_t>(key >> n);
    const auto maskY = static_cast<uint32_t>(key & ((1u << n) - 1));
    const int k = std::popcount(maskX);
    if (k > 0)
      avg += prob * residual_total(inst, maskX, maskY) / (static_cast<double>(k) * k);
  }
  profile.residual_avg_edge = avg;
  return profile;
}

}  // namespace ordmatch
