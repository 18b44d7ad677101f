#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "ordmatch/errors.hpp"
#include "ordmatch/generators.hpp"
#include "ordmatch/instance.hpp"
#include "ordmatch/matching.hpp"
#include "ordmatch/oracles.hpp"
#include "ordmatch/rng.hpp"

using namespace ordmatch;

namespace {

// Brute-force reference for the dictatorship expectation, independent of
// the subset dynamic program: enumerate all n! dictator orders, let the
// first `rounds` agents take their favourite remaining partner (ties to
// the lower index), and complete with the expected value of a uniform
// random matching on what is left.
double enum_rsd_expectation(const Instance& inst, int rounds) {
  const int n = inst.n;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  double acc = 0;
  int64_t count = 0;
  do {
    std::vector<char> xm(n, 0), ym(n, 0);
    double w = 0;
    for (int r = 0; r < rounds; ++r) {
      const int x = order[r];
      int best = -1;
      double bw = -1;
      for (int y = 0; y < n; ++y) {
        if (ym[y]) continue;
        if (inst.at(x, y) > bw) {
          bw = inst.at(x, y);
          best = y;
        }
      }
      w += bw;
      xm[x] = ym[best] = 1;
    }
    // expected weight of a uniform random completion: residual total / k
    const int k = n - rounds;
    if (k > 0) {
      double resid = 0;
      for (int x = 0; x < n; ++x) {
        if (xm[x]) continue;
        for (int y = 0; y < n; ++y)
          if (!ym[y]) resid += inst.at(x, y);
      }
      w += resid / k;
    }
    acc += w;
    ++count;
  } while (std::next_permutation(order.begin(), order.end()));
  return acc / static_cast<double>(count);
}

Instance swap_instance() {
  // x0 prefers y0, x1 prefers y1; optimum takes the diagonal.
  return Instance::make(2, {2, 1, 1, 2}, "swap");
}

}  // namespace

TEST_CASE("optimum and minimum on the 2x2 diagonal instance") {
  auto inst = swap_instance();
  CHECK(opt_weight(inst) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(min_weight(inst) == doctest::Approx(2.0).epsilon(1e-12));
  auto opt = opt_matching(inst);
  REQUIRE(opt.pairs.size() == 2);
  CHECK(opt.pairs[0] == std::pair<int, int>{0, 0});
  CHECK(opt.pairs[1] == std::pair<int, int>{1, 1});
  auto mn = min_matching(inst);
  CHECK(mn.pairs[0] == std::pair<int, int>{0, 1});
  CHECK(mn.pairs[1] == std::pair<int, int>{1, 0});
}

TEST_CASE("optimum of the single-heavy-edge family is n + 2") {
  for (int n : {2, 3, 5, 9, 16}) {
    auto inst = gen_figure2(n);
    CHECK(opt_weight(inst) == doctest::Approx(n + 2.0).epsilon(1e-12));
  }
}

TEST_CASE("assignment solver agrees with exhaustive search") {
  for (int i = 0; i < 60; ++i) {
    const int n = 2 + i % 6;  // 2..7
    const uint64_t s = Rng::mix(0x5eed0001 + i);
    Instance inst = (i % 3 == 0) ? gen_beta_bounded(n, 4.0, s)
                                 : gen_euclidean(n, 2, s);
    const double exact = matching_weight(inst, brute_force_opt(inst));
    const double fast = opt_weight(inst);
    CHECK(fast == doctest::Approx(exact).epsilon(1e-12));
    // the minimum is the maximum of the negated matrix
    std::vector<double> neg(inst.weights);
    double mx = inst.max_weight();
    for (double& v : neg) v = mx - v;
    Instance flipped = Instance::make(n, std::move(neg));
    const double min_via_flip =
        n * mx - matching_weight(flipped, brute_force_opt(flipped));
    CHECK(min_weight(inst) == doctest::Approx(min_via_flip).epsilon(1e-9));
  }
}

TEST_CASE("brute force rejects large instances") {
  CHECK_THROWS_AS(brute_force_opt(gen_figure2(11)), ValidationError);
}

TEST_CASE("random-matching expectation closed form") {
  CHECK(exact_random_expectation(swap_instance()) == doctest::Approx(3.0));
  auto fig = gen_figure2(4);
  // 16 unit weights plus the extra 2 on the heavy edge, over n = 4
  CHECK(exact_random_expectation(fig) == doctest::Approx(18.0 / 4.0));
}

TEST_CASE("dictatorship expectation: frozen small cases") {
  auto inst = swap_instance();
  // every dictator order reaches the optimum here
  CHECK(exact_rsd_expectation(inst, 2) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(exact_rsd_expectation(inst, 1) == doctest::Approx(4.0).epsilon(1e-12));
  // zero rounds is a uniform random matching
  CHECK(exact_rsd_expectation(inst, 0) == doctest::Approx(3.0).epsilon(1e-12));

  // single heavy edge, n = 3: orders starting at x0 keep the weight-3
  // edge (5 total), the other four orders strand it (3 total).
  auto fig = gen_figure2(3);
  CHECK(exact_rsd_expectation(fig, 3) ==
        doctest::Approx(11.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("dictatorship expectation matches order enumeration") {
  for (int i = 0; i < 12; ++i) {
    const int n = 4 + i % 2;  // 4..5
    Instance inst = gen_euclidean(n, 2, Rng::mix(0x5eed0100 + i));
    for (int rounds : {0, 1, n / 2, n}) {
      CHECK(exact_rsd_expectation(inst, rounds) ==
            doctest::Approx(enum_rsd_expectation(inst, rounds)).epsilon(1e-11));
    }
  }
}

TEST_CASE("dictatorship expectation input validation") {
  auto inst = swap_instance();
  CHECK_THROWS_AS(exact_rsd_expectation(inst, 3), ValidationError);
  CHECK_THROWS_AS(exact_rsd_expectation(inst, -1), ValidationError);
  CHECK_THROWS_AS(exact_rsd_expectation(gen_figure2(13), 1), ValidationError);
}

TEST_CASE("round profile: frozen values and identities") {
  auto inst = swap_instance();
  auto p = exact_rsd_round_profile(inst, 2);
  REQUIRE(p.round_weight.size() == 2);
  CHECK(p.round_weight[0] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(p.round_weight[1] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(p.residual_avg_edge == doctest::Approx(0.0));

  // first dictator on the single-heavy-edge instance: weight 3 with
  // probability 1/3, else 1
  auto fig = gen_figure2(3);
  auto pf = exact_rsd_round_profile(fig, 3);
  CHECK(pf.round_weight[0] == doctest::Approx(5.0 / 3.0).epsilon(1e-12));

  // full-round profile sums to the full expectation
  double total = 0;
  for (double w : pf.round_weight) total += w;
  CHECK(total == doctest::Approx(exact_rsd_expectation(fig, 3)).epsilon(1e-12));
}

TEST_CASE("round profile is consistent with the truncated expectation") {
  // picked rounds plus (n - k) times the expected residual average edge
  // equals the truncated dictatorship expectation
  for (int i = 0; i < 8; ++i) {
    const int n = 4 + i % 3;  // 4..6
    Instance inst = gen_euclidean(n, 2, Rng::mix(0x5eed0200 + i));
    for (int k : {1, 2, n - 1}) {
      auto prof = exact_rsd_round_profile(inst, k);
      double sum = 0;
      for (double w : prof.round_weight) sum += w;
      const double expect = sum + (n - k) * prof.residual_avg_edge;
      CHECK(expect ==
            doctest::Approx(exact_rsd_expectation(inst, k)).epsilon(1e-11));
    }
  }
}

TEST_CASE("oracle sandwich on random instances") {
  for (int i = 0; i < 20; ++i) {
    Instance inst = gen_euclidean(6, 2, Rng::mix(0x5eed0300 + i));
    const double opt = opt_weight(inst);
    const double mn = min_weight(inst);
    const double rnd = exact_random_expectation(inst);
    const double rsd_full = exact_rsd_expectation(inst, inst.n);
    CHECK(mn <= opt + 1e-12);
    CHECK(rnd <= opt + 1e-12);
    CHECK(rnd >= mn - 1e-12);
    CHECK(rsd_full <= opt + 1e-12);
    CHECK(rsd_full >= mn - 1e-12);
  }
}
