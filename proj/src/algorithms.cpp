#include "ordmatch/algorithms.hpp"

#include <algorithm>
#include <cmath>

#include "ordmatch/errors.hpp"

namespace ordmatch {

namespace {

// First entry of x's list whose y is still free. Ranks past the budget
// throw from inside the view; the callers below keep the scan depth
// bounded by the number of already-matched nodes, which is what makes
// the budget sufficient.
int top_remaining_for_x(const OneSidedView& v, int x, const ResidualState& st) {
  for (int r = 0;; ++r) {
    int y = v.pref(x, r);
    if (!st.y_matched[y]) return y;
  }
}

int top_remaining_for_x(const TwoSidedView& v, int x, const ResidualState& st) {
  for (int r = 0;; ++r) {
    int y = v.pref_x(x, r);
    if (!st.y_matched[y]) return y;
  }
}

int top_remaining_for_y(const TwoSidedView& v, int y, const ResidualState& st) {
  for (int r = 0;; ++r) {
    int x = v.pref_y(y, r);
    if (!st.x_matched[x]) return x;
  }
}

std::vector<int> unmatched_xs(const ResidualState& st) {
  std::vector<int> xs;
  for (size_t i = 0; i < st.x_matched.size(); ++i)
    if (!st.x_matched[i]) xs.push_back(static_cast<int>(i));
  return xs;
}

std::vector<int> unmatched_ys(const ResidualState& st) {
  std::vector<int> ys;
  for (size_t i = 0; i < st.y_matched.size(); ++i)
    if (!st.y_matched[i]) ys.push_back(static_cast<int>(i));
  return ys;
}

// Uniformly random perfect matching on everything still free. Shared by
// every algorithm that ends in a random completion, so "alpha = 0" paths
// coincide with random_matching draw for draw.
void complete_randomly(Matching& m, ResidualState& st, Rng& rng) {
  auto xs = unmatched_xs(st);
  auto ys = unmatched_ys(st);
  rng.shuffle(ys);
  for (size_t i = 0; i < xs.size(); ++i) {
    m.pairs.emplace_back(xs[i], ys[i]);
    st.mark(xs[i], ys[i]);
  }
}

// Uniformly random maximal matching between two node sets: min(|A|,|B|)
// pairs, every injection equally likely. Leftover nodes stay for the
// final completion.
void cross_random(Matching& m, ResidualState& st, std::vector<int> xs,
                  std::vector<int> ys, Rng& rng) {
  rng.shuffle(xs);
  rng.shuffle(ys);
  size_t take = std::min(xs.size(), ys.size());
  for (size_t i = 0; i < take; ++i) {
    m.pairs.emplace_back(xs[i], ys[i]);
    st.mark(xs[i], ys[i]);
  }
}

// `rounds` dictatorship picks into m/st.
void rsd_rounds(const OneSidedView& view, int rounds, Matching& m,
                ResidualState& st, Rng& rng) {
  std::vector<int> pool(view.n());
  for (int i = 0; i < view.n(); ++i) pool[i] = i;
  for (int r = 0; r < rounds; ++r) {
    size_t j = rng.uniform_index(pool.size());
    int x = pool[j];
    pool[j] = pool.back();
    pool.pop_back();
    int y = top_remaining_for_x(view, x, st);
    m.pairs.emplace_back(x, y);
    st.mark(x, y);
  }
}

}  // namespace

Matching random_matching(int n, Rng& rng) {
  Matching m;
  m.n = n;
  ResidualState st(n);
  complete_randomly(m, st, rng);
  m.sort_pairs();
  return m;
}

Matching rsd(const OneSidedView& view, Rng& rng) {
  if (view.depth() != view.n())
    throw ValidationError("rsd: needs full preference lists (alpha = 1)");
  return rsd_partial(view, rng);
}

Matching rsd_partial(const OneSidedView& view, Rng& rng) {
  Matching m;
  m.n = view.n();
  ResidualState st(view.n());
  rsd_rounds(view, view.depth(), m, st, rng);
  complete_randomly(m, st, rng);
  m.sort_pairs();
  return m;
}

std::pair<int, int> chain_walk(const TwoSidedView& view, int start_x,
                               const ResidualState& st) {
  if (st.x_matched[start_x])
    throw ValidationError("chain_walk: start node already matched");
  const int n = view.n();
  std::vector<char> seen_x(n, 0), seen_y(n, 0);
  int x = start_x;
  int y = top_remaining_for_x(view, x, st);
  seen_x[x] = 1;
  seen_y[y] = 1;
  // Invariant at the top of each iteration: y is x's favourite remaining
  // partner. The walk only ever moves to strictly-preferred-or-equal
  // edges, so a revisited node closes a cycle of equal-weight edges,
  // every one of them undominated.
  for (;;) {
    int tx = top_remaining_for_y(view, y, st);
    if (tx == x) return {x, y};          // mutual top
    if (seen_x[tx]) return {tx, y};      // cycle closed through tx
    x = tx;
    seen_x[x] = 1;
    int ty = top_remaining_for_x(view, x, st);
    if (ty == y) return {x, y};          // mutual top
    if (seen_y[ty]) return {x, ty};      // cycle closed through ty
    y = ty;
    seen_y[y] = 1;
  }
}

namespace {

// k undominated edges into m/st, each found by a chain walk from a
// uniformly random unmatched x.
void greedy_rounds(const TwoSidedView& view, int k, Matching& m,
                   ResidualState& st, Rng& rng) {
  for (int r = 0; r < k; ++r) {
    auto xs = unmatched_xs(st);
    int x = xs[rng.uniform_index(xs.size())];
    auto [a, b] = chain_walk(view, x, st);
    m.pairs.emplace_back(a, b);
    st.mark(a, b);
  }
}

}  // namespace

Matching greedy_undominated_k(const TwoSidedView& view, int k, Rng& rng) {
  if (k < 0 || k > view.n())
    throw ValidationError("greedy_undominated_k: k out of range");
  if (k > view.depth())
    throw ValidationError("greedy_undominated_k: k exceeds the view budget");
  Matching m;
  m.n = view.n();
  ResidualState st(view.n());
  greedy_rounds(view, k, m, st, rng);
  m.sort_pairs();
  return m;
}

Matching two_sided_low_alpha(const TwoSidedView& view, Rng& rng) {
  if (view.alpha() > 0.5 + 1e-12)
    throw ValidationError("two_sided_low_alpha: needs alpha <= 1/2");
  Matching m;
  m.n = view.n();
  ResidualState st(view.n());
  greedy_rounds(view, view.depth(), m, st, rng);
  complete_randomly(m, st, rng);
  m.sort_pairs();
  return m;
}

MixParams MixParams::two_sided(double alpha) {
  if (alpha < 0.5 - 1e-12)
    throw ValidationError("two-sided mix: needs alpha >= 1/2");
  double a = std::min(alpha, 0.75);
  return {a, (3.0 - 2.0 * a) / (3.0 - a)};
}

MixParams MixParams::total_order(double alpha) {
  double a = std::min(std::max(alpha, 0.0), 0.75);
  return {a, 2.0 / (2.0 + std::sqrt(1.0 - a))};
}

Matching two_sided_mixed(const TwoSidedView& view, Rng& rng) {
  const int n = view.n();
  MixParams mix = MixParams::two_sided(view.alpha());
  const int k = static_cast<int>(budget_floor(mix.alpha, n));

  Matching greedy;
  greedy.n = n;
  ResidualState greedy_st(n);
  greedy_rounds(view, k, greedy, greedy_st, rng);

  Matching m;
  m.n = n;
  if (rng.uniform_real() < mix.p_m1) {
    // Keep every greedy edge, fill the rest at random.
    m.pairs = greedy.pairs;
    ResidualState st = greedy_st;
    complete_randomly(m, st, rng);
  } else {
    // Keep floor((2a-1)n) random greedy edges. The released greedy nodes
    // are cross-matched with the untouched nodes; flooring can leave the
    // two sides one node apart, and the final completion pairs those
    // stragglers off uniformly.
    const int keep = static_cast<int>(budget_floor(2.0 * mix.alpha - 1.0, n));
    auto edges = greedy.pairs;
    rng.shuffle(edges);
    ResidualState st(n);
    std::vector<int> released_x, released_y;
    for (size_t i = 0; i < edges.size(); ++i) {
      if (i < static_cast<size_t>(keep)) {
        m.pairs.push_back(edges[i]);
        st.mark(edges[i].first, edges[i].second);
      } else {
        released_x.push_back(edges[i].first);
        released_y.push_back(edges[i].second);
      }
    }
    std::vector<int> fresh_x, fresh_y;  // untouched by the greedy phase
    for (int i = 0; i < n; ++i) {
      if (!greedy_st.x_matched[i]) fresh_x.push_back(i);
      if (!greedy_st.y_matched[i]) fresh_y.push_back(i);
    }
    cross_random(m, st, released_x, fresh_y, rng);
    cross_random(m, st, fresh_x, released_y, rng);
    complete_randomly(m, st, rng);
  }
  m.sort_pairs();
  return m;
}

Matching two_sided(const TwoSidedView& view, Rng& rng) {
  if (view.alpha() < 0.5) return two_sided_low_alpha(view, rng);
  return two_sided_mixed(view, rng);
}

int greedy_total_order_k_max(double alpha, int n) {
  return static_cast<int>(budget_floor(1.0 - std::sqrt(1.0 - alpha), n));
}

Matching greedy_total_order_k(const TotalOrderView& view, int k) {
  const int n = view.n();
  if (k < 0 || k > n)
    throw ValidationError("greedy_total_order_k: k out of range");
  if (k > greedy_total_order_k_max(view.alpha(), n))
    throw ValidationError(
        "greedy_total_order_k: k exceeds what the budget guarantees");
  Matching m;
  m.n = n;
  ResidualState st(n);
  size_t pos = 0;
  while (st.matched < k) {
    auto [x, y] = view.edge(pos++);
    if (st.x_matched[x] || st.y_matched[y]) continue;
    m.pairs.emplace_back(x, y);
    st.mark(x, y);
  }
  m.sort_pairs();
  return m;
}

Matching total_order_mixed(const TotalOrderView& view, Rng& rng) {
  const int n = view.n();
  MixParams mix = MixParams::total_order(view.alpha());
  const double alpha1 = 1.0 - std::sqrt(1.0 - mix.alpha);
  const int k = static_cast<int>(budget_floor(alpha1, n));

  Matching greedy = greedy_total_order_k(view, k);
  ResidualState greedy_st(n);
  for (auto [x, y] : greedy.pairs) greedy_st.mark(x, y);

  Matching m;
  m.n = n;
  if (rng.uniform_real() < mix.p_m1) {
    m.pairs = greedy.pairs;
    ResidualState st = greedy_st;
    complete_randomly(m, st, rng);
  } else {
    // Drop the greedy edges entirely: match floor((1-2a1)n) random
    // untouched nodes among themselves, then cross-match the rest of the
    // untouched nodes with the greedy nodes of the opposite side.
    // Flooring can leave up to two stragglers per side; the completion
    // pairs them off uniformly.
    const int c = static_cast<int>(
        budget_floor(std::max(0.0, 1.0 - 2.0 * alpha1), n));
    std::vector<int> bx, by, tx, ty;
    for (int i = 0; i < n; ++i) {
      (greedy_st.x_matched[i] ? tx : bx).push_back(i);
      (greedy_st.y_matched[i] ? ty : by).push_back(i);
    }
    rng.shuffle(bx);
    rng.shuffle(by);
    ResidualState st(n);
    std::vector<int> ax(bx.begin() + std::min<size_t>(c, bx.size()), bx.end());
    std::vector<int> ay(by.begin() + std::min<size_t>(c, by.size()), by.end());
    bx.resize(std::min<size_t>(c, bx.size()));
    by.resize(std::min<size_t>(c, by.size()));
    cross_random(m, st, bx, by, rng);  // chosen untouched nodes, both sides
    cross_random(m, st, ax, ty, rng);  // untouched X against greedy Y
    cross_random(m, st, tx, ay, rng);  // greedy X against untouched Y
    complete_randomly(m, st, rng);
  }
  m.sort_pairs();
  return m;
}

}  // namespace ordmatch
