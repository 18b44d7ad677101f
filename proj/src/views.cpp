#include "ordmatch/views.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ordmatch/errors.hpp"

namespace ordmatch {

namespace {

void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw ValidationError("view: alpha must lie in [0, 1]");
}

// Indices 0..n-1 sorted by descending weight under `weight_of`, ties
// toward the lower index. The deterministic tie-break makes every
// preference list a strict order, so identical matrices always derive
// identical views.
std::vector<int> ranked(int n, const std::vector<double>& row) {
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&row](int a, int b) {
    if (row[a] != row[b]) return row[a] > row[b];
    return a < b;
  });
  return idx;
}

}  // namespace

int64_t budget_floor(double alpha, int64_t count) {
  double v = alpha * static_cast<double>(count);
  auto f = static_cast<int64_t>(std::floor(v + 1e-9));
  return std::min<int64_t>(f, count);
}

OneSidedView OneSidedView::derive(const Instance& inst, double alpha) {
  check_alpha(alpha);
  OneSidedView view;
  view.n_ = inst.n;
  view.alpha_ = alpha;
  view.depth_ = static_cast<int>(budget_floor(alpha, inst.n));
  view.prefs_.resize(static_cast<size_t>(inst.n) * view.depth_);
  std::vector<double> row(inst.n);
  for (int x = 0; x < inst.n; ++x) {
    for (int y = 0; y < inst.n; ++y) row[y] = inst.at(x, y);
    auto order = ranked(inst.n, row);
    std::copy(order.begin(), order.begin() + view.depth_,
              view.prefs_.begin() + static_cast<size_t>(x) * view.depth_);
  }
  view.audit_ = AuditCounters(inst.n);
  return view;
}

int OneSidedView::pref(int x, int rank) const {
  if (x < 0 || x >= n_) throw ValidationError("view: x out of range");
  if (rank < 0 || rank >= depth_)
    throw BudgetViolation("one-sided view: rank " + std::to_string(rank) +
                          " beyond budget depth " + std::to_string(depth_));
  audit_.raise(x, rank);
  return prefs_[static_cast<size_t>(x) * depth_ + rank];
}

TwoSidedView TwoSidedView::derive(const Instance& inst, double alpha) {
  check_alpha(alpha);
  TwoSidedView view;
  view.n_ = inst.n;
  view.alpha_ = alpha;
  view.depth_ = static_cast<int>(budget_floor(alpha, inst.n));
  const size_t stride = view.depth_;
  view.xprefs_.resize(static_cast<size_t>(inst.n) * stride);
  view.yprefs_.resize(static_cast<size_t>(inst.n) * stride);
  std::vector<double> line(inst.n);
  for (int x = 0; x < inst.n; ++x) {
    for (int y = 0; y < inst.n; ++y) line[y] = inst.at(x, y);
    auto order = ranked(inst.n, line);
    std::copy(order.begin(), order.begin() + view.depth_,
              view.xprefs_.begin() + x * stride);
  }
  for (int y = 0; y < inst.n; ++y) {
    for (int x = 0; x < inst.n; ++x) line[x] = inst.at(x, y);
    auto order = ranked(inst.n, line);
    std::copy(order.begin(), order.begin() + view.depth_,
              view.yprefs_.begin() + y * stride);
  }
  view.audit_x_ = AuditCounters(inst.n);
  view.audit_y_ = AuditCounters(inst.n);
  return view;
}

int TwoSidedView::pref_x(int x, int rank) const {
  if (x < 0 || x >= n_) throw ValidationError("view: x out of range");
  if (rank < 0 || rank >= depth_)
    throw BudgetViolation("two-sided view: x-rank " + std::to_string(rank) +
                          " beyond budget depth " + std::to_string(depth_));
  audit_x_.raise(x, rank);
  return xprefs_[static_cast<size_t>(x) * depth_ + rank];
}

int TwoSidedView::pref_y(int y, int rank) const {
  if (y < 0 || y >= n_) throw ValidationError("view: y out of range");
  if (rank < 0 || rank >= depth_)
    throw BudgetViolation("two-sided view: y-rank " + std::to_string(rank) +
                          " beyond budget depth " + std::to_string(depth_));
  audit_y_.raise(y, rank);
  return yprefs_[static_cast<size_t>(y) * depth_ + rank];
}

int64_t TwoSidedView::audit_max_rank() const {
  return std::max(audit_x_.max_all(), audit_y_.max_all());
}

void TwoSidedView::reset_audit() const {
  audit_x_.reset();
  audit_y_.reset();
}

TotalOrderView TotalOrderView::derive(const Instance& inst, double alpha) {
  check_alpha(alpha);
  TotalOrderView view;
  view.n_ = inst.n;
  view.alpha_ = alpha;
  const int n = inst.n;
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) edges.emplace_back(x, y);
  // Heaviest first; equal weights fall back to (x, y) lexicographic order.
  std::sort(edges.begin(), edges.end(),
            [&inst](const std::pair<int, int>& a, const std::pair<int, int>& b) {
              double wa = inst.at(a.first, a.second);
              double wb = inst.at(b.first, b.second);
              if (wa != wb) return wa > wb;
              return a < b;
            });
  auto len = budget_floor(alpha, static_cast<int64_t>(n) * n);
  edges.resize(static_cast<size_t>(len));
  view.prefix_ = std::move(edges);
  view.audit_ = AuditCounters(1);
  return view;
}

std::pair<int, int> TotalOrderView::edge(size_t pos) const {
  if (pos >= prefix_.size())
    throw BudgetViolation("total-order view: position " + std::to_string(pos) +
                          " beyond budget prefix " +
                          std::to_string(prefix_.size()));
  audit_.raise(0, static_cast<int64_t>(pos));
  return prefix_[pos];
}

}  // namespace ordmatch
