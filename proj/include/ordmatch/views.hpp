#ifndef ORDMATCH_VIEWS_HPP
#define ORDMATCH_VIEWS_HPP

#include <atomic>
#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "ordmatch/instance.hpp"

namespace ordmatch {

// Monotone high-water-mark counters, safe under concurrent raises.
// Movable so views can be returned by value.
class AuditCounters {
 public:
  AuditCounters() = default;
  explicit AuditCounters(size_t n) : n_(n), v_(new std::atomic<int64_t>[n]) {
    for (size_t i = 0; i < n_; ++i) v_[i].store(-1, std::memory_order_relaxed);
  }

  void raise(size_t i, int64_t val) const {
    auto& a = v_[i];
    int64_t cur = a.load(std::memory_order_relaxed);
    while (cur < val &&
           !a.compare_exchange_weak(cur, val, std::memory_order_relaxed)) {
    }
  }

  int64_t get(size_t i) const { return v_[i].load(std::memory_order_relaxed); }

  int64_t max_all() const {
    int64_t m = -1;
    for (size_t i = 0; i < n_; ++i) m = std::max(m, get(i));
    return m;
  }

  void reset() const {
    for (size_t i = 0; i < n_; ++i) v_[i].store(-1, std::memory_order_relaxed);
  }

 private:
  size_t n_ = 0;
  // unique_ptr keeps the class movable; the counters themselves are
  // logically metadata, so mutation through const is deliberate.
  std::unique_ptr<std::atomic<int64_t>[]> v_;
};

// The three information models expose strict preference orders derived
// from the weight matrix (ties broken toward the lower index), truncated
// to the information budget. Weights themselves are never exposed:
// algorithms receive only these views, and any query past the budget
// throws BudgetViolation. Every answered query raises an audit counter,
// so a finished run carries a checkable proof of how much of the budget
// was actually consumed.

// Each x sees only the first floor(alpha*n) entries of its own
// preference list over Y.
class OneSidedView {
 public:
  static OneSidedView derive(const Instance& inst, double alpha);

  int n() const { return n_; }
  double alpha() const { return alpha_; }
  int depth() const { return depth_; }  // budget: ranks per node

  // y at position `rank` (0-based) of x's list. rank must be < depth().
  int pref(int x, int rank) const;

  int64_t audit_max_rank(int x) const { return audit_.get(x); }
  int64_t audit_max_rank() const { return audit_.max_all(); }
  void reset_audit() const { audit_.reset(); }

 private:
  int n_ = 0;
  double alpha_ = 0;
  int depth_ = 0;
  std::vector<int> prefs_;  // n_ rows of depth_ entries
  AuditCounters audit_;
};

// Both sides see truncated lists: each x its top floor(alpha*n) of Y,
// each y its top floor(alpha*n) of X.
class TwoSidedView {
 public:
  static TwoSidedView derive(const Instance& inst, double alpha);

  int n() const { return n_; }
  double alpha() const { return alpha_; }
  int depth() const { return depth_; }

  int pref_x(int x, int rank) const;  // x's rank-th favourite y
  int pref_y(int y, int rank) const;  // y's rank-th favourite x

  int64_t audit_max_rank_x() const { return audit_x_.max_all(); }
  int64_t audit_max_rank_y() const { return audit_y_.max_all(); }
  int64_t audit_max_rank() const;
  void reset_audit() const;

 private:
  int n_ = 0;
  double alpha_ = 0;
  int depth_ = 0;
  std::vector<int> xprefs_;
  std::vector<int> yprefs_;
  AuditCounters audit_x_;
  AuditCounters audit_y_;
};

// A single global order over all n^2 edges, heaviest first, of which only
// the first floor(alpha*n^2) positions are visible. No per-node lists and
// no weights: just "this edge outranks that one".
class TotalOrderView {
 public:
  static TotalOrderView derive(const Instance& inst, double alpha);

  int n() const { return n_; }
  double alpha() const { return alpha_; }
  size_t prefix_len() const { return prefix_.size(); }  // budget: positions

  // Edge at global rank `pos` (0-based). pos must be < prefix_len().
  std::pair<int, int> edge(size_t pos) const;

  int64_t audit_max_pos() const { return audit_.get(0); }
  void reset_audit() const { audit_.reset(); }

 private:
  int n_ = 0;
  double alpha_ = 0;
  std::vector<std::pair<int, int>> prefix_;
  AuditCounters audit_;  // single counter: deepest position answered
};

// floor(alpha * count) with a tiny guard against representation error in
// alpha (e.g. 0.7 * 10 evaluating just below 7).
int64_t budget_floor(double alpha, int64_t count);

}  // namespace ordmatch

#endif
