#include <doctest.h>

#include "ordmatch/errors.hpp"
#include "ordmatch/instance.hpp"
#include "ordmatch/views.hpp"

using namespace ordmatch;

namespace {

Instance swap_instance() { return Instance::make(2, {2, 1, 1, 2}, "swap"); }
Instance ties_instance() { return Instance::make(3, std::vector<double>(9, 1.0)); }

}  // namespace

TEST_CASE("budget arithmetic floors without representation surprises") {
  CHECK(budget_floor(1.0, 5) == 5);
  CHECK(budget_floor(0.0, 5) == 0);
  CHECK(budget_floor(0.5, 5) == 2);
  CHECK(budget_floor(0.5, 4) == 2);
  // 0.7 * 10 evaluates just under 7 in binary; still floors to 7
  CHECK(budget_floor(0.7, 10) == 7);
  CHECK(budget_floor(0.3, 10) == 3);
  CHECK(budget_floor(0.75, 2) == 1);
  CHECK(budget_floor(1.0, 400) == 400);
  CHECK(budget_floor(0.999999, 10) == 9);
}

TEST_CASE("one-sided view exposes ranked prefixes only") {
  auto inst = swap_instance();
  auto full = OneSidedView::derive(inst, 1.0);
  CHECK(full.n() == 2);
  CHECK(full.depth() == 2);
  CHECK(full.pref(0, 0) == 0);
  CHECK(full.pref(0, 1) == 1);
  CHECK(full.pref(1, 0) == 1);
  CHECK(full.pref(1, 1) == 0);

  auto half = OneSidedView::derive(inst, 0.5);
  CHECK(half.depth() == 1);
  CHECK(half.pref(0, 0) == 0);
  CHECK_THROWS_AS(half.pref(0, 1), BudgetViolation);
  CHECK_THROWS_AS(half.pref(0, -1), BudgetViolation);
  CHECK_THROWS_AS(half.pref(5, 0), ValidationError);
}

TEST_CASE("ties break toward the lower index") {
  auto view = OneSidedView::derive(ties_instance(), 1.0);
  for (int x = 0; x < 3; ++x)
    for (int r = 0; r < 3; ++r) CHECK(view.pref(x, r) == r);
}

TEST_CASE("audit counters record the deepest answered rank") {
  auto inst = swap_instance();
  auto view = OneSidedView::derive(inst, 1.0);
  CHECK(view.audit_max_rank() == -1);
  view.pref(0, 0);
  CHECK(view.audit_max_rank(0) == 0);
  CHECK(view.audit_max_rank(1) == -1);
  view.pref(0, 1);
  CHECK(view.audit_max_rank(0) == 1);
  CHECK(view.audit_max_rank() == 1);
  view.reset_audit();
  CHECK(view.audit_max_rank() == -1);
  // a rejected query raises nothing
  auto half = OneSidedView::derive(inst, 0.5);
  CHECK_THROWS_AS(half.pref(0, 1), BudgetViolation);
  CHECK(half.audit_max_rank() == -1);
}

TEST_CASE("two-sided view ranks both sides") {
  auto inst = swap_instance();
  auto view = TwoSidedView::derive(inst, 1.0);
  CHECK(view.depth() == 2);
  CHECK(view.pref_x(0, 0) == 0);
  CHECK(view.pref_x(1, 0) == 1);
  CHECK(view.pref_y(0, 0) == 0);
  CHECK(view.pref_y(1, 0) == 1);
  CHECK(view.pref_y(0, 1) == 1);
  CHECK(view.audit_max_rank_x() == 0);
  CHECK(view.audit_max_rank_y() == 1);
  CHECK(view.audit_max_rank() == 1);
  view.reset_audit();
  CHECK(view.audit_max_rank() == -1);

  auto half = TwoSidedView::derive(inst, 0.5);
  CHECK_THROWS_AS(half.pref_x(0, 1), BudgetViolation);
  CHECK_THROWS_AS(half.pref_y(0, 1), BudgetViolation);
}

TEST_CASE("asymmetric matrix ranks the y side by its own column") {
  // x0 prefers y0; but y0 prefers x1 (weight 5)
  auto inst = Instance::make(2, {2, 1, 5, 4});
  auto view = TwoSidedView::derive(inst, 1.0);
  CHECK(view.pref_x(0, 0) == 0);
  CHECK(view.pref_x(1, 0) == 0);
  CHECK(view.pref_y(0, 0) == 1);
  CHECK(view.pref_y(1, 0) == 1);
}

TEST_CASE("total-order view is a weight-sorted prefix of all edges") {
  auto inst = swap_instance();
  auto full = TotalOrderView::derive(inst, 1.0);
  REQUIRE(full.prefix_len() == 4);
  CHECK(full.edge(0) == std::pair<int, int>{0, 0});
  CHECK(full.edge(1) == std::pair<int, int>{1, 1});
  CHECK(full.edge(2) == std::pair<int, int>{0, 1});
  CHECK(full.edge(3) == std::pair<int, int>{1, 0});
  CHECK(full.audit_max_pos() == 3);
  full.reset_audit();
  CHECK(full.audit_max_pos() == -1);

  auto half = TotalOrderView::derive(inst, 0.5);
  REQUIRE(half.prefix_len() == 2);
  CHECK(half.edge(1) == std::pair<int, int>{1, 1});
  CHECK_THROWS_AS(half.edge(2), BudgetViolation);
  CHECK(half.audit_max_pos() == 1);
}

TEST_CASE("views reject alpha outside the unit interval") {
  auto inst = swap_instance();
  CHECK_THROWS_AS(OneSidedView::derive(inst, -0.1), ValidationError);
  CHECK_THROWS_AS(OneSidedView::derive(inst, 1.1), ValidationError);
  CHECK_THROWS_AS(TwoSidedView::derive(inst, 2.0), ValidationError);
  CHECK_THROWS_AS(TotalOrderView::derive(inst, -1.0), ValidationError);
}
