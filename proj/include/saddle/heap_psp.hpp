#pragma once

#include <concepts>
#include <cstddef>
#include <type_traits>
#include <set>
#include <span>
#include <vector>

#include "saddle/matrix_view.hpp"

namespace saddle {

/// A (row, col, value) record of the active set. `row`/`col` are local to
/// the matrix being reduced; `entry` carries the value and its root position.
struct Triplet {
  std::size_t row = 0;
  std::size_t col = 0;
  Entry entry;

  [[nodiscard]] Value value() const { return entry.value; }
};

/// Ordered triplet set with min and max access, ordered by (value, row, col).
/// Holds at most one triplet per row and per column; inserting a second one
/// throws ContractError.
class ActiveSet {
 public:
  ActiveSet(Order order, std::size_t rows, std::size_t cols);

  [[nodiscard]] std::size_t size() const { return set_.size(); }
  [[nodiscard]] bool empty() const { return set_.empty(); }
  [[nodiscard]] const Triplet& min() const { return *set_.begin(); }
  [[nodiscard]] const Triplet& max() const { return *set_.rbegin(); }
  [[nodiscard]] const Order& order() const { return order_; }

  void insert(const Triplet& t);
  void pop_min();
  void pop_max();

  [[nodiscard]] bool has_row(std::size_t r) const { return row_used_[r]; }
  [[nodiscard]] bool has_col(std::size_t c) const { return col_used_[c]; }
  [[nodiscard]] std::vector<Triplet> triplets() const { return {set_.begin(), set_.end()}; }

 private:
  struct Less {
    Order order;
    bool operator()(const Triplet& a, const Triplet& b) const {
      if (order.less(a.value(), b.value())) return true;
      if (order.less(b.value(), a.value())) return false;
      if (a.row != b.row) return a.row < b.row;
      return a.col < b.col;
    }
  };

  void erase(std::set<Triplet, Less>::iterator it);

  Order order_;
  std::set<Triplet, Less> set_;
  std::vector<bool> row_used_;
  std::vector<bool> col_used_;
};

enum class ReduceCase { drop_max = 1, drop_min = 2, replace_both = 3 };

/// One reduction: query the entry at (row of the min triplet, column of the
/// max triplet) through `at(i, j) -> Entry` and shrink the set by one while
/// keeping properties P1-P3. Case 1 (q <= min) is tested before Case 2
/// (q >= max).
template <class Access>
  requires std::convertible_to<std::invoke_result_t<Access&, std::size_t, std::size_t>, Entry>
ReduceCase reduce_step(ActiveSet& h, Access&& at) {
  if (h.size() < 2) throw ContractError("reduce_step needs at least two triplets");
  const Triplet lo = h.min();
  const Triplet hi = h.max();
  const Entry q = at(lo.row, hi.col);
  const Order& order = h.order();
  if (order.less_equal(q.value, lo.value())) {
    h.pop_max();
    return ReduceCase::drop_max;
  }
  if (order.less_equal(hi.value(), q.value)) {
    h.pop_min();
    return ReduceCase::drop_min;
  }
  h.pop_min();
  h.pop_max();
  h.insert({lo.row, hi.col, q});
  return ReduceCase::replace_both;
}

ReduceCase reduce_step(ActiveSet& h, const MatrixView& a);

/// Runs reduce_step until one triplet is left and returns it.
template <class Access>
Triplet reduce_to_one(ActiveSet& h, Access&& at) {
  if (h.empty()) throw ContractError("empty active set");
  while (h.size() > 1) reduce_step(h, at);
  return h.min();
}

/// Diagonal-seeded active set for a square view: n base queries.
ActiveSet diagonal_set(const MatrixView& a);

/// Baseline PSP of a square matrix: at most 2n - 1 base queries,
/// O(n lg n) time. Throws ContractError on non-square input.
Entry psp_baseline(const MatrixView& a);

/// Same, but the diagonal entries are supplied by the caller (in local
/// diagonal order) instead of being queried.
Entry psp_baseline(const MatrixView& a, std::span<const Entry> diagonal);

}  // namespace saddle
