#include "saddle/alternating.hpp"

#include <algorithm>
#include <cmath>

#include "saddle/recursive_psp.hpp"
#include "saddle/selection.hpp"

namespace saddle {
namespace {

std::vector<std::size_t> iota_vec(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

// Lists indexed like the oriented view: its rows and its columns.
std::vector<std::size_t>& long_list(AliveRegion& r) { return r.flipped() ? r.cols : r.rows; }
std::vector<std::size_t>& short_list(AliveRegion& r) { return r.flipped() ? r.rows : r.cols; }

Position to_input(const AliveRegion& r, bool flipped, std::size_t i, std::size_t j) {
  return flipped ? Position{r.rows[j], r.cols[i]} : Position{r.rows[i], r.cols[j]};
}

void erase_marked(std::vector<std::size_t>& list, const std::vector<bool>& drop) {
  std::size_t out = 0;
  for (std::size_t k = 0; k < list.size(); ++k)
    if (!drop[k]) list[out++] = list[k];
  list.resize(out);
}

double lg(std::size_t n) { return std::log2(static_cast<double>(n)); }

// Largest short side at which phase 2 may start: n / lg n.
std::size_t phase2_limit(std::size_t n) {
  if (n <= 2) return n;
  return static_cast<std::size_t>(std::floor(static_cast<double>(n) / lg(n)));
}

SspOutcome confirm(const MatrixView& a, Position p) {
  if (!verify_ssp_candidate(a, p.row, p.col)) return SspOutcome::absent();
  return SspOutcome::at(a.entry(p.row, p.col), p);
}

SspOutcome main_path(const MatrixView& a) {
  const Entry s = psp_rect(a, SquareCore::fast);
  SearchVerdict v = test_value(a, s.value);
  if (v.kind != Verdict::found) return SspOutcome::absent();
  return SspOutcome::at(*v.ssp, *v.ssp_local);
}

}  // namespace

AliveRegion AliveRegion::full(const MatrixView& a) { return {iota_vec(a.rows()), iota_vec(a.cols())}; }

MatrixView AliveRegion::oriented(const MatrixView& a) const {
  MatrixView v = a.subview(rows, cols);
  return flipped() ? v.reflect() : v;
}

PhaseStep phase1_step(AliveRegion& region, const MatrixView& a) {
  if (region.empty()) throw ContractError("phase1_step on an empty region");
  const bool flipped = region.flipped();
  const MatrixView v = region.oriented(a);
  const Order order = v.order();
  const std::size_t m = v.rows();
  const std::size_t n = v.cols();

  // D: row i probes column ceil((i+1) n / m) - 1.
  std::vector<std::size_t> probe_col(m);
  std::vector<Value> probes(m);
  for (std::size_t i = 0; i < m; ++i) {
    probe_col[i] = ((i + 1) * n + m - 1) / m - 1;
    probes[i] = v.get(i, probe_col[i]);
  }
  const Value pivot = select_rank(probes, (m + 1) / 2, order);
  const SearchVerdict verdict = test_value(v, pivot);

  PhaseStep step;
  switch (verdict.kind) {
    case Verdict::found:
      step.verdict = Verdict::found;
      step.found_local = to_input(region, flipped, verdict.ssp_local->row, verdict.ssp_local->col);
      return step;
    case Verdict::no_ssp:
      step.verdict = Verdict::no_ssp;
      return step;
    case Verdict::ssp_greater: {
      // Columns holding a probe <= pivot cannot contain a larger SSP.
      std::vector<bool> drop(n, false);
      for (std::size_t i = 0; i < m; ++i)
        if (order.less_equal(probes[i], pivot)) drop[probe_col[i]] = true;
      auto removed = static_cast<std::size_t>(std::count(drop.begin(), drop.end(), true));
      erase_marked(short_list(region), drop);
      (flipped ? step.removed_rows : step.removed_cols) = removed;
      return step;
    }
    case Verdict::ssp_less: {
      std::vector<bool> drop(m, false);
      for (std::size_t i = 0; i < m; ++i)
        if (order.greater_equal(probes[i], pivot)) drop[i] = true;
      auto removed = static_cast<std::size_t>(std::count(drop.begin(), drop.end(), true));
      erase_marked(long_list(region), drop);
      (flipped ? step.removed_cols : step.removed_rows) = removed;
      return step;
    }
  }
  throw InternalError("unreachable verdict");
}

std::size_t phase2_pass(AliveRegion& region, const MatrixView& a) {
  if (region.empty()) throw ContractError("phase2_pass on an empty region");
  const std::size_t big = std::max(a.rows(), a.cols());
  if (region.short_side() > phase2_limit(big))
    throw ContractError("phase2_pass: short side exceeds N / lg N");
  const std::size_t m = region.long_side();
  const std::size_t n = region.short_side();
  if (m <= 4 * n) return 0;

  const MatrixView v = region.oriented(a);
  const Order order = v.order();
  const std::size_t batch = m / (2 * n);

  struct Witness {
    Value value;
    std::size_t col;
    std::size_t row;
  };
  // Max-heap on value; equal values pop the smaller column first.
  auto heap_less = [&](const Witness& x, const Witness& y) {
    if (order.less(x.value, y.value)) return true;
    if (order.less(y.value, x.value)) return false;
    return x.col > y.col;
  };

  std::vector<std::vector<std::size_t>> groups(n);
  std::size_t cursor = 0;  // rows [0, cursor) have been assigned this pass
  auto draw = [&](std::size_t j) {
    groups[j].clear();
    while (groups[j].size() < batch && cursor < m) groups[j].push_back(cursor++);
  };
  auto minimum = [&](std::size_t j) {
    Witness w{v.get(groups[j][0], j), j, groups[j][0]};
    for (std::size_t k = 1; k < groups[j].size(); ++k) {
      const Value q = v.get(groups[j][k], j);
      if (order.less(q, w.value)) w = {q, j, groups[j][k]};
    }
    return w;
  };

  std::vector<Witness> heap;
  heap.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    draw(j);
    heap.push_back(minimum(j));
  }
  std::make_heap(heap.begin(), heap.end(), heap_less);

  std::vector<bool> drop(m, false);
  for (std::size_t iter = 0; iter < n; ++iter) {
    std::pop_heap(heap.begin(), heap.end(), heap_less);
    const Witness top = heap.back();
    heap.pop_back();
    for (std::size_t r : groups[top.col])
      if (r != top.row) drop[r] = true;
    draw(top.col);
    heap.push_back(groups[top.col].empty() ? top : minimum(top.col));
    std::push_heap(heap.begin(), heap.end(), heap_less);
  }

  auto removed = static_cast<std::size_t>(std::count(drop.begin(), drop.end(), true));
  erase_marked(long_list(region), drop);
  return removed;
}

std::size_t alternative_step_cap(std::size_t n) {
  const std::size_t lglg = n > 2 ? static_cast<std::size_t>(std::ceil(lg(std::max(1.0, lg(n))))) : 0;
  return 4 * lglg + 16;
}

SspOutcome ssp_alternative(const MatrixView& a, AlternativeTrace* trace) {
  if (!a.square()) throw ContractError("ssp_alternative requires a square matrix");
  AlternativeTrace local_trace;
  AlternativeTrace& tr = trace ? *trace : local_trace;
  tr = {};

  const std::size_t n = a.rows();
  const std::size_t cap = alternative_step_cap(n);
  const std::size_t limit = phase2_limit(n);
  AliveRegion region = AliveRegion::full(a);

  while (region.short_side() > limit) {
    if (tr.phase1_steps == cap) {
      tr.fell_back = true;
      return main_path(a);
    }
    ++tr.phase1_steps;
    const PhaseStep step = phase1_step(region, a);
    if (step.verdict == Verdict::found) return confirm(a, *step.found_local);
    if (step.verdict == Verdict::no_ssp) return SspOutcome::absent();
    if (region.empty()) return SspOutcome::absent();
  }

  while (region.long_side() > 4 * region.short_side()) {
    if (tr.phase2_passes == cap) {
      tr.fell_back = true;
      return main_path(a);
    }
    ++tr.phase2_passes;
    phase2_pass(region, a);
  }

  const bool flipped = region.flipped();
  const MatrixView v = region.oriented(a);
  const Entry s = psp_rect(v, SquareCore::baseline);
  const SearchVerdict verdict = test_value(v, s.value);
  if (verdict.kind != Verdict::found) return SspOutcome::absent();
  return confirm(a, to_input(region, flipped, verdict.ssp_local->row, verdict.ssp_local->col));
}

}  // namespace saddle
