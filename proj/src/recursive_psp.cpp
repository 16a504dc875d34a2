#include "saddle/recursive_psp.hpp"

#include <bit>
#include <cmath>
#include <unordered_map>

#include "saddle/selection.hpp"

namespace saddle {

std::size_t lg_star(std::uint64_t n) {
  std::size_t count = 0;
  double x = static_cast<double>(n);
  while (x > 1.0) {
    x = std::log2(x);
    ++count;
  }
  return count;
}

std::size_t ceil_lg(std::uint64_t n) {
  if (n <= 1) return 0;
  return static_cast<std::size_t>(std::bit_width(n - 1));
}

BlockDecomposition decompose(std::size_t n) {
  if (n == 0) throw ContractError("decompose: empty range");
  BlockDecomposition d;
  d.side = std::max<std::size_t>(1, ceil_lg(n));
  for (std::size_t s = 0; s + d.side <= n; s += d.side) d.starts.push_back(s);
  if (n % d.side != 0) d.starts.push_back(n - d.side);
  return d;
}

const DiagonalSection* TransformState::section_of(std::size_t i) const {
  if (i >= untouched_begin) return nullptr;
  // Sections are contiguous from 0 and halve in length; a linear scan over
  // at most lg n sections is fine.
  for (const auto& s : sections)
    if (i >= s.begin && i < s.begin + s.length) return &s;
  return nullptr;
}

TransformState transform(const MatrixView& a, std::size_t threshold) {
  if (!a.square()) throw ContractError("transform requires a square matrix");
  const std::size_t n = a.rows();
  TransformState state{PermutedView(a), threshold, {}, 0};
  PermutedView& layer = state.layer;
  const MatrixView b = layer.view();
  const Order order = b.order();

  std::vector<Entry> anti;
  std::vector<Value> values;
  std::size_t lo = 0;
  while (n - lo > threshold) {
    const std::size_t s = n - lo;
    // Antidiagonal position p of the quadrant sits at (lo + s-1-p, lo + p).
    anti.resize(s);
    values.resize(s);
    for (std::size_t p = 0; p < s; ++p) {
      anti[p] = b.get_entry(lo + s - 1 - p, lo + p);
      values[p] = anti[p].value;
    }
    const std::size_t k = (s + 1) / 2;
    const Value v = select_rank(values, k, order);

    auto swap_positions = [&](std::size_t p, std::size_t q) {
      if (p == q) return;
      layer.swap_rows(lo + s - 1 - p, lo + s - 1 - q);
      layer.swap_cols(lo + p, lo + q);
      std::swap(anti[p], anti[q]);
    };
    // < v | == v | > v; position k-1 lands inside the middle block.
    std::size_t lt = 0, cur = 0, gt = s;
    while (cur < gt) {
      if (order.less(anti[cur].value, v)) {
        swap_positions(lt++, cur++);
      } else if (order.less(v, anti[cur].value)) {
        swap_positions(cur, --gt);
      } else {
        ++cur;
      }
    }
    if (k - 1 < lt || k - 1 >= gt) throw InternalError("antidiagonal partition misplaced the median");

    const Entry median = anti[k - 1];
    for (std::size_t i = 0; i < k; ++i) layer.overlay_diagonal(lo + i, median);
    state.sections.push_back({lo, k, median});
    lo += k;
  }
  state.untouched_begin = lo;
  return state;
}

namespace {

Entry psp_simple_rec(const MatrixView& a, const PspOptions& opt, std::size_t depth) {
  const std::size_t n = a.rows();
  if (n <= opt.cutoff || (opt.max_depth && depth >= *opt.max_depth)) return psp_baseline(a);

  const BlockDecomposition d = decompose(n);
  const std::size_t blocks = d.count();
  std::unordered_map<std::size_t, Entry> memo;
  auto at = [&](std::size_t bi, std::size_t bj) -> Entry {
    const std::size_t key = bi * blocks + bj;
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Entry e = psp_simple_rec(a.block(d.starts[bi], d.side, d.starts[bj], d.side), opt, depth + 1);
    memo.emplace(key, e);
    return e;
  };

  ActiveSet h(a.order(), blocks, blocks);
  for (std::size_t bi = 0; bi < blocks; ++bi) h.insert({bi, bi, at(bi, bi)});
  return reduce_to_one(h, at).entry;
}

Entry psp_fast_rec(const MatrixView& a, const PspOptions& opt, std::size_t depth) {
  const std::size_t n = a.rows();
  if (n <= opt.cutoff || (opt.max_depth && depth >= *opt.max_depth)) return psp_baseline(a);

  const BlockDecomposition d = decompose(n);
  const std::size_t side = d.side;
  const std::size_t blocks = d.count();
  const TransformState t = transform(a, 2 * side);
  const MatrixView b = t.view();

  // PSPs of the diagonal boxes: a box whose diagonal is one median run has
  // that median as a PSP; the rest go through the baseline.
  std::unordered_map<std::size_t, Entry> memo;
  ActiveSet h(b.order(), blocks, blocks);
  for (std::size_t bi = 0; bi < blocks; ++bi) {
    const std::size_t s = d.starts[bi];
    const DiagonalSection* sec = t.section_of(s);
    Entry e;
    if (sec && s + side <= sec->begin + sec->length)
      e = sec->median;
    else
      e = psp_baseline(b.block(s, side, s, side));
    memo.emplace(bi * blocks + bi, e);
    h.insert({bi, bi, e});
  }

  auto at = [&](std::size_t bi, std::size_t bj) -> Entry {
    const std::size_t key = bi * blocks + bj;
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Entry e = psp_fast_rec(b.block(d.starts[bi], side, d.starts[bj], side), opt, depth + 1);
    memo.emplace(key, e);
    return e;
  };
  return reduce_to_one(h, at).entry;
}

}  // namespace

Entry psp_square_simple(const MatrixView& a, const PspOptions& options) {
  if (!a.square()) throw ContractError("psp_square_simple requires a square matrix");
  return psp_simple_rec(a, options, 0);
}

Entry psp_square_fast(const MatrixView& a, const PspOptions& options) {
  if (!a.square()) throw ContractError("psp_square_fast requires a square matrix");
  return psp_fast_rec(a, options, 0);
}

Entry psp_square(const MatrixView& a, SquareCore core, const PspOptions& options) {
  switch (core) {
    case SquareCore::baseline: return psp_baseline(a);
    case SquareCore::simple: return psp_square_simple(a, options);
    case SquareCore::fast: return psp_square_fast(a, options);
  }
  throw ContractError("unknown square core");
}

Entry psp_rect(const MatrixView& a, SquareCore core, const PspOptions& options) {
  if (a.rows() < a.cols()) return psp_rect(a.reflect(), core, options);
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (m == n) return psp_square(a, core, options);

  const Order order = a.order();
  std::optional<Entry> best;
  auto consider = [&](std::size_t row0) {
    Entry e = psp_square(a.block(row0, n, 0, n), core, options);
    if (!best || order.less(e.value, best->value)) best = e;
  };
  for (std::size_t r = 0; r + n <= m; r += n) consider(r);
  if (m % n != 0) consider(m - n);
  return *best;
}

}  // namespace saddle
