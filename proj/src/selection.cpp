#include "saddle/selection.hpp"

#include <utility>

namespace saddle {
namespace {

void insertion_sort(std::span<std::size_t> idx, std::span<const Value> v, const Order& order) {
  for (std::size_t a = 1; a < idx.size(); ++a) {
    std::size_t b = a;
    while (b > 0 && order.less(v[idx[b]], v[idx[b - 1]])) {
      std::swap(idx[b], idx[b - 1]);
      --b;
    }
  }
}

// Returns the index (into v) of the k-th smallest (0-based) among idx.
std::size_t select_in(std::span<std::size_t> idx, std::size_t k, std::span<const Value> v,
                      const Order& order) {
  for (;;) {
    const std::size_t n = idx.size();
    if (n <= 5) {
      insertion_sort(idx, v, order);
      return idx[k];
    }

    std::vector<std::size_t> medians;
    medians.reserve((n + 4) / 5);
    for (std::size_t g = 0; g < n; g += 5) {
      auto group = idx.subspan(g, std::min<std::size_t>(5, n - g));
      insertion_sort(group, v, order);
      medians.push_back(group[(group.size() - 1) / 2]);
    }
    const std::size_t pivot = select_in(medians, (medians.size() - 1) / 2, v, order);
    const Value p = v[pivot];

    // Three-way partition: [0, lt) < p, [lt, gt) == p, [gt, n) > p.
    std::size_t lt = 0, cur = 0, gt = n;
    while (cur < gt) {
      if (order.less(v[idx[cur]], p)) {
        std::swap(idx[lt++], idx[cur++]);
      } else if (order.less(p, v[idx[cur]])) {
        std::swap(idx[cur], idx[--gt]);
      } else {
        ++cur;
      }
    }

    if (k < lt) {
      idx = idx.first(lt);
    } else if (k < gt) {
      return idx[k];
    } else {
      k -= gt;
      idx = idx.subspan(gt);
    }
  }
}

}  // namespace

std::size_t select_rank_index(std::span<const Value> values, std::size_t k, const Order& order) {
  if (values.empty()) throw ContractError("select_rank on an empty sequence");
  if (k < 1 || k > values.size()) throw ContractError("select_rank: rank out of range");
  std::vector<std::size_t> idx(values.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return select_in(idx, k - 1, values, order);
}

Value select_rank(std::span<const Value> values, std::size_t k, const Order& order) {
  return values[select_rank_index(values, k, order)];
}

}  // namespace saddle
