#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "saddle/value.hpp"

namespace saddle {

/// k-th smallest (1-based, duplicates counted) under `order`, by
/// deterministic median-of-medians: worst-case linear comparisons.
/// Throws ContractError if `values` is empty or k is out of range.
Value select_rank(std::span<const Value> values, std::size_t k, const Order& order);

/// Position (0-based) of the k-th smallest element, with the same guarantee.
/// Ties resolve to an arbitrary but deterministic index.
std::size_t select_rank_index(std::span<const Value> values, std::size_t k, const Order& order);

}  // namespace saddle
