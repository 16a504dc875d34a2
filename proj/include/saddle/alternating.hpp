#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "saddle/matrix_view.hpp"
#include "saddle/outcome.hpp"
#include "saddle/staircase.hpp"

namespace saddle {

/// Rows and columns of the input view that may still hold the strict
/// saddlepoint. Both lists are ascending local indices of the input view.
struct AliveRegion {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;

  static AliveRegion full(const MatrixView& a);
  [[nodiscard]] bool empty() const { return rows.empty() || cols.empty(); }
  [[nodiscard]] std::size_t long_side() const { return std::max(rows.size(), cols.size()); }
  [[nodiscard]] std::size_t short_side() const { return std::min(rows.size(), cols.size()); }
  /// The region as a view oriented so that it is at least as tall as wide
  /// (reflected when the region is wide).
  [[nodiscard]] MatrixView oriented(const MatrixView& a) const;
  [[nodiscard]] bool flipped() const { return rows.size() < cols.size(); }
};

/// Result of one parametric elimination step. `verdict` is set when the
/// step ended the search (found, with `found_local` in input-view
/// coordinates, or no_ssp).
struct PhaseStep {
  std::optional<Verdict> verdict;
  std::optional<Position> found_local;
  std::size_t removed_rows = 0;
  std::size_t removed_cols = 0;
};

/// Probes one entry per long-side line along the stretched diagonal, tests
/// the median of those probes with `test_value`, and drops the lines the
/// verdict rules out. O(m' + n') queries.
PhaseStep phase1_step(AliveRegion& region, const MatrixView& a);

/// One heap-driven pass shrinking the long side; a no-op when the long side
/// is at most four times the short side. Throws ContractError when the short
/// side exceeds N / lg N for N the larger input dimension. Returns the number
/// of lines removed.
std::size_t phase2_pass(AliveRegion& region, const MatrixView& a);

struct AlternativeTrace {
  std::size_t phase1_steps = 0;
  std::size_t phase2_passes = 0;
  bool fell_back = false;
};

/// Step cap per phase: 4 * ceil(lg lg n) + 16.
std::size_t alternative_step_cap(std::size_t n);

/// Two-phase elimination solver for square inputs, O(n lg lg n).
SspOutcome ssp_alternative(const MatrixView& a, AlternativeTrace* trace = nullptr);

}  // namespace saddle
