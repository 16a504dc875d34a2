#pragma once

#include <cstddef>
#include <optional>

#include "saddle/matrix_view.hpp"

namespace saddle {

enum class SearchMode { horizontal, vertical };

/// Outcome of one monotone walk from (0, 0). `row`/`col` is the exit
/// position, so one of them equals rows()/cols().
struct StaircasePath {
  SearchMode mode = SearchMode::horizontal;
  bool success = false;
  std::size_t row = 0;
  std::size_t col = 0;
  std::size_t steps = 0;
};

enum class Verdict {
  found,        // the strict saddlepoint has the probed value
  no_ssp,       // the matrix has no strict saddlepoint
  ssp_greater,  // a strict saddlepoint, if any, is larger than the probe
  ssp_less,     // a strict saddlepoint, if any, is smaller than the probe
};

struct SearchVerdict {
  Verdict kind = Verdict::no_ssp;
  std::optional<Entry> ssp;            // root coordinates, set iff found
  std::optional<Position> ssp_local;   // coordinates in the tested view
};

const char* to_string(Verdict v);

/// Walk right on q <= s and down on s < q; succeeds when leaving through the
/// right edge. `visit(i, j, q)` sees every queried entry.
template <class Visit>
StaircasePath horizontal_search(const MatrixView& a, Value s, Visit&& visit) {
  const Order order = a.order();
  StaircasePath path{SearchMode::horizontal};
  std::size_t i = 0, j = 0;
  while (i < a.rows() && j < a.cols()) {
    const Value q = a.get(i, j);
    visit(i, j, q);
    ++path.steps;
    if (order.less(s, q))
      ++i;
    else
      ++j;
  }
  path.row = i;
  path.col = j;
  path.success = j >= a.cols();
  return path;
}

StaircasePath horizontal_search(const MatrixView& a, Value s);

/// Walk down on s <= q and right otherwise; succeeds when leaving through the
/// bottom edge.
StaircasePath vertical_search(const MatrixView& a, Value s);

/// Strict row maximum and strict column minimum test for local (i, j).
/// Reads the whole row and column: exactly m + n - 2 comparisons.
bool verify_ssp_candidate(const MatrixView& a, std::size_t i, std::size_t j);

/// Four-way feasibility test for probe value `s` in O(m + n).
/// Throws InternalError if both walks fail.
SearchVerdict test_value(const MatrixView& a, Value s);

}  // namespace saddle
