#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "saddle/heap_psp.hpp"
#include "saddle/matrix_view.hpp"

namespace saddle {

/// Iterated binary logarithm: 0 for n <= 1, else 1 + lg*(lg n).
std::size_t lg_star(std::uint64_t n);

/// ceil(lg n) for n >= 1.
std::size_t ceil_lg(std::uint64_t n);

/// Covering of [0, n) by intervals of length `side` = max(1, ceil(lg n)):
/// aligned intervals [k*side, (k+1)*side) plus, when side does not divide
/// n, a last interval [n - side, n) overlapping its predecessor.
struct BlockDecomposition {
  std::size_t side = 1;
  std::vector<std::size_t> starts;

  [[nodiscard]] std::size_t count() const { return starts.size(); }
};

BlockDecomposition decompose(std::size_t n);

/// One median-filled run of the diagonal written by `transform`.
struct DiagonalSection {
  std::size_t begin = 0;
  std::size_t length = 0;
  Entry median;  // value copied onto the run, with its root position
};

/// Result of the antidiagonal-median preprocessing: a permutation layer with
/// a diagonal overlay, plus where the uniform diagonal runs ended up.
struct TransformState {
  PermutedView layer;
  std::size_t threshold = 0;
  std::vector<DiagonalSection> sections;
  std::size_t untouched_begin = 0;  // diagonal [untouched_begin, n) is original

  [[nodiscard]] MatrixView view() const { return layer.view(); }
  /// Section holding diagonal index i, or nullptr if i is in the untouched tail.
  [[nodiscard]] const DiagonalSection* section_of(std::size_t i) const;
};

/// Repeatedly partitions the antidiagonal of the current bottom-right
/// quadrant around its median (rank ceil(s/2)) using paired row/column
/// swaps, copies the median onto the first ceil(s/2) diagonal positions and
/// descends into the remaining quadrant, until the quadrant side is <= t.
/// Reads each quadrant antidiagonal once; never widens the PSP interval.
TransformState transform(const MatrixView& a, std::size_t threshold);

struct PspOptions {
  /// Subproblems of side <= cutoff go straight to the baseline.
  std::size_t cutoff = 8;
  /// Recursion depth after which blocks are solved by the baseline.
  std::optional<std::size_t> max_depth;
};

/// Block recursion without preprocessing: the baseline runs over the matrix
/// of block PSPs, each block solved recursively on demand and memoized.
Entry psp_square_simple(const MatrixView& a, const PspOptions& options = {});

/// Block recursion with `transform` preprocessing: diagonal boxes are solved
/// up front (mostly for free) and only off-diagonal blocks recurse.
Entry psp_square_fast(const MatrixView& a, const PspOptions& options = {});

enum class SquareCore { baseline, simple, fast };

/// PSP of an arbitrary m x n matrix: reflect wide inputs, cut tall ones into
/// ceil(m/n) square chunks (the last one overlapping) and keep the chunk PSP
/// of minimum value.
Entry psp_rect(const MatrixView& a, SquareCore core = SquareCore::fast,
               const PspOptions& options = {});

/// PSP of a square matrix with the selected core.
Entry psp_square(const MatrixView& a, SquareCore core, const PspOptions& options = {});

}  // namespace saddle
