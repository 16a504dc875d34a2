#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "saddle/matrix_view.hpp"

namespace saddle {

/// Brute-force ground truth for a matrix. Ties in row maxima and column
/// minima resolve to the smallest index.
struct OracleReport {
  std::vector<Entry> row_maxima;  // one per row
  std::vector<Entry> col_minima;  // one per column
  Interval interval;
  std::vector<Entry> psp_entries;  // every entry with value in [C, R]
  std::vector<Entry> sp_entries;   // every (weak) saddlepoint
  std::optional<Entry> ssp;
  // Local coordinates of `ssp` in the scanned view.
  std::optional<Position> ssp_local;
  std::size_t psp_count = 0;
  std::size_t sp_count = 0;
};

struct OracleOptions {
  // When false only the counts are filled in, not the entry lists.
  bool collect_entries = true;
};

/// O(mn) scan through the view: m*n base queries, values cached for the
/// second pass.
OracleReport oracle_scan(const MatrixView& a, OracleOptions options = {});

/// True iff every row has an entry >= v and every column an entry <= v,
/// i.e. v lies in [C, R].
bool verify_psp(const MatrixView& a, Value v);

/// Knuth-style quadratic saddlepoint finder: all (weak) saddlepoints.
std::vector<Entry> quadratic_sp(const MatrixView& a);

/// Non-strict saddlepoint test for local (i, j) in O(m + n).
bool is_saddlepoint(const MatrixView& a, std::size_t i, std::size_t j);

}  // namespace saddle
