#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "saddle/matrix_view.hpp"

namespace fixtures {

// 9x9 example with a strict saddlepoint at (4, 4) (0-based), value 0.
inline saddle::DenseMatrix saddle9() {
  return {
      {-0.08, 0.55, 0.98, 1.21, 1.24, 1.07, 0.7, 0.13, -0.64},
      {-0.69, -0.06, 0.37, 0.6, 0.63, 0.46, 0.09, -0.48, -1.25},
      {-1.1, -0.47, -0.04, 0.19, 0.22, 0.05, -0.32, -0.89, -1.66},
      {-1.31, -0.68, -0.25, -0.02, 0.01, -0.16, -0.53, -1.1, -1.87},
      {-1.32, -0.69, -0.26, -0.03, 0, -0.17, -0.54, -1.11, -1.88},
      {-1.13, -0.5, -0.07, 0.16, 0.19, 0.02, -0.35, -0.92, -1.69},
      {-0.74, -0.11, 0.32, 0.55, 0.58, 0.41, 0.04, -0.53, -1.3},
      {-0.15, 0.48, 0.91, 1.14, 1.17, 1.0, 0.63, 0.06, -0.71},
      {0.64, 1.27, 1.7, 1.93, 1.96, 1.79, 1.42, 0.85, 0.08},
  };
}

// C = 2, R = 6, no saddlepoint.
inline saddle::DenseMatrix m3() { return {{0, 7, 5}, {6, 4, 2}, {3, 1, 8}}; }

inline saddle::MatrixView view(saddle::DenseMatrix m) {
  return saddle::MatrixView::of(std::move(m));
}

// Random m x n matrix; with `dup` the entries come from a small alphabet.
inline saddle::DenseMatrix random_dense(std::mt19937_64& rng, std::size_t m, std::size_t n,
                                        bool dup) {
  std::vector<double> data(m * n);
  std::uniform_int_distribution<int> small(0, 3);
  std::uniform_real_distribution<double> real(-1.0, 1.0);
  for (auto& x : data) x = dup ? small(rng) : real(rng);
  return saddle::DenseMatrix(m, n, std::move(data));
}

// The matrix whose entries are the bits of `mask`, row-major.
inline saddle::DenseMatrix bits(std::size_t m, std::size_t n, std::uint64_t mask) {
  std::vector<double> data(m * n);
  for (std::size_t k = 0; k < m * n; ++k) data[k] = static_cast<double>((mask >> k) & 1U);
  return saddle::DenseMatrix(m, n, std::move(data));
}

}  // namespace fixtures
