#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "saddle/matrix_view.hpp"

namespace saddle {

enum class Family { planted_ssp, planted_sp, no_sp, random, constant };

std::string_view to_string(Family f);
std::optional<Family> parse_family(std::string_view name);

struct GeneratorSpec {
  Family family = Family::random;
  std::size_t rows = 1;
  std::size_t cols = 1;
  std::uint64_t seed = 0;
  /// Number of tied saddlepoints for planted_sp; 0 picks min(4, rows, cols).
  std::size_t multiplicity = 0;
};

/// Deterministic instance computed entry by entry from (seed, i, j), so
/// matrices far larger than memory can be queried. Entries outside the
/// planted structure are uniform in (-1, 1) and never exactly 0.
///
///   planted_ssp  a[pi][pj] = 0, rest of row pi < 0, rest of column pj > 0.
///   planted_sp   row pr holds 0 in k columns and < 0 elsewhere; those k
///                columns are > 0 off row pr. Exactly k saddlepoints of value 0.
///   no_sp        one entry in (1, 2) per row in distinct columns (rows <=
///                cols), or one entry in (-2, -1) per column in distinct rows.
///   random       i.i.d. uniform.
///   constant     every entry equal.
///
/// Throws ContractError for infeasible parameters (zero size, multiplicity
/// above min(rows, cols), no_sp with a side of 1).
class GeneratedMatrix final : public MatrixSource {
 public:
  explicit GeneratedMatrix(const GeneratorSpec& spec);

  [[nodiscard]] std::size_t rows() const override { return spec_.rows; }
  [[nodiscard]] std::size_t cols() const override { return spec_.cols; }
  [[nodiscard]] Value at(std::size_t i, std::size_t j) const override;

  [[nodiscard]] const GeneratorSpec& spec() const { return spec_; }
  /// Planted strict saddlepoint (planted_ssp, and planted_sp with k = 1).
  [[nodiscard]] std::optional<Position> planted_ssp() const;
  /// Planted saddlepoints (planted_ssp and planted_sp), ascending.
  [[nodiscard]] std::vector<Position> planted_sps() const;
  /// Value of the planted saddlepoints.
  [[nodiscard]] Value planted_value() const { return Value{0.0}; }

 private:
  [[nodiscard]] double uniform(std::size_t i, std::size_t j) const;  // (0, 1)

  GeneratorSpec spec_;
  std::size_t pivot_row_ = 0;
  std::size_t pivot_col_ = 0;
  std::vector<std::size_t> assignment_;  // no_sp: row -> col or col -> row
  std::vector<bool> marked_cols_;        // planted_sp
  double constant_ = 0.0;
};

MatrixView generate(const GeneratorSpec& spec);

}  // namespace saddle
