#include "saddle/generate.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace saddle {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Odd multiples of 2^-54: strictly inside (0, 1), and 2u - 1 is never 0.
double unit(std::uint64_t h) { return (static_cast<double>(h >> 11) + 0.5) * 0x1p-53; }

std::vector<std::size_t> shuffled(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  std::mt19937_64 rng(seed);
  // Explicit Fisher-Yates: std::shuffle's output is implementation-defined.
  for (std::size_t i = n; i > 1; --i) std::swap(v[i - 1], v[rng() % i]);
  return v;
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::planted_ssp: return "planted-ssp";
    case Family::planted_sp: return "planted-sp";
    case Family::no_sp: return "no-sp";
    case Family::random: return "random";
    case Family::constant: return "constant";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::planted_ssp, Family::planted_sp, Family::no_sp, Family::random,
                   Family::constant})
    if (name == to_string(f)) return f;
  return std::nullopt;
}

GeneratedMatrix::GeneratedMatrix(const GeneratorSpec& spec) : spec_(spec) {
  if (spec_.rows == 0 || spec_.cols == 0) throw ContractError("matrix dimensions must be positive");
  const std::uint64_t s = splitmix64(spec_.seed ^ 0x5AD1E5AD1EULL);
  pivot_row_ = splitmix64(s + 1) % spec_.rows;
  pivot_col_ = splitmix64(s + 2) % spec_.cols;
  constant_ = 2.0 * unit(splitmix64(s + 3)) - 1.0;

  switch (spec_.family) {
    case Family::planted_sp: {
      const std::size_t cap = std::min(spec_.rows, spec_.cols);
      if (spec_.multiplicity == 0) spec_.multiplicity = std::min<std::size_t>(4, cap);
      if (spec_.multiplicity > cap)
        throw ContractError("planted-sp multiplicity exceeds min(rows, cols)");
      marked_cols_.assign(spec_.cols, false);
      auto order = shuffled(spec_.cols, s + 4);
      for (std::size_t k = 0; k < spec_.multiplicity; ++k) marked_cols_[order[k]] = true;
      break;
    }
    case Family::no_sp: {
      if (spec_.rows < 2 || spec_.cols < 2)
        throw ContractError("no-sp needs at least two rows and two columns");
      // Rows <= cols: each row gets its own column; otherwise each column its own row.
      const std::size_t big = std::max(spec_.rows, spec_.cols);
      const std::size_t small = std::min(spec_.rows, spec_.cols);
      assignment_ = shuffled(big, s + 5);
      assignment_.resize(small);
      break;
    }
    default:
      break;
  }
}

double GeneratedMatrix::uniform(std::size_t i, std::size_t j) const {
  const std::uint64_t h =
      splitmix64(splitmix64(spec_.seed + 0x632BE59BD9B4E019ULL * (i + 1)) ^ (j * 0x85EBCA77C2B2AE63ULL));
  return unit(h);
}

Value GeneratedMatrix::at(std::size_t i, std::size_t j) const {
  switch (spec_.family) {
    case Family::planted_ssp:
      if (i == pivot_row_ && j == pivot_col_) return Value{0.0};
      if (i == pivot_row_) return Value{-uniform(i, j)};
      if (j == pivot_col_) return Value{uniform(i, j)};
      break;
    case Family::planted_sp:
      if (i == pivot_row_) return Value{marked_cols_[j] ? 0.0 : -uniform(i, j)};
      if (marked_cols_[j]) return Value{uniform(i, j)};
      break;
    case Family::no_sp:
      if (spec_.rows <= spec_.cols) {
        if (assignment_[i] == j) return Value{1.0 + uniform(i, j)};
      } else if (assignment_[j] == i) {
        return Value{-1.0 - uniform(i, j)};
      }
      break;
    case Family::constant:
      return Value{constant_};
    case Family::random:
      break;
  }
  return Value{2.0 * uniform(i, j) - 1.0};
}

std::optional<Position> GeneratedMatrix::planted_ssp() const {
  if (spec_.family == Family::planted_ssp) return Position{pivot_row_, pivot_col_};
  if (spec_.family == Family::planted_sp && spec_.multiplicity == 1) return planted_sps().front();
  return std::nullopt;
}

std::vector<Position> GeneratedMatrix::planted_sps() const {
  std::vector<Position> out;
  if (spec_.family == Family::planted_ssp) out.push_back({pivot_row_, pivot_col_});
  if (spec_.family == Family::planted_sp)
    for (std::size_t j = 0; j < spec_.cols; ++j)
      if (marked_cols_[j]) out.push_back({pivot_row_, j});
  return out;
}

MatrixView generate(const GeneratorSpec& spec) { return MatrixView::of(GeneratedMatrix(spec)); }

}  // namespace saddle
