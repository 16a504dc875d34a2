#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "saddle/generate.hpp"
#include "saddle/solver.hpp"

namespace saddle {

/// Pinned query-budget constants, measured once at n = 4096 (random
/// instance, seed 1; planted-sp with k = 1 for locate) as queries divided by
/// the growth term, times 1.5, rounded up. Frozen; the acceptance suite and
/// `bench` check against them.
namespace budget {

inline constexpr double kSimple = 0.548;      // queries <= kSimple * n * 2^{lg* n}
inline constexpr double kFast = 1.942;        // queries <= kFast * n * lg* n
inline constexpr double kAlternative = 4.933; // queries <= kAlternative * n * (lg lg n + 1)
inline constexpr double kLocate = 3.67;       // extra queries <= kLocate * k * (m + n)

std::uint64_t baseline(std::size_t n);  // 2n - 1, exact
double simple(std::size_t n);
double fast(std::size_t n);
double alternative(std::size_t n);
/// Rectangular PSP: kFast * lg*(n) * n * ceil(m/n) + ceil(m/n), m >= n after
/// orientation.
double rect(std::size_t m, std::size_t n);
double locate(std::size_t k, std::size_t m, std::size_t n);
/// Queries allowed for find_ssp with `algo` on an m x n instance: the PSP
/// budget plus 3(m + n) for the final feasibility test.
double solve(Algorithm algo, std::size_t m, std::size_t n);

}  // namespace budget

/// One (instance, algorithm) cell of a benchmark run.
struct BenchRecord {
  std::string algorithm;
  std::size_t m = 0;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string family;
  std::uint64_t queries = 0;
  std::uint64_t comparisons = 0;
  std::int64_t elapsed_ns = 0;
  std::string outcome;  // "ssp_found r c" (1-based) or "no_ssp"
};

struct BenchConfig {
  std::vector<std::size_t> sizes;
  std::vector<Family> families;
  std::vector<Algorithm> algorithms;
  std::uint64_t seed = 1;
};

/// Runs every (size, family, algorithm) cell on a fresh n x n generated
/// instance with its own root, sequentially.
std::vector<BenchRecord> run_bench(const BenchConfig& config);

/// CSV with header
/// algorithm,m,n,seed,family,queries,comparisons,elapsed_ns,outcome
void write_csv(std::ostream& out, std::span<const BenchRecord> records);

struct BudgetCheck {
  const BenchRecord* record = nullptr;
  double limit = 0.0;
  bool ok = true;
};

std::vector<BudgetCheck> check_budgets(std::span<const BenchRecord> records);

}  // namespace saddle
