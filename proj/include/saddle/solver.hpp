#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "saddle/matrix_view.hpp"
#include "saddle/outcome.hpp"
#include "saddle/recursive_psp.hpp"

namespace saddle {

enum class Algorithm { automatic, baseline, simple, fast, alternative };

std::string_view to_string(Algorithm a);
/// Accepts "auto", "baseline", "simple", "fast", "alt"/"alternative".
std::optional<Algorithm> parse_algorithm(std::string_view name);

struct SolveStats {
  std::uint64_t queries = 0;
  std::uint64_t comparisons = 0;
  std::chrono::nanoseconds elapsed{0};
  Algorithm algorithm = Algorithm::automatic;
  std::size_t rows = 0;
  std::size_t cols = 0;
};

struct SspResult {
  SspOutcome outcome;
  SolveStats stats;
};

/// Strict saddlepoint decision: PSP value s via the selected algorithm, then
/// test_value(a, s). `alternative` only applies to square inputs; other
/// shapes take the default path.
SspResult find_ssp(const MatrixView& a, Algorithm algo = Algorithm::automatic,
                   const PspOptions& options = {});

struct PspResult {
  Entry entry;
  SolveStats stats;
};

/// Pseudo-saddlepoint with the selected core. `alternative` is rejected with
/// ContractError: it decides SSPs and does not produce a PSP.
PspResult find_psp(const MatrixView& a, Algorithm algo = Algorithm::automatic,
                   const PspOptions& options = {});

struct SpValue {
  Entry entry;                   // a PSP; its value is the SP value if one exists
  bool assumption_checked = false;  // always false: checking needs Omega(mn)
};

/// Value of the (non-strict) saddlepoint under the caller's promise that one
/// exists. If the promise is false the result is merely some PSP.
SpValue sp_value_assuming_exists(const MatrixView& a);

/// Saddlepoints of value `s` reachable through the columns in which the
/// horizontal staircase walk meets `s`; O(k(m + n)) for k occurrences of s.
/// Empty when no saddlepoint of value s exists.
std::vector<Entry> locate_sp(const MatrixView& a, Value s);

}  // namespace saddle
