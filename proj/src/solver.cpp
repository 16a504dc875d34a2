#include "saddle/solver.hpp"

#include <algorithm>

#include "saddle/alternating.hpp"
#include "saddle/oracle.hpp"
#include "saddle/staircase.hpp"

namespace saddle {

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::automatic: return "auto";
    case Algorithm::baseline: return "baseline";
    case Algorithm::simple: return "simple";
    case Algorithm::fast: return "fast";
    case Algorithm::alternative: return "alt";
  }
  return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  if (name == "auto") return Algorithm::automatic;
  if (name == "baseline") return Algorithm::baseline;
  if (name == "simple") return Algorithm::simple;
  if (name == "fast") return Algorithm::fast;
  if (name == "alt" || name == "alternative") return Algorithm::alternative;
  return std::nullopt;
}

namespace {

SquareCore core_for(Algorithm algo) {
  switch (algo) {
    case Algorithm::baseline: return SquareCore::baseline;
    case Algorithm::simple: return SquareCore::simple;
    default: return SquareCore::fast;
  }
}

class StatsScope {
 public:
  StatsScope(const MatrixView& a, Algorithm algo, SolveStats& out)
      : a_(a), out_(out), q0_(a.queries()), c0_(a.comparisons()),
        t0_(std::chrono::steady_clock::now()) {
    out_.algorithm = algo;
    out_.rows = a.rows();
    out_.cols = a.cols();
  }
  ~StatsScope() {
    out_.queries = a_.queries() - q0_;
    out_.comparisons = a_.comparisons() - c0_;
    out_.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
        std::chrono::steady_clock::now() - t0_);
  }
  StatsScope(const StatsScope&) = delete;
  StatsScope& operator=(const StatsScope&) = delete;

 private:
  const MatrixView& a_;
  SolveStats& out_;
  std::uint64_t q0_, c0_;
  std::chrono::steady_clock::time_point t0_;
};

}  // namespace

SspResult find_ssp(const MatrixView& a, Algorithm algo, const PspOptions& options) {
  SspResult result;
  {
    StatsScope scope(a, algo, result.stats);
    if (algo == Algorithm::alternative && a.square()) {
      result.outcome = ssp_alternative(a);
    } else {
      const Entry s = psp_rect(a, core_for(algo), options);
      const SearchVerdict v = test_value(a, s.value);
      // A PSP value that fails the test rules out any SSP: an SSP would
      // force every PSP to share its value.
      if (v.kind == Verdict::found) result.outcome = SspOutcome::at(*v.ssp, *v.ssp_local);
    }
  }
  return result;
}

PspResult find_psp(const MatrixView& a, Algorithm algo, const PspOptions& options) {
  if (algo == Algorithm::alternative)
    throw ContractError("the alternative algorithm decides SSPs and does not report a PSP");
  PspResult result;
  {
    StatsScope scope(a, algo, result.stats);
    result.entry = psp_rect(a, core_for(algo), options);
  }
  return result;
}

SpValue sp_value_assuming_exists(const MatrixView& a) {
  return {psp_rect(a, SquareCore::fast), false};
}

std::vector<Entry> locate_sp(const MatrixView& a, Value s) {
  const Order order = a.order();
  std::vector<std::size_t> columns;
  horizontal_search(a, s, [&](std::size_t, std::size_t j, Value q) {
    if ((columns.empty() || columns.back() != j) && order.equal(q, s)) columns.push_back(j);
  });

  std::vector<Entry> found;
  for (std::size_t j : columns) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (!order.equal(a.get(i, j), s)) continue;
      if (is_saddlepoint(a, i, j)) found.push_back(a.get_entry(i, j));
    }
  }
  return found;
}

}  // namespace saddle
