#include <doctest.h>

#include <algorithm>
#include <limits>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "saddle/oracle.hpp"
#include "saddle/staircase.hpp"

using namespace saddle;

TEST_CASE("walks below and above every entry") {
  auto a = fixtures::view(fixtures::m3());
  const Value lo{-1}, hi{9};

  auto h = horizontal_search(a, lo);
  CHECK_FALSE(h.success);
  CHECK(h.row == 3);
  CHECK(h.col == 0);
  CHECK(horizontal_search(a, hi).success);
  CHECK(horizontal_search(a, hi).row == 0);

  CHECK(vertical_search(a, lo).success);
  auto v = vertical_search(a, hi);
  CHECK_FALSE(v.success);
  CHECK(v.col == 3);

  CHECK(test_value(a, lo).kind == Verdict::ssp_greater);
  CHECK(test_value(a, hi).kind == Verdict::ssp_less);
}

TEST_CASE("example matrix: both walks succeed at 0") {
  auto a = fixtures::view(fixtures::saddle9());
  std::vector<Position> path;
  auto h = horizontal_search(a, Value{0}, [&](std::size_t i, std::size_t j, Value) {
    path.push_back({i, j});
  });
  CHECK(h.success);
  CHECK(h.row == 4);
  // Staircase down to the saddle row, then straight right.
  const std::vector<Position> expected{{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 3},
                                       {3, 4}, {4, 4}, {4, 5}, {4, 6}, {4, 7}, {4, 8}};
  CHECK(path == expected);

  auto v = vertical_search(a, Value{0});
  CHECK(v.success);
  CHECK(v.col == 4);

  const auto r = test_value(a, Value{0});
  CHECK(r.kind == Verdict::found);
  REQUIRE(r.ssp);
  CHECK(r.ssp->pos == Position{4, 4});
  CHECK(r.ssp->value.raw == 0.0);
}

TEST_CASE("candidate verification") {
  auto a = fixtures::view(fixtures::saddle9());
  const auto c0 = a.comparisons();
  CHECK(verify_ssp_candidate(a, 4, 4));
  CHECK(a.comparisons() - c0 == 16);
  CHECK_FALSE(verify_ssp_candidate(fixtures::view({{1, 1}, {2, 3}}), 0, 0));
  CHECK_FALSE(verify_ssp_candidate(fixtures::view({{1, 0}, {0, 1}}), 0, 0));
}

TEST_CASE("PSP value 4 of the 3x3 example has no strict saddlepoint") {
  auto a = fixtures::view(fixtures::m3());
  CHECK(horizontal_search(a, Value{4}).success);
  CHECK(vertical_search(a, Value{4}).success);
  CHECK(test_value(a, Value{4}).kind == Verdict::no_ssp);
}

namespace {

// Every entry value, every midpoint between consecutive distinct values, and
// the two infinities.
std::vector<double> probes(const MatrixView& a) {
  std::set<double> vals;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) vals.insert(a.get(i, j).raw);
  std::vector<double> out(vals.begin(), vals.end());
  for (auto it = vals.begin(); std::next(it) != vals.end(); ++it)
    out.push_back((*it + *std::next(it)) / 2);
  out.push_back(-std::numeric_limits<double>::infinity());
  out.push_back(std::numeric_limits<double>::infinity());
  return out;
}

}  // namespace

TEST_CASE("property: verdicts are sound and complete against the oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 1500; ++trial) {
    const std::size_t m = 1 + rng() % 8, n = 1 + rng() % 8;
    auto a = fixtures::view(fixtures::random_dense(rng, m, n, trial % 3 == 0));
    const auto o = oracle_scan(a, {.collect_entries = false});
    for (double s : probes(a)) {
      const auto q0 = a.queries();
      const auto r = test_value(a, Value{s});
      REQUIRE(a.queries() - q0 <= 3 * (m + n));
      switch (r.kind) {
        case Verdict::found:
          REQUIRE(o.ssp);
          CHECK(r.ssp->pos == o.ssp->pos);
          break;
        case Verdict::no_ssp: CHECK_FALSE(o.ssp); break;
        case Verdict::ssp_greater:
          if (o.ssp) CHECK(o.ssp->value.raw > s);
          break;
        case Verdict::ssp_less:
          if (o.ssp) CHECK(o.ssp->value.raw < s);
          break;
      }
      if (o.ssp && o.ssp->value.raw == s) CHECK(r.kind == Verdict::found);
    }
  }
}

TEST_CASE("paths are monotone and bounded") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = 1 + rng() % 8, n = 1 + rng() % 8;
    auto a = fixtures::view(fixtures::random_dense(rng, m, n, true));
    const Value s{static_cast<double>(rng() % 4)};
    Position prev{0, 0};
    bool first = true;
    const auto h = horizontal_search(a, s, [&](std::size_t i, std::size_t j, Value) {
      if (!first) CHECK(((i == prev.row + 1 && j == prev.col) || (i == prev.row && j == prev.col + 1)));
      prev = {i, j};
      first = false;
    });
    CHECK(h.steps <= m + n - 1);
    CHECK(h.success == (h.col == n));
  }
}

// The number of probe values at which both walks succeed; recorded, not asserted.
TEST_CASE("both-succeed probe count (observational)") {
  std::mt19937_64 rng(5);
  std::size_t exactly_one = 0, total = 0;
  for (int trial = 0; trial < 200; ++trial) {
    auto a = fixtures::view(fixtures::random_dense(rng, 1 + rng() % 6, 1 + rng() % 6, false));
    std::size_t both = 0;
    for (double s : probes(a))
      if (horizontal_search(a, Value{s}).success && vertical_search(a, Value{s}).success) ++both;
    exactly_one += both == 1;
    ++total;
  }
  MESSAGE("matrices with exactly one both-succeed probe: " << exactly_one << " / " << total);
}
