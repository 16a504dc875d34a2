#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "saddle/heap_psp.hpp"
#include "saddle/oracle.hpp"

using namespace saddle;

namespace {

struct Rcv {
  std::size_t row, col;
  double value;
  friend bool operator==(const Rcv&, const Rcv&) = default;
};

std::vector<Rcv> contents(const ActiveSet& h) {
  std::vector<Rcv> out;
  for (const auto& t : h.triplets()) out.push_back({t.row, t.col, t.value().raw});
  return out;
}

// P2: each row without a triplet has an entry >= max(H).
// P3: each column without a triplet has an entry <= min(H).
bool invariants_hold(const ActiveSet& h, const MatrixView& a) {
  const double lo = h.min().value().raw, hi = h.max().value().raw;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (h.has_row(i)) continue;
    bool ok = false;
    for (std::size_t j = 0; j < a.cols(); ++j) ok = ok || a.get(i, j).raw >= hi;
    if (!ok) return false;
  }
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (h.has_col(j)) continue;
    bool ok = false;
    for (std::size_t i = 0; i < a.rows(); ++i) ok = ok || a.get(i, j).raw <= lo;
    if (!ok) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("hand trace on the 3x3 example") {
  auto a = fixtures::view(fixtures::m3());
  ActiveSet h = diagonal_set(a);
  CHECK(a.queries() == 3);
  CHECK(contents(h) == std::vector<Rcv>{{0, 0, 0}, {1, 1, 4}, {2, 2, 8}});

  CHECK(reduce_step(h, a) == ReduceCase::replace_both);
  CHECK(contents(h) == std::vector<Rcv>{{1, 1, 4}, {0, 2, 5}});

  CHECK(reduce_step(h, a) == ReduceCase::drop_max);
  CHECK(contents(h) == std::vector<Rcv>{{1, 1, 4}});
  CHECK(a.queries() == 5);

  CHECK_THROWS_AS(reduce_step(h, a), ContractError);
}

TEST_CASE("baseline on small examples") {
  auto a = fixtures::view(fixtures::m3());
  const Entry e = psp_baseline(a);
  CHECK(e.pos == Position{1, 1});
  CHECK(e.value.raw == 4);
  CHECK(a.queries() == 5);

  auto one = fixtures::view({{3.5}});
  CHECK(psp_baseline(one) == Entry{{0, 0}, Value{3.5}});

  auto f = fixtures::view(fixtures::saddle9());
  CHECK(psp_baseline(f).value.raw == 0.0);
  CHECK(f.queries() <= 17);

  CHECK_THROWS_AS(psp_baseline(fixtures::view({{1, 2}})), ContractError);
}

TEST_CASE("tie on a constant diagonal drops the maximum") {
  auto a = fixtures::view({{2, 2}, {1, 2}});
  ActiveSet h = diagonal_set(a);
  CHECK(reduce_step(h, a) == ReduceCase::drop_max);
  CHECK(h.size() == 1);
}

TEST_CASE("one triplet per row and column") {
  auto a = fixtures::view(fixtures::m3());
  ActiveSet h(a.order(), 3, 3);
  h.insert({0, 1, Entry{{0, 1}, Value{7}}});
  CHECK_THROWS_AS(h.insert({0, 2, Entry{{0, 2}, Value{5}}}), ContractError);
  CHECK_THROWS_AS(h.insert({2, 1, Entry{{2, 1}, Value{1}}}), ContractError);
  h.pop_max();
  h.insert({0, 2, Entry{{0, 2}, Value{5}}});
  CHECK(h.size() == 1);
}

TEST_CASE("property: P1-P3 after every step, 2n-1 queries, valid PSP") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    const auto dense = fixtures::random_dense(rng, n, n, trial % 3 == 0);
    auto a = fixtures::view(dense);
    const auto probe = fixtures::view(dense);  // separate counters for the checks
    ActiveSet h = diagonal_set(a);
    std::size_t steps = 0;
    while (h.size() > 1) {
      reduce_step(h, a);
      ++steps;
      REQUIRE(h.size() == n - steps);
      REQUIRE(invariants_hold(h, probe));
    }
    CHECK(a.queries() == 2 * n - 1);

    auto b = fixtures::view(fixtures::random_dense(rng, n, n, true));
    const Entry e = psp_baseline(b);
    CHECK(b.queries() <= 2 * n - 1);
    CHECK(verify_psp(b, e.value));
    CHECK(b.get(e.pos.row, e.pos.col) == e.value);
  }
}
