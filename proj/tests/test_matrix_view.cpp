#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "saddle/matrix_view.hpp"

using namespace saddle;

TEST_CASE("every read counts once against the root") {
  auto a = fixtures::view(fixtures::m3());
  CHECK(a.queries() == 0);
  CHECK(a(0, 1).raw == 7);
  CHECK(a(2, 2).raw == 8);
  CHECK(a.entry(1, 0).pos == Position{1, 0});
  CHECK(a.queries() == 3);
  CHECK_THROWS_AS((void)a(3, 0), std::out_of_range);
  CHECK(a.queries() == 3);
}

TEST_CASE("reflect transposes and reverses the order") {
  auto a = fixtures::view(fixtures::m3());
  auto r = a.reflect();
  CHECK(r.rows() == 3);
  CHECK(r(0, 1).raw == 6);  // a(1, 0)
  CHECK(r.entry(2, 0).pos == Position{0, 2});
  const Order o = r.order();
  CHECK(o.less(Value{5}, Value{2}));
  CHECK_FALSE(a.order().less(Value{5}, Value{2}));
  CHECK(a.queries() == 2);  // shared root
  CHECK(a.comparisons() == 2);

  auto rr = r.reflect();
  CHECK_FALSE(rr.order().reversed());
  CHECK(rr(0, 1).raw == 7);
}

TEST_CASE("subviews map to root coordinates") {
  auto a = fixtures::view(fixtures::saddle9());
  auto s = a.subview({8, 2, 4}, {4, 0});
  CHECK(s.rows() == 3);
  CHECK(s.cols() == 2);
  CHECK(s(2, 0).raw == 0.0);
  CHECK(s.entry(0, 1).pos == Position{8, 0});

  auto ss = s.subview({2}, {0});
  CHECK(ss.entry(0, 0).pos == Position{4, 4});

  auto b = a.block(3, 3, 3, 3);
  CHECK(b(1, 1).raw == 0.0);
  CHECK(b.reflect().entry(2, 0).pos == Position{3, 5});

  CHECK_THROWS_AS((void)a.subview({}, {0}), ContractError);
  CHECK_THROWS_AS((void)a.block(8, 2, 0, 1), std::out_of_range);
}

TEST_CASE("permuted view swaps without querying") {
  auto a = fixtures::view(fixtures::m3());
  PermutedView p(a);
  p.swap_rows(0, 2);
  p.swap_cols(0, 1);
  CHECK(a.queries() == 0);
  auto v = p.view();
  CHECK(v(0, 0).raw == 1);  // a(2, 1)
  CHECK(v.entry(2, 1).pos == Position{0, 0});
  CHECK(p.row_origin(0) == 2);
  CHECK(p.col_origin(0) == 1);
  CHECK(a.queries() == 2);
}

TEST_CASE("diagonal overlay is free and keeps provenance") {
  auto a = fixtures::view(fixtures::m3());
  PermutedView p(a);
  p.overlay_diagonal(1, Entry{{0, 2}, Value{5}});
  auto v = p.view();
  auto e = v.entry(1, 1);
  CHECK(e.value.raw == 5);
  CHECK(e.pos == Position{0, 2});
  CHECK(a.queries() == 0);
  CHECK(v(0, 0).raw == 0);
  CHECK(a.queries() == 1);

  PermutedView wide(a.block(0, 2, 0, 3));
  CHECK_THROWS_AS(wide.overlay_diagonal(0, Entry{}), ContractError);
}

TEST_CASE("property: counter equals calls through any stack of layers") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 1 + rng() % 7, n = 1 + rng() % 7;
    auto base = fixtures::view(fixtures::random_dense(rng, m, n, trial % 2 == 0));
    MatrixView v = base;
    std::uint64_t calls = 0;
    for (int layer = 0; layer < 4; ++layer) {
      switch (rng() % 3) {
        case 0: v = v.reflect(); break;
        case 1: {
          std::vector<std::size_t> r, c;
          for (std::size_t i = 0; i < v.rows(); ++i)
            if (rng() % 2 || r.empty()) r.push_back(i);
          for (std::size_t j = 0; j < v.cols(); ++j)
            if (rng() % 2 || c.empty()) c.push_back(j);
          v = v.subview(r, c);
          break;
        }
        default: {
          PermutedView p(v);
          if (v.rows() > 1) p.swap_rows(0, v.rows() - 1);
          if (v.cols() > 1) p.swap_cols(0, v.cols() - 1);
          v = p.view();
        }
      }
      for (std::size_t i = 0; i < v.rows(); ++i)
        for (std::size_t j = 0; j < v.cols(); ++j) {
          const Entry e = v.entry(i, j);
          ++calls;
          // Provenance must point at an entry with the same value.
          REQUIRE(base.get(e.pos.row, e.pos.col) == e.value);
          ++calls;
        }
    }
    CHECK(base.queries() == calls);
  }
}
