// SPDX-License-Identifier: Apache-2.0
#include "bct/order_sets.hpp"
#include "bct/topology.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace bct;
using bct::test::el;
using bct::test::pt;

namespace {

const Topology tau1 = Topology::tau1();
const Topology tau2 = Topology::tau2();
const Topology tauc = Topology::tauc();
const Topology discrete = Topology::discrete();

}  // namespace

TEST_CASE("basic neighbourhood examples") {
  CHECK(tau1.basic({0, 0}, 2) == unite(point({0, 0}), quadrant(2)));
  CHECK(tau2.basic({1, 0}, 2) == unite(point({1, 0}), diagonal_tail({3, 2}, 1)));
  CHECK(tauc.basic({1, 1}, 2) == unite(point({1, 1}), complement(square(2))));
  CHECK(discrete.basic({4, 4}, 9) == point({4, 4}));
}

TEST_CASE("basic sets match pointwise definitions") {
  for (auto t : Topology::all())
    for (std::size_t i = 0; i <= 6; ++i)
      for (std::size_t j = 0; j <= 6; ++j)
        for (std::size_t n = 0; n <= 6; ++n) {
          auto w = oracle::window_eval(t.basic(el(i, j), Integer(n)), Window{20});
          for (std::size_t s = 0; s <= 20; ++s)
            for (std::size_t u = 0; u <= 20; ++u)
              REQUIRE(w.at(s, u) == oracle::basic_contains(t, {i, j}, n, {s, u}));
        }
}

TEST_CASE("base axioms") {
  for (auto t : Topology::all())
    for (int i = 0; i <= 10; ++i)
      for (int j = 0; j <= 10; ++j)
        for (int n = 0; n <= 10; ++n) {
          Element x(i, j);
          REQUIRE(member(t.basic(x, n), x));
          REQUIRE(subset(t.basic(x, n + 1), t.basic(x, n)));
        }
}

TEST_CASE("isolated points") {
  CHECK_FALSE(is_isolated(tau2, {3, 3}));
  CHECK(is_isolated(discrete, {3, 3}));
  CHECK_FALSE(is_isolated(tau1, {0, 0}));
  for (int i = 0; i <= 10; ++i)
    for (int j = 0; j <= 10; ++j) {
      CHECK_FALSE(is_isolated(tau1, {i, j}));
      CHECK_FALSE(is_isolated(tau2, {i, j}));
      CHECK_FALSE(is_isolated(tauc, {i, j}));
      CHECK(is_isolated(discrete, {i, j}));
    }
}

TEST_CASE("closure examples") {
  CHECK(closure(tau2, tau2.basic({1, 2}, 1)) == updown_set({1, 2}));
  CHECK(closure(tau1, tau1.basic({0, 0}, 3)) == Region::full());
  Region f = points({{0, 0}, {3, 9}, {12, 2}});
  CHECK(closure(tauc, f) == f);
  CHECK(closure(tau1, f) == f);
}

TEST_CASE("interior and regular open examples") {
  CHECK(interior(tau1, Region::full()) == Region::full());
  CHECK(is_empty(interior(tau1, unite(point({0, 0}), down_set({2, 2})))));
  CHECK(interior(tauc, tauc.basic({1, 1}, 2)) == tauc.basic({1, 1}, 2));
  CHECK_FALSE(is_regular_open(tau1, tau1.basic({0, 0}, 2)));
  CHECK_FALSE(is_regular_open(tau2, tau2.basic({1, 2}, 1)));
  oracle::RegionGenerator gen(2);
  for (int n = 0; n < 20; ++n) CHECK(is_regular_open(discrete, gen.next()));
}

TEST_CASE("regular open basic sets at n = 0") {
  // At n = 0 the tail leaves nothing out that its closure would add back.
  CHECK(is_regular_open(tau1, tau1.basic({0, 0}, 0)));
  CHECK(is_regular_open(tau1, tau1.basic({5, 2}, 0)));
  CHECK(is_regular_open(tau2, tau2.basic({0, 3}, 0)));
  CHECK_FALSE(is_regular_open(tau2, tau2.basic({1, 3}, 0)));
  CHECK(is_regular_open(tauc, tauc.basic({0, 0}, 0)));
  CHECK_FALSE(is_regular_open(tauc, tauc.basic({1, 0}, 0)));
}

TEST_CASE("subspace examples") {
  Region y = down_set({1, 2});
  CHECK(subspace_closure(tau2, y, intersect(tau2.basic({1, 2}, 1), y)) == y);
  CHECK(subspace_closure(tau1, idempotents(), diagonal_tail({5, 5}, 0)) == idempotents());
  for (auto t : Topology::all()) CHECK(is_empty(subspace_closure(t, y, Region())));
  CHECK_THROWS_AS(subspace_interior(tau1, y, point({0, 0})), NotInSubspace);
}

TEST_CASE("t1 separation") {
  CHECK(t1_separation(tau1, {0, 0}, {5, 5}) == std::pair<Integer, Integer>{6, 1});
  // (0,0) leaves W_0((1,1)) already: the minimal pair is (1,0).
  CHECK(t1_separation(tauc, {0, 0}, {1, 1}) == std::pair<Integer, Integer>{1, 0});
  CHECK(t1_separation(discrete, {2, 3}, {4, 1}) == std::pair<Integer, Integer>{0, 0});
  CHECK(t1_separation(tau2, {1, 1}, {4, 4}) == std::pair<Integer, Integer>{3, 0});
  for (auto t : Topology::all())
    for (int a = 0; a <= 8; ++a)
      for (int b = 0; b <= 8; ++b)
        for (int c = 0; c <= 8; ++c)
          for (int d = 0; d <= 8; ++d) {
            Element x(a, b), y(c, d);
            if (x == y) continue;
            auto [nx, ny] = t1_separation(t, x, y);
            REQUIRE_FALSE(member(t.basic(x, nx), y));
            REQUIRE_FALSE(member(t.basic(y, ny), x));
            if (nx > 0) REQUIRE(member(t.basic(x, nx - 1), y));
            if (ny > 0) REQUIRE(member(t.basic(y, ny - 1), x));
          }
}

TEST_CASE("closure and interior laws on random regions") {
  oracle::RegionGenerator gen(77);
  for (int n = 0; n < 150; ++n) {
    Region r = gen.next();
    for (auto t : Topology::all()) {
      Region cl = closure(t, r), in = interior(t, r);
      REQUIRE(subset(r, cl));
      REQUIRE(closure(t, cl) == cl);
      REQUIRE(subset(in, r));
      REQUIRE(interior(t, in) == in);
      REQUIRE(interior(t, r) == complement(closure(t, complement(r))));
    }
  }
}

TEST_CASE("closure membership agrees with bounded neighbourhoods") {
  oracle::RegionGenerator gen(81, oracle::RegionShape{3, 10, 6, 40});
  for (int n = 0; n < 40; ++n) {
    Region r = gen.next();
    for (auto t : Topology::all()) {
      Region cl = closure(t, r);
      for (int i = 0; i <= 8; ++i)
        for (int j = 0; j <= 8; ++j) {
          Element x(i, j);
          auto sep = separation_bound(t, x, r);
          REQUIRE(member(cl, x) == !sep.has_value());
          if (sep) {
            REQUIRE(is_empty(intersect(t.basic(x, *sep), r)));
          } else {
            for (int k = 0; k <= 30; k += 5) REQUIRE_FALSE(is_empty(intersect(t.basic(x, k), r)));
          }
          auto ib = interior_bound(t, x, r);
          if (ib) REQUIRE(subset(t.basic(x, *ib), r));
        }
    }
  }
}

TEST_CASE("local compactness and cofiniteness evidence") {
  for (int i = 0; i <= 8; ++i)
    for (int j = 0; j <= 8; ++j)
      for (int n = 0; n <= 8; ++n) {
        Element x(i, j);
        REQUIRE(is_cofinite(tauc.basic(x, n)));
        auto rest = difference(updown_set(x), tau2.basic(x, n));
        REQUIRE(cardinality(rest) == Integer(std::min(i, j) + n));
      }
}
