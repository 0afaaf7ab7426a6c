// SPDX-License-Identifier: Apache-2.0
#include <random>

#include "bct/element.hpp"
#include "bct/oracle.hpp"
#include "bct/order_sets.hpp"
#include "bct/solve.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace bct;
using bct::test::el;
using bct::test::pt;

TEST_CASE("mul examples") {
  CHECK(mul({2, 3}, {5, 1}) == Element(4, 1));
  CHECK(mul({0, 0}, {7, 4}) == Element(7, 4));
  CHECK(mul({3, 2}, {2, 5}) == Element(3, 5));
  CHECK(mul({1, 4}, {2, 0}) == Element(1, 2));
}

TEST_CASE("mul agrees with word rewriting on [0,12]^4") {
  for (std::size_t a = 0; a <= 12; ++a)
    for (std::size_t b = 0; b <= 12; ++b)
      for (std::size_t c = 0; c <= 12; ++c)
        for (std::size_t d = 0; d <= 12; ++d) {
          auto expect = oracle::oracle_mul({a, b}, {c, d});
          REQUIRE(pt(mul(el(a, b), el(c, d))) == expect);
        }
}

TEST_CASE("mul with huge exponents") {
  Element big(Integer("123456789012345678901234567890"), Integer(5));
  Element x(Integer(7), Integer("99999999999999999999999999"));
  // l=5 < m=7: (k - l + m, n)
  CHECK(mul(big, x) == Element(Integer("123456789012345678901234567892"),
                               Integer("99999999999999999999999999")));
  CHECK(mul(mul(big, inv(big)), big) == big);
}

TEST_CASE("inv and trace examples") {
  CHECK(inv({4, 7}) == Element(7, 4));
  CHECK(inv({3, 3}) == Element(3, 3));
  CHECK(inv({0, 0}) == Element(0, 0));
  CHECK(trace({4, 7}) == std::pair{Element(4, 4), Element(7, 7)});
  CHECK(trace({5, 5}) == std::pair{Element(5, 5), Element(5, 5)});
  CHECK(trace({0, 3}) == std::pair{Element(0, 0), Element(3, 3)});
}

TEST_CASE("leq examples") {
  CHECK(leq({3, 1}, {2, 0}));
  CHECK(leq({2, 2}, {0, 0}));
  CHECK_FALSE(leq({1, 2}, {2, 3}));
}

TEST_CASE("translate examples") {
  CHECK(translate(2, 5, 1, 0, {1, 0}) == Element(2, 5));
  CHECK(translate(2, 5, 1, 0, {4, 3}) == Element(5, 8));
  CHECK(translate(0, 0, 0, 0, {7, 2}) == Element(7, 2));
}

TEST_CASE("random triples associate") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long long> d(0, 1000);
  for (int n = 0; n < 20000; ++n) {
    Element a(d(rng), d(rng)), b(d(rng), d(rng)), c(d(rng), d(rng));
    REQUIRE(mul(mul(a, b), c) == mul(a, mul(b, c)));
  }
}

TEST_CASE("inverse laws and idempotents") {
  for (int i = 0; i <= 20; ++i)
    for (int j = 0; j <= 20; ++j) {
      Element x(i, j);
      REQUIRE(mul(mul(x, inv(x)), x) == x);
      REQUIRE(mul(mul(inv(x), x), inv(x)) == inv(x));
      REQUIRE((mul(x, x) == x) == x.is_idempotent());
      auto [l, r] = trace(x);
      REQUIRE(l == mul(x, inv(x)));
      REQUIRE(r == mul(inv(x), x));
    }
}

TEST_CASE("leq is a partial order and matches idempotent witnesses") {
  for (int a = 0; a <= 9; ++a)
    for (int b = 0; b <= 9; ++b)
      for (int c = 0; c <= 9; ++c)
        for (int d = 0; d <= 9; ++d) {
          Element x(a, b), y(c, d);
          bool witness = false;
          for (int k = 0; k <= 30 && !witness; ++k) witness = mul(y, Element(k, k)) == x;
          REQUIRE(leq(x, y) == witness);
          if (leq(x, y) && leq(y, x)) REQUIRE(x == y);
        }
  REQUIRE(leq({4, 4}, {4, 4}));
  REQUIRE(leq({6, 3}, {4, 1}));
  REQUIRE(leq({4, 1}, {3, 0}));
  REQUIRE(leq({6, 3}, {3, 0}));
  REQUIRE_FALSE(leq({4, 1}, {2, 0}));
}

TEST_CASE("order sets") {
  CHECK(up_set({4, 2}) == points({{4, 2}, {3, 1}, {2, 0}}));
  CHECK(down_set({1, 2}) == diagonal_tail({1, 2}, 0));
  CHECK(strict_down_set({1, 2}) == diagonal_tail({1, 2}, 1));
  CHECK(updown_set({0, 0}) == idempotents());
  CHECK(cardinality(up_set({9, 4})) == Integer(5));
  CHECK_FALSE(is_finite(down_set({0, 0})));
  for (int i = 0; i <= 6; ++i)
    for (int j = 0; j <= 6; ++j)
      for (int s = 0; s <= 14; ++s)
        for (int t = 0; t <= 14; ++t) {
          Element x(i, j), y(s, t);
          REQUIRE(member(up_set(x), y) == leq(x, y));
          REQUIRE(member(down_set(x), y) == leq(y, x));
          REQUIRE(member(updown_set(x), y) == (leq(x, y) || leq(y, x)));
        }
}

TEST_CASE("solve examples") {
  CHECK(solve_left({0, 1}, {0, 0}) == std::vector<Element>{{1, 0}});
  CHECK(solve_left({0, 0}, {3, 4}) == std::vector<Element>{{3, 4}});
  CHECK(solve_two_sided({2, 1}, {0, 2}, {2, 2}) == std::vector<Element>{{1, 0}});
  CHECK(solve_two_sided({1, 3}, {4, 1}, {1, 1}) ==
        std::vector<Element>{{0, 1}, {1, 2}, {2, 3}, {3, 4}});
}

TEST_CASE("solvers are complete and inside their bounds") {
  const int w = 24;
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; b <= 5; ++b)
      for (int c = 0; c <= 6; ++c)
        for (int d = 0; d <= 6; ++d) {
          Element x(a, b), rhs(c, d);
          std::vector<Element> left, right;
          for (int u = 0; u <= w; ++u)
            for (int v = 0; v <= w; ++v) {
              if (mul(x, Element(u, v)) == rhs) left.emplace_back(u, v);
              if (mul(Element(u, v), x) == rhs) right.emplace_back(u, v);
            }
          REQUIRE(solve_left(x, rhs) == left);
          REQUIRE(solve_right(x, rhs) == right);
          auto bound = solve_left_bound(x, rhs);
          for (const auto& s : left) REQUIRE((s.i() <= bound.max_i && s.j() <= bound.max_j));
        }
}

TEST_CASE("element syntax") {
  CHECK(parse_element("q^2 p^3") == Element(2, 3));
  CHECK(parse_element("q p") == Element(1, 1));
  CHECK(parse_element("(4, 7)") == Element(4, 7));
  CHECK(parse_element("1") == Element(0, 0));
  CHECK(to_string(Element(4, 1)) == "q^4 p");
  CHECK(to_string(Element(0, 0)) == "1");
  CHECK(to_pair_string(Element(4, 1)) == "(4,1)");
  CHECK_THROWS_AS(parse_element("q^x"), ParseError);
  try {
    parse_element("q^2 z");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}
