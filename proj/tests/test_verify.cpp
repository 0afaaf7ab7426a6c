// SPDX-License-Identifier: Apache-2.0
#include "bct/order_sets.hpp"
#include "bct/region.hpp"
#include "bct/solve.hpp"
#include "bct/verify.hpp"
#include "doctest.h"

using namespace bct;

namespace {

const Topology tau1 = Topology::tau1();
const Topology tau2 = Topology::tau2();
const Topology tauc = Topology::tauc();
const Topology discrete = Topology::discrete();

bool verified(const WitnessReport& r) { return r.verdict == Verdict::verified; }

}  // namespace

TEST_CASE("prop1 pieces") {
  // n=1, a=b=(0,0), m=2
  CHECK(product_subset(tau1.basic({0, 0}, 2), tau1.basic({0, 0}, 2), tau1.basic({0, 0}, 1)));
  CHECK(inverse_image(tau1.basic({2, 5}, 3)) == tau1.basic({5, 2}, 3));
  // With m = max{2n, ...} the inclusion can fail: (3,2)·(2,0) = (3,0) leaves U_1((2,0)).
  CHECK(member(tau1.basic({0, 0}, 2), {3, 2}));
  CHECK(member(tau1.basic({2, 0}, 2), {2, 0}));
  CHECK(mul({3, 2}, {2, 0}) == Element(3, 0));
  CHECK_FALSE(member(tau1.basic({2, 0}, 1), {3, 0}));
}

TEST_CASE("prop1 sweep finds the m = 2n gap and closes it with m = n + max") {
  auto r = verify_prop1(4, 4);
  CHECK(r.claim_id == "prop1");
  CHECK(r.verdict == Verdict::counterexample);
  CHECK(r.parameters["corrected_m_failures"] == 0);
  CHECK(r.parameters["inversion_failures"] == 0);
  CHECK(r.parameters["inclusion_failures"].get<int>() > 0);
  CHECK_FALSE(r.witnesses.empty());
}

TEST_CASE("prop2 sweep") {
  auto r = verify_prop2(3, 3);
  CHECK(r.claim_id == "prop2");
  CHECK(r.verdict == Verdict::counterexample);
  CHECK(r.parameters["corrected_m_failures"] == 0);
  CHECK(r.parameters["finiteness_failures"] == 0);
  CHECK(r.parameters["closure_failures"] == 0);
  // closure equals the down-set only when min(i,j) = 0: 7 of 16 anchors, 4 values of n.
  CHECK(r.parameters["closure_equals_down_set"] == 28);
  CHECK(cardinality(difference(updown_set({0, 0}), tau2.basic({0, 0}, 3))) == Integer(3));
}

TEST_CASE("prop3 and its crosscheck") {
  Crosscheck cc;
  cc.enabled = true;
  cc.limit = 40;
  auto r = verify_prop3(3, 20, cc);
  CHECK(verified(r));
  CHECK(r.parameters["crosscheck"]["disagreements"] == 0);
}

TEST_CASE("lemma2") {
  CHECK(product_image(updown_set({0, 0}), updown_set({0, 0})) == idempotents());
  // Equality fails when i > j and s < t; inclusion always holds.
  Region prod = product_image(updown_set({1, 0}), updown_set({0, 1}));
  CHECK(subset(prod, updown_set({1, 1})));
  CHECK_FALSE(member(prod, {0, 0}));
  Region bad = product_image(updown_set({2, 0}), updown_set({0, 1}));
  CHECK(subset(bad, updown_set({2, 1})));
  CHECK(bad != updown_set({2, 1}));
  auto r = verify_lemma2(3, 30);
  CHECK(r.verdict == Verdict::counterexample);
  CHECK(r.parameters["inclusion_failures"] == 0);
  CHECK(r.parameters["failures_match_sign_pattern"] == true);
  CHECK(r.parameters["window_disagreements"] == 0);
}

TEST_CASE("trace injectivity and translations") {
  CHECK(verified(verify_trace_injectivity(50)));
  CHECK(verified(verify_lemma4(6, 30)));
}

TEST_CASE("thm1") {
  auto r = thm1_propagate({0, 0}, {0, 0});
  CHECK(verified(r));
  auto s = thm1_propagate({1, 1}, {3, 4});
  CHECK(verified(s));
  CHECK(solve_two_sided({1, 3}, {4, 1}, {1, 1}).size() == 4);
  CHECK(verified(verify_thm1(2, 40)));
}

TEST_CASE("quasi-regularity") {
  CHECK(verified(quasireg_fail(tau2, SubspaceKind::down_set, {1, 2}, 6)));
  CHECK(verified(quasireg_fail(tau1, SubspaceKind::idempotents, {0, 0}, 6)));
  CHECK(quasireg_fail(discrete, SubspaceKind::down_set, {3, 1}, 6).verdict == Verdict::counterexample);
}

TEST_CASE("semiregularity") {
  CHECK(verified(semireg_fail(tau1, {0, 0}, 10)));
  CHECK(verified(semireg_fail(tauc, {1, 1}, 8)));
  CHECK(semireg_fail(discrete, {2, 2}, 5).verdict == Verdict::counterexample);
  auto r = verify_semireg(2, 3);
  CHECK(verified(r));
  CHECK(r.parameters["regular_basic_opens"].size() == 15);
}

TEST_CASE("inversion is continuous") { CHECK(verified(verify_inv_continuity(4, 4))); }

TEST_CASE("tauc subcovers") {
  std::vector<BasicIndex> cover{{{0, 0}, 0}};
  for (int i = 0; i <= 5; ++i)
    for (int j = 0; j <= 5; ++j) cover.push_back({{i, j}, 5});
  auto sub = subcover_tauc(cover);
  // C_0 = {(0,0)}, so W_0((0,0)) is the whole space.
  CHECK(sub == std::vector<std::size_t>{0});
  Region u;
  for (auto k : sub) u = unite(u, tauc.basic(cover[k].x, cover[k].n));
  CHECK(u == Region::full());

  CHECK(subcover_tauc({{{1, 0}, 1}, {{0, 0}, 1}, {{1, 1}, 1}, {{0, 1}, 1}}).size() == 4);
  CHECK(subcover_tauc({{{1, 0}, 0}, {{0, 0}, 3}}).size() == 2);

  try {
    subcover_tauc({{{0, 0}, 3}});
    FAIL("no throw");
  } catch (const NotACover& e) {
    CHECK(e.witness() != Element(0, 0));
    CHECK_FALSE(member(tauc.basic({0, 0}, 3), e.witness()));
  }
  CHECK(verified(verify_subcover_tauc(30, 6)));
}

TEST_CASE("updown subcovers") {
  std::vector<BasicIndex> cover{{{1, 2}, 1}};
  for (const auto& y : enumerate(up_set({1, 2}), Window{5})) cover.push_back({y, 0});
  for (int k = 1; k <= 3; ++k) cover.push_back({{1 + k, 2 + k}, 0});
  auto sub = subcover_updown({1, 2}, cover);
  Region u;
  for (auto k : sub) u = unite(u, intersect(tau2.basic(cover[k].x, cover[k].n), updown_set({1, 2})));
  CHECK(u == updown_set({1, 2}));

  auto pair = subcover_updown({0, 0}, {{{0, 0}, 0}, {{1, 1}, 0}});
  CHECK(pair == std::vector<std::size_t>{0});
  CHECK(verified(verify_subcover_updown(30, 6)));
}

TEST_CASE("continuity witnesses") {
  CHECK(continuity_witness(tauc, {2, 3}, {1, 0}, 3, Side::left, 50) == Integer(4));
  CHECK(continuity_witness(tau1, {1, 2}, {0, 0}, 2, Side::left, 50) == Integer(3));
  CHECK(continuity_witness(tau1, {0, 0}, {3, 1}, 4, Side::left, 50) == Integer(4));
  CHECK(continuity_witness(tau2, {0, 0}, {3, 1}, 4, Side::left, 50) == Integer(4));
  CHECK(continuity_witness(tauc, {0, 0}, {3, 1}, 4, Side::left, 50) == Integer(4));
  CHECK(continuity_witness(discrete, {0, 0}, {3, 1}, 4, Side::left, 50) == Integer(0));
  CHECK_FALSE(continuity_witness(tauc, {2, 3}, {1, 0}, 3, Side::left, 2).has_value());
}

TEST_CASE("joint continuity search") {
  auto t1 = joint_continuity_search(tau1, 3);
  CHECK(verified(t1));
  CHECK(t1.parameters["failures"] == 0);
  CHECK(verified(joint_continuity_search(discrete, 3)));
  auto tc = joint_continuity_search(tauc, 2);
  CHECK(tc.verdict == Verdict::counterexample);
  CHECK(tc.parameters["unresolved"] == 0);
}

TEST_CASE("remark1 and region suite") {
  auto r = verify_remark1(4);
  CHECK(verified(r));
  CHECK(r.parameters["isolated_points"]["discrete"] == 25);
  CHECK(r.parameters["isolated_points"]["tau2"] == 0);
  CHECK(verified(verify_region_suite(40, 30)));
}

TEST_CASE("reports are deterministic") {
  auto a = to_json(verify_prop2(2, 2));
  auto b = to_json(verify_prop2(2, 2));
  a.erase("elapsed_ms");
  b.erase("elapsed_ms");
  CHECK(a == b);
}
