// SPDX-License-Identifier: Apache-2.0
// Acceptance run: one PASS/FAIL line per criterion. Every criterion tolerates
// zero mismatches; the exit status is nonzero when any line fails.
#include <algorithm>
#include <cstddef>
#include <cstdio>
#include <string>
#include <vector>

#include "bct/element.hpp"
#include "bct/oracle.hpp"
#include "bct/verify.hpp"

using namespace bct;

namespace {

int failed = 0;

void line(bool ok, const std::string& id, const std::string& detail) {
  std::printf("%s %s: %s\n", ok ? "PASS" : "FAIL", id.c_str(), detail.c_str());
  std::fflush(stdout);
  failed += !ok;
}

std::string num(const Json& j) { return j.dump(); }

std::string first_witness(const WitnessReport& r) {
  if (r.witnesses.empty()) return "none";
  return r.witnesses.front().input.dump() + " -> " + r.witnesses.front().witness.dump();
}

Element el(std::size_t i, std::size_t j) { return Element(static_cast<long long>(i), static_cast<long long>(j)); }

oracle::Point pt(const Element& x) {
  return {x.i().convert_to<std::size_t>(), x.j().convert_to<std::size_t>()};
}

void mul_oracle() {
  std::size_t cases = 0, bad = 0;
  for (std::size_t a = 0; a <= 30; ++a)
    for (std::size_t b = 0; b <= 30; ++b)
      for (std::size_t c = 0; c <= 30; ++c)
        for (std::size_t d = 0; d <= 30; ++d) {
          ++cases;
          bad += pt(mul(el(a, b), el(c, d))) != oracle::oracle_mul({a, b}, {c, d});
        }
  line(bad == 0, "mul_oracle_equivalence",
       std::to_string(cases) + " pairs on [0,30]^4, " + std::to_string(bad) + " mismatches (tolerance 0)");
}

void semigroup_laws() {
  std::vector<Element> xs;
  for (int i = 0; i <= 12; ++i)
    for (int j = 0; j <= 12; ++j) xs.emplace_back(i, j);
  std::size_t triples = 0, assoc_bad = 0;
  for (const auto& a : xs)
    for (const auto& b : xs) {
      Element ab = mul(a, b);
      for (const auto& c : xs) {
        ++triples;
        assoc_bad += mul(ab, c) != mul(a, mul(b, c));
      }
    }
  std::size_t inv_bad = 0;
  for (int i = 0; i <= 30; ++i)
    for (int j = 0; j <= 30; ++j) {
      Element x(i, j), y = inv(x);
      inv_bad += mul(mul(x, y), x) != x || mul(mul(y, x), y) != y;
      // any other y' with x y' x = x and y' x y' = y' must be y
      for (int s = 0; s <= 30; ++s)
        for (int t = 0; t <= 30; ++t) {
          Element z(s, t);
          if (z != y && mul(mul(x, z), x) == x && mul(mul(z, x), z) == z) ++inv_bad;
        }
    }
  auto tr = verify_trace_injectivity(30);
  bool ok = assoc_bad == 0 && inv_bad == 0 && tr.verdict == Verdict::verified;
  line(ok, "associativity_and_inverse_laws",
       std::to_string(triples) + " triples on [0,12]^6 with " + std::to_string(assoc_bad) +
           " failures; inverse laws and uniqueness on [0,30]^2 with " + std::to_string(inv_bad) +
           " failures; trace determinism " + std::string(verdict_name(tr.verdict)) + " (tolerance 0)");
}

void lemma1() {
  std::size_t pairs = 0, bad = 0;
  for (std::size_t a = 0; a <= 15; ++a)
    for (std::size_t b = 0; b <= 15; ++b)
      for (std::size_t c = 0; c <= 15; ++c)
        for (std::size_t d = 0; d <= 15; ++d) {
          ++pairs;
          bool witness = false;
          for (std::size_t k = 0; k <= 40 && !witness; ++k) witness = oracle::oracle_mul({c, d}, {k, k}) == oracle::Point{a, b};
          bad += leq(el(a, b), el(c, d)) != witness;
        }
  line(bad == 0, "lemma1_order_equivalence",
       std::to_string(pairs) + " pairs on [0,15]^2 x [0,15]^2, witness bound 40, " + std::to_string(bad) +
           " mismatches (tolerance 0)");
}

void lemma2() {
  auto r = verify_lemma2(6, 40);
  const auto& p = r.parameters;
  line(r.verdict == Verdict::verified, "lemma2_updown_product",
       "anchors <= (6,6): " + num(p["failures"]) + " of " + num(p["instances"]) +
           " products differ from the updown set of the sum (tolerance 0); inclusion failures " +
           num(p["inclusion_failures"]) + ", every failure has i>j and s<t: " + num(p["failures_match_sign_pattern"]) +
           ", window 40 disagreements " + num(p["window_disagreements"]) + "; first " + first_witness(r));
}

void prop1() {
  auto r = verify_prop1(10, 10);
  const auto& p = r.parameters;
  line(r.verdict == Verdict::verified, "prop1_tau1",
       "indices <= 10, n <= 10, m = max{2n,i1,j1,i2,j2}: " + num(p["inclusion_failures"]) + " of " +
           num(p["inclusion_instances"]) + " inclusions fail (tolerance 0); with m = n + max{i1,j1,i2,j2}: " +
           num(p["corrected_m_failures"]) + " failures; inversion failures " + num(p["inversion_failures"]) +
           "; first " + first_witness(r));
}

void prop2() {
  auto r = verify_prop2(10, 10);
  const auto& p = r.parameters;
  line(r.verdict == Verdict::verified, "prop2_tau2",
       "indices <= 10, n <= 10: " + num(p["inclusion_failures"]) + " of " + num(p["inclusion_instances"]) +
           " inclusions fail (tolerance 0); with m = n + max: " + num(p["corrected_m_failures"]) +
           " failures; inversion failures " + num(p["inversion_failures"]) + "; cl(O_n(x)) = updown(x) failures " +
           num(p["closure_failures"]) + " of " + num(p["closure_instances"]) + "; count min(i,j)+n failures " +
           num(p["finiteness_failures"]) + "; closure equals the down-set in " + num(p["closure_equals_down_set"]) +
           " cases; first " + first_witness(r));
}

void prop3() {
  auto r = verify_prop3(8, 100);
  const auto& p = r.parameters;
  line(r.verdict == Verdict::verified, "prop3_tauc",
       "i,j,k,l <= 8: shift failures " + num(p["shift_failures"]) + " of " + num(p["shift_instances"]) +
           ", cofinite failures " + num(p["cofinite_failures"]) + ", subcover failures " + num(p["subcover_failures"]) +
           " of " + num(p["subcover_instances"]) + " covers (tolerance 0)");
}

void remark1() {
  auto r = verify_remark1(10);
  line(r.verdict == Verdict::verified, "remark1_isolated_points",
       "[0,10]^2 isolated counts " + r.parameters["isolated_points"].dump() +
           "; criterion: a countable T1 space without isolated points is not Baire");
}

void thm1() {
  auto r = verify_thm1(6, 60);
  const auto& p = r.parameters;
  line(r.verdict == Verdict::verified, "thm1_finite_solution_sets",
       "isolated/target pairs <= (6,6): " + num(p["failures"]) + " of " + num(p["instances"]) +
           " solution sets incomplete, infinite or missing the target on window 60 (tolerance 0); largest set " +
           num(p["largest_solution_set"]));
}

void thm2_3() {
  auto q = verify_quasireg(6, 6);
  auto s = verify_semireg(6, 10);
  const auto& regular = s.parameters["regular_basic_opens"];
  bool ok = q.verdict == Verdict::verified && s.verdict == Verdict::verified && regular.empty();
  std::string first = regular.empty() ? "none" : regular.front().dump();
  long long largest_n = -1;
  for (const auto& u : regular) largest_n = std::max(largest_n, u["n"].get<long long>());
  line(ok, "thm2_3_quasireg_semireg",
       "quasireg " + std::string(verdict_name(q.verdict)) + " (" + num(q.parameters["failures"]) + " of " +
           num(q.parameters["instances"]) + " points misbehave), semireg " + std::string(verdict_name(s.verdict)) + " (" +
           num(s.parameters["failures"]) + " of " + num(s.parameters["instances"]) +
           " points misbehave); basic opens with int(cl(U)) = U, x <= (6,6), n <= 10: " +
           std::to_string(regular.size()) + " (tolerance 0), largest such n " + std::to_string(largest_n) +
           ", first " + first);
}

void region_suite() {
  auto r = verify_region_suite(1000, 40);
  long long checks = 0, bad = 0;
  for (const auto& [key, value] : r.parameters.items()) {
    if (key.ends_with("_instances")) checks += value.get<long long>();
    if (key.ends_with("_failures")) bad += value.get<long long>();
  }
  line(r.verdict == Verdict::verified, "region_algebra_soundness",
       "1000 cases per op on window 40: " + std::to_string(bad) + " disagreements in " + std::to_string(checks) +
           " checks, complement involution and De Morgan included (tolerance 0); per op " +
           r.parameters["failures_by_op"].dump());
}

}  // namespace

int main() {
  mul_oracle();
  semigroup_laws();
  lemma1();
  lemma2();
  prop1();
  prop2();
  prop3();
  remark1();
  thm1();
  thm2_3();
  region_suite();
  std::printf("%d of 11 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
