// SPDX-License-Identifier: Apache-2.0
#include "bct/verify.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "bct/json_io.hpp"
#include "bct/oracle.hpp"
#include "bct/order_sets.hpp"
#include "bct/solve.hpp"
#include "verify_util.hpp"

namespace bct {

using detail::BasicCache;
using detail::Recorder;
using detail::Sampler;

namespace {

Json elements_json(const std::vector<Element>& xs) {
  Json out = Json::array();
  for (const Element& x : xs) {
    out.push_back(element_json(x));
  }
  return out;
}

// The m of the product inclusions, as displayed, and the corrected value
// n + max{i1, j1, i2, j2} that the product actually needs.
int stated_m(int n, int i1, int j1, int i2, int j2) { return std::max({2 * n, i1, j1, i2, j2}); }
int corrected_m(int n, int i1, int j1, int i2, int j2) { return n + std::max({i1, j1, i2, j2}); }

// Confirms one symbolic product verdict by brute force. A symbolic failure
// comes with factors, which must multiply (by rewriting) outside the target.
void confirm_product(const Topology& t, const Region& a, const Region& b, const Element& ab, int n,
                     bool symbolic_ok, const std::optional<std::pair<Element, Element>>& factors,
                     const Crosscheck& cc, Sampler& sampler) {
  const Region target = t.basic(ab, n);
  if (symbolic_ok) {
    if (detail::brute_product_escape(a, b, target, cc.window)) {
      ++sampler.disagreements;
    }
    return;
  }
  if (!factors) {
    ++sampler.disagreements;
    return;
  }
  oracle::Point z = oracle::oracle_mul_runs(detail::to_point(factors->first), detail::to_point(factors->second));
  if (oracle::basic_contains(t, detail::to_point(ab), static_cast<std::size_t>(n), z)) {
    ++sampler.disagreements;
  }
}

struct ProductSweep {
  Verdict verdict = Verdict::verified;
  std::size_t corrected_failures = 0;
};

// U_m(a)·U_m(b) ⊆ U_n(ab) over the box, with the displayed m; the corrected
// m is swept alongside and only counted.
ProductSweep product_sweep(const Topology& t, int max_index, int max_n, const Crosscheck& cc,
                           Sampler& sampler, WitnessReport& r) {
  const int cache_n = std::max(2 * max_n, max_n + max_index);
  BasicCache factors(t, max_index, std::max(cache_n, max_index));
  BasicCache targets(t, 2 * max_index, max_n);
  Recorder rec;
  ProductSweep out;
  for (int i1 = 0; i1 <= max_index; ++i1) {
    for (int j1 = 0; j1 <= max_index; ++j1) {
      for (int i2 = 0; i2 <= max_index; ++i2) {
        for (int j2 = 0; j2 <= max_index; ++j2) {
          const Element a(i1, j1);
          const Element b(i2, j2);
          const Element ab = mul(a, b);
          const int abi = static_cast<int>(to_size(ab.i()));
          const int abj = static_cast<int>(to_size(ab.j()));
          for (int n = 0; n <= max_n; ++n) {
            const int m = stated_m(n, i1, j1, i2, j2);
            const Region& ua = factors.region(i1, j1, m);
            const Region& ub = factors.region(i2, j2, m);
            const bool ok = detail::product_within(ua, ub, targets.outside(abi, abj, n));
            std::optional<std::pair<Element, Element>> found;
            if (ok && !rec.wants_example()) {
              rec.count();
            } else if (ok) {
              rec.pass({{"a", element_json(a)}, {"b", element_json(b)}, {"n", n}, {"m", m}}, {{"included", true}});
            } else if (!rec.wants_failure()) {
              rec.fail({}, {});
            } else {
              Json input = {{"a", element_json(a)}, {"b", element_json(b)}, {"n", n}, {"m", m}};
              found = detail::product_escape(ua, ub, targets.region(abi, abj, n));
              Json w = {{"included", false}, {"target", element_json(ab)}};
              if (found) {
                w["factors"] = detail::pair_json(found->first, found->second);
              }
              rec.fail(std::move(input), std::move(w));
            }
            if (sampler.take()) {
              if (!ok && !found) {
                found = detail::product_escape(ua, ub, targets.region(abi, abj, n));
              }
              confirm_product(t, ua, ub, ab, n, ok, found, cc, sampler);
            }
            const int m2 = corrected_m(n, i1, j1, i2, j2);
            if (!detail::product_within(factors.region(i1, j1, m2), factors.region(i2, j2, m2),
                                        targets.outside(abi, abj, n))) {
              ++out.corrected_failures;
            }
          }
        }
      }
    }
  }
  out.verdict = rec.finish(r, "inclusion_");
  r.parameters["corrected_m_failures"] = out.corrected_failures;
  return out;
}

Verdict inversion_sweep(const Topology& t, int max_index, int max_n, const Crosscheck& cc,
                        Sampler& sampler, WitnessReport& r) {
  Recorder rec;
  for (int i = 0; i <= max_index; ++i) {
    for (int j = 0; j <= max_index; ++j) {
      for (int n = 0; n <= max_n; ++n) {
        const Element x(i, j);
        const Region u = t.basic(x, n);
        const Region expected = t.basic(inv(x), n);
        const Region got = inverse_image(u);
        Json input = {{"x", element_json(x)}, {"n", n}};
        if (got == expected) {
          rec.count();
        } else {
          rec.fail(std::move(input), {{"inverse_image", region_json(got)}, {"expected", region_json(expected)}});
        }
        if (sampler.take() && detail::brute_inverse_equal(u, expected, cc.window) != (got == expected)) {
          ++sampler.disagreements;
        }
      }
    }
  }
  return rec.finish(r, "inversion_");
}

void add_sweep_notes(WitnessReport& r, const ProductSweep& s, const std::string& m_text) {
  if (s.verdict == Verdict::counterexample) {
    r.notes.push_back("the product inclusion fails for some instances with m = " + m_text +
                      "; witnesses give factors x, y with x·y outside the target neighbourhood");
    r.notes.push_back(s.corrected_failures == 0
                          ? "with m = n + max{i1, j1, i2, j2} the inclusion holds on the whole box"
                          : "the inclusion also fails for some instances with m = n + max{i1, j1, i2, j2}");
  }
}

}  // namespace

WitnessReport verify_prop1(int max_index, int max_n, const Crosscheck& cc) {
  detail::Stopwatch clock;
  WitnessReport r;
  r.claim_id = "prop1";
  r.parameters = {{"topology", "tau1"}, {"max_index", max_index}, {"max_n", max_n}};
  Sampler sampler(cc);
  ProductSweep s = product_sweep(Topology::tau1(), max_index, max_n, cc, sampler, r);
  Verdict v = combine(s.verdict, inversion_sweep(Topology::tau1(), max_index, max_n, cc, sampler, r));
  sampler.write(r);
  if (sampler.disagreements > 0) {
    v = Verdict::counterexample;
    r.notes.push_back("window brute force disagrees with the symbolic check");
  }
  add_sweep_notes(r, s, "max{2n, i1, j1, i2, j2}");
  r.verdict = v;
  r.elapsed_ms = clock.ms();
  return r;
}

WitnessReport verify_prop2(int max_index, int max_n, const Crosscheck& cc) {
  detail::Stopwatch clock;
  WitnessReport r;
  r.claim_id = "prop2";
  r.parameters = {{"topology", "tau2"}, {"max_index", max_index}, {"max_n", max_n}};
  const Topology t = Topology::tau2();
  Sampler sampler(cc);
  ProductSweep s = product_sweep(t, max_index, max_n, cc, sampler, r);
  Verdict v = combine(s.verdict, inversion_sweep(t, max_index, max_n, cc, sampler, r));

  Recorder finite;
  Recorder closed;
  std::size_t closure_is_down_set = 0;
  for (int i = 0; i <= max_index; ++i) {
    for (int j = 0; j <= max_index; ++j) {
      const Element x(i, j);
      const Region updown = updown_set(x);
      for (int n = 0; n <= max_n; ++n) {
        const Region o = t.basic(x, n);
        const Region rest = difference(updown, o);
        const std::optional<Integer> size = cardinality(rest);
        const Integer expected = std::min(i, j) + n;
        Json input = {{"x", element_json(x)}, {"n", n}};
        if (size && *size == expected) {
          finite.pass(input, {{"size", integer_json(*size)}, {"points", elements_json(detail::finite_members(rest))}});
        } else {
          finite.fail(input, {{"size", size ? integer_json(*size) : Json("infinite")},
                              {"expected", integer_json(expected)}});
        }
        const Region cl = closure(t, o);
        if (cl == down_set(x)) {
          ++closure_is_down_set;
        }
        if (cl == updown) {
          closed.count();
        } else {
          closed.fail(input, {{"closure", region_json(cl)}, {"updown_set", region_json(updown)}});
        }
        if (sampler.take()) {
          if (size && oracle::window_eval(rest, Window{cc.window}).count() != to_size(*size)) {
            ++sampler.disagreements;
          }
          oracle::CheckInputs in;
          in.a = o;
          in.topology = t;
          if (!oracle::crosscheck(oracle::CheckOp::closure_membership, in, Window{cc.window}).pass) {
            ++sampler.disagreements;
          }
        }
      }
    }
  }
  v = combine(v, finite.finish(r, "finiteness_"));
  v = combine(v, closed.finish(r, "closure_"));
  r.parameters["closure_equals_down_set"] = closure_is_down_set;
  sampler.write(r);
  if (sampler.disagreements > 0) {
    v = Verdict::counterexample;
    r.notes.push_back("window brute force disagrees with the symbolic check");
  }
  add_sweep_notes(r, s, "max{2n, i1, j1, i2, j2}");
  r.notes.push_back("cl(O_n(x)) is the whole diagonal ↕x; it equals ↓x only when min(i,j) = 0");
  r.verdict = v;
  r.elapsed_ms = clock.ms();
  return r;
}

WitnessReport verify_prop3(int max_index, int covers, const Crosscheck& cc) {
  detail::Stopwatch clock;
  WitnessReport r;
  r.claim_id = "prop3";
  r.parameters = {{"topology", "tauc"}, {"max_index", max_index}, {"covers", covers}};
  const Topology t = Topology::tauc();
  BasicCache factors(t, max_index, 2 * max_index);
  BasicCache targets(t, 2 * max_index, max_index);
  Sampler sampler(cc);
  Recorder shifts;
  for (int i = 0; i <= max_index; ++i) {
    for (int j = 0; j <= max_index; ++j) {
      const Element a(i, j);
      const Region pa = point(a);
      for (int k = 0; k <= max_index; ++k) {
        for (int l = 0; l <= max_index; ++l) {
          const Element x(k, l);
          const int m = std::max({i, j, k, l});
          const Region& w2m = factors.region(k, l, 2 * m);
          for (Side side : {Side::left, Side::right}) {
            const bool left = side == Side::left;
            const Element prod = left ? mul(a, x) : mul(x, a);
            const int pi = static_cast<int>(to_size(prod.i()));
            const int pj = static_cast<int>(to_size(prod.j()));
            const Region& lhs = left ? pa : w2m;
            const Region& rhs = left ? w2m : pa;
            const bool ok = detail::product_within(lhs, rhs, targets.outside(pi, pj, m));
            Json input = {{"a", element_json(a)}, {"x", element_json(x)}, {"m", m}, {"side", left ? "left" : "right"}};
            std::optional<std::pair<Element, Element>> found;
            if (ok && !shifts.wants_example()) {
              shifts.count();
            } else if (ok) {
              shifts.pass(std::move(input), {{"included", true}});
            } else {
              found = detail::product_escape(lhs, rhs, targets.region(pi, pj, m));
              Json w = {{"included", false}};
              if (found) {
                w["factors"] = detail::pair_json(found->first, found->second);
              }
              shifts.fail(std::move(input), std::move(w));
            }
            if (sampler.take()) {
              confirm_product(t, lhs, rhs, prod, m, ok, found, cc, sampler);
            }
          }
        }
      }
    }
  }
  Verdict v = shifts.finish(r, "shift_");
  v = combine(v, inversion_sweep(t, max_index, 2 * max_index, cc, sampler, r));

  Recorder cofinite;
  for (int i = 0; i <= max_index; ++i) {
    for (int j = 0; j <= max_index; ++j) {
      for (int n = 0; n <= 2 * max_index; ++n) {
        const Region& w = factors.region(i, j, n);
        if (is_cofinite(w)) {
          cofinite.count();
        } else {
          cofinite.fail({{"x", element_json(Element(i, j))}, {"n", n}}, {{"basic", region_json(w)}});
        }
      }
    }
  }
  v = combine(v, cofinite.finish(r, "cofinite_"));

  WitnessReport sub = verify_subcover_tauc(covers, max_index);
  r.parameters["subcover_instances"] = sub.parameters["instances"];
  r.parameters["subcover_failures"] = sub.parameters["failures"];
  if (sub.verdict != Verdict::verified) {
    r.witnesses.insert(r.witnesses.end(), sub.witnesses.begin(), sub.witnesses.end());
  }
  v = combine(v, sub.verdict);

  sampler.write(r);
  if (sampler.disagreements > 0) {
    v = Verdict::counterexample;
    r.notes.push_back("window brute force disagrees with the symbolic check");
  }
  r.verdict = v;
  r.elapsed_ms = clock.ms();
  return r;
}

namespace {

// The diagonal through p inside [0,limit]², from the definition.
std::vector<oracle::Point> diagonal_points(std::size_t i, std::size_t j, std::size_t limit) {
  std::vector<oracle::Point> out;
  const std::size_t back = std::min(i, j);
  for (std::size_t s = i - back, t = j - back; s <= limit && t <= limit; ++s, ++t) {
    out.push_back({s, t});
  }
  return out;
}

}  // namespace

WitnessReport verify_lemma2(int max_index, std::size_t window) {
  detail::Stopwatch clock;
  WitnessReport r;
  r.claim_id = "lemma2";
  r.parameters = {{"max_index", max_index}, {"window", window}};
  Recorder equal;
  std::size_t inclusion_failures = 0;
  std::size_t window_disagreements = 0;
  bool sign_pattern = true;
  // A point of the product inside [0,w]² has factors inside [0,w + 2·max]²,
  // so factors from [0,2w]² make the window comparison exact once w ≥ 2·max.
  const std::size_t factor_limit = 2 * window + 2 * static_cast<std::size_t>(max_index);
  for (int i = 0; i <= max_index; ++i) {
    for (int j = 0; j <= max_index; ++j) {
      const Element a(i, j);
      const Region ua = updown_set(a);
      const auto pa = diagonal_points(i, j, factor_limit);
      for (int s = 0; s <= max_index; ++s) {
        for (int t = 0; t <= max_index; ++t) {
          const Element b(s, t);
          const Region prod = product_image(ua, updown_set(b));
          const Element anchor(i + s, j + t);
          const Region expected = updown_set(anchor);
          const bool eq = prod == expected;
          if (!subset(prod, expected)) {
            ++inclusion_failures;
          }
          if (eq == (i > j && s < t)) {
            sign_pattern = false;
          }
          Json input = {{"a", element_json(a)}, {"b", element_json(b)}};
          if (eq) {
            equal.pass(std::move(input), {{"product", region_json(prod)}});
          } else {
            Json w = {{"expected_anchor", element_json(anchor)}, {"product", region_json(prod)}};
            if (auto miss = first_member(difference(expected, prod))) {
              w["missing"] = element_json(*miss);
            }
            equal.fail(std::move(input), std::move(w));
          }

          oracle::WindowSet brute{Window{window}};
          for (const oracle::Point& x : pa) {
            for (const oracle::Point& y : diagonal_points(s, t, factor_limit)) {
              oracle::Point z = oracle::oracle_mul_runs(x, y);
              if (z.i <= window && z.j <= window) {
                brute.set(z.i, z.j);
              }
            }
          }
          if (!(brute == oracle::window_eval(prod, Window{window}))) {
            ++window_disagreements;
          }
        }
      }
    }
  }
  Verdict v = equal.finish(r);
  r.parameters["inclusion_failures"] = inclusion_failures;
  r.parameters["failures_match_sign_pattern"] = sign_pattern;
  r.parameters["window_disagreements"] = window_disagreements;
  if (inclusion_failures > 0 || window_disagreements > 0) {
    v = Verdict::counterexample;
  }
  if (equal.failures() > 0) {
    r.notes.push_back(
        "↕a·↕b ⊆ ↕(i+s, j+t) always holds, but equality fails exactly when i > j and s < t: the "
        "product then misses the first points of the target diagonal");
  }
  r.verdict = v;
  r.elapsed_ms = clock.ms();
  return r;
}

WitnessReport verify_trace_injectivity(int n) {
  detail::Stopwatch clock;
  WitnessReport r;
  r.claim_id = "lemma3_trace";
  r.parameters = {{"max_index", n}};
  Recorder rec;
  std::map<std::pair<oracle::Point, oracle::Point>, Element> seen;
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      const Element x(i, j);
      const auto [l, rr] = trace(x);
      const oracle::Point px = detail::to_point(x);
      const oracle::Point pinv{px.j, px.i};
      const oracle::Point ol = oracle::oracle_mul(px, pinv);
      const oracle::Point orr = oracle::oracle_mul(pinv, px);
      Json input = {{"x", element_json(x)}};
      Json w = {{"left", element_json(l)}, {"right", element_json(rr)}};
      const bool formula = l == Element(i, i) && rr == Element(j, j) && detail::to_point(l) == ol &&
                           detail::to_point(rr) == orr;
      auto [it, fresh] = seen.emplace(std::make_pair(ol, orr), x);
      if (!fresh) {
        w["collides_with"] = element_json(it->second);
      }
      if (formula && fresh) {
        rec.pass(std::move(input), std::move(w));
      } else {
        rec.fail(std::move(input), std::move(w));
      }
    }
  }
  r.verdict = rec.finish(r);
  r.notes.push_back(
      "checks only that x is determined by (xx⁻¹, x⁻¹x); continuity of x ↦ xx⁻¹ and x ↦ x⁻¹x is a "
      "topological hypothesis and is not checked here");
  r.elapsed_ms = clock.ms();
  return r;
}

WitnessReport verify_lemma4(int max_index, int depth) {
  detail::Stopwatch clock;
  WitnessReport r;
  r.claim_id = "lemma4_homeo";
  r.parameters = {{"max_index", max_index}, {"depth", depth}};
  Recorder rec;
  auto oracle_translate = [](const oracle::Point& left, const oracle::Point& right, const oracle::Point& y) {
    return oracle::oracle_mul_runs(oracle::oracle_mul_runs(left, y), right);
  };
  for (int i = 0; i <= max_index; ++i) {
    for (int j = 0; j <= max_index; ++j) {
      for (int m = 0; m <= max_index; ++m) {
        for (int n = 0; n <= max_index; ++n) {
          const oracle::Point fl{std::size_t(i), std::size_t(m)};
          const oracle::Point fr{std::size_t(n), std::size_t(j)};
          const oracle::Point gl{std::size_t(m), std::size_t(i)};
          const oracle::Point gr{std::size_t(j), std::size_t(n)};
          bool ok = true;
          Json bad;
          for (int k = 0; k <= depth && ok; ++k) {
            const Element below(m + k, n + k);
            const Element image(i + k, j + k);
            const Element there = translate(i, j, m, n, below);
            const Element back = translate(m, n, i, j, there);
            const bool agree = detail::to_point(there) == oracle_translate(fl, fr, detail::to_point(below)) &&
                               detail::to_point(back) == oracle_translate(gl, gr, detail::to_point(there));
            if (there != image || back != below || !agree) {
              ok = false;
              bad = {{"k", k}, {"image", element_json(there)}, {"round_trip", element_json(back)}};
            }
          }
          Json input = {{"from", element_json(Element(m, n))}, {"to", element_json(Element(i, j))}};
          if (ok) {
            rec.pass(std::move(input), {{"checked_depth", depth}});
          } else {
            rec.fail(std::move(input), std::move(bad));
          }
        }
      }
    }
  }
  r.verdict = rec.finish(r);
  r.elapsed_ms = clock.ms();
  return r;
}

WitnessReport thm1_propagate(const Element& isolated, const Element& target, std::size_t window) {
  detail::Stopwatch clock;
  WitnessReport r;
  r.claim_id = "thm1_propagate";
  r.parameters = {{"isolated", element_json(isolated)}, {"target", element_json(target)}, {"window", window}};
  const Element left(isolated.i(), target.i());
  const Element right(target.j(), isolated.j());
  const std::vector<Element> sols = solve_two_sided(left, right, isolated);
  const SolutionBound bound = solve_two_sided_bound(left, right, isolated);

  std::vector<Element> brute;
  const oracle::Point pl = detail::to_point(left);
  const oracle::Point pr = detail::to_point(right);
  const oracle::Point goal = detail::to_point(isolated);
  for (std::size_t i = 0; i <= window; ++i) {
    for (std::size_t j = 0; j <= window; ++j) {
      if (oracle::oracle_mul_runs(oracle::oracle_mul_runs(pl, {i, j}), pr) == goal) {
        brute.push_back(detail::to_element({i, j}));
      }
    }
  }
  const bool contains = std::find(sols.begin(), sols.end(), target) != sols.end();
  const bool in_bound = std::all_of(sols.begin(), sols.end(), [&](const Element& x) {
    return x.i() <= bound.max_i && x.j() <= bound.max_j;
  });
  const bool bound_in_window = bound.max_i <= window && bound.max_j <= window;
  const bool complete = sols == brute;

  Json w = {{"solutions", elements_json(sols)},
            {"count", sols.size()},
            {"bound", {{"max_i", integer_json(bound.max_i)}, {"max_j", integer_json(bound.max_j)}}},
            {"contains_target", contains},
            {"matches_window", complete}};
  if (!complete) {
    w["window_solutions"] = elements_json(brute);
  }
  r.witnesses.push_back({{{"left", element_json(left)}, {"right", element_json(right)}, {"rhs", element_json(isolated)}},
                         std::move(w)});
  r.verdict = contains && in_bound && bound_in_window && complete ? Verdict::verified : Verdict::counterexample;
  r.elapsed_ms = clock.ms();
  return r;
}

WitnessReport verify_thm1(int max_index, std::size_t window) {
  detail::Stopwatch clock;
  WitnessReport r;
  r.claim_id = "thm1_propagate";
  r.parameters = {{"max_index", max_index}, {"window", window}};
  Recorder rec;
  std::size_t largest = 0;
  for (int i = 0; i <= max_index; ++i) {
    for (int j = 0; j <= max_index; ++j) {
      for (int m = 0; m <= max_index; ++m) {
        for (int n = 0; n <= max_index; ++n) {
          WitnessReport one = thm1_propagate(Element(i, j), Element(m, n), window);
          Json input = {{"isolated", element_json(Element(i, j))}, {"target", element_json(Element(m, n))}};
          largest = std::max(largest, one.witnesses.front().witness["count"].get<std::size_t>());
          if (one.verdict == Verdict::verified) {
            rec.pass(std::move(input), one.witnesses.front().witness);
          } else {
            rec.fail(std::move(input), one.witnesses.front().witness);
          }
        }
      }
    }
  }
  r.verdict = rec.finish(r);
  r.parameters["largest_solution_set"] = largest;
  r.notes.push_back(
      "checks the mechanics only: each equation q^i p^m · X · q^n p^j = q^i p^j has a finite, complete "
      "solution set containing the target; no Baire-category statement is decided");
  r.elapsed_ms = clock.ms();
  return r;
}

}  // namespace bct
