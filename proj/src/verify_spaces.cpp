// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "bct/json_io.hpp"
#include "bct/oracle.hpp"
#include "bct/order_sets.hpp"
#include "bct/verify.hpp"
#include "verify_util.hpp"

namespace bct {

using detail::Recorder;

namespace {

bool non_discrete(const Topology& t) { return t.id() != Topology::Id::discrete; }

Json topology_json(const Topology& t) { return std::string(t.name()); }

Region subspace(SubspaceKind kind, const Element& x) {
  return kind == SubspaceKind::down_set ? down_set(x) : idempotents();
}

std::string_view kind_name(SubspaceKind kind) {
  return kind == SubspaceKind::down_set ? "down_set" : "idempotents";
}

}  // namespace

WitnessReport quasireg_fail(const Topology& t, SubspaceKind kind, const Element& x, int max_n) {
  detail::Stopwatch clock;
  const Region y = subspace(kind, x);
  if (!member(y, x)) {
    throw std::invalid_argument(to_pair_string(x) + " is not a point of the subspace");
  }
  WitnessReport r;
  r.claim_id = "quasireg_fail";
  r.parameters = {{"topology", topology_json(t)},
                  {"subspace", kind_name(kind)},
                  {"x", element_json(x)},
                  {"max_n", max_n}};

  if (!non_discrete(t)) {
    // {x} is open, and its relative closure {x} lies in every neighbourhood.
    const Region v = point(x);
    r.witnesses.push_back({{{"V", region_json(v)}},
                           {{"closure_in_subspace", region_json(subspace_closure(t, y, v))}}});
    r.notes.push_back("the subspace is quasi-regular at x: V = {x} is open with cl_Y(V) = {x}");
    r.verdict = Verdict::counterexample;
    r.elapsed_ms = clock.ms();
    return r;
  }

  // U: the first basic trace at x that is a proper subset of Y.
  // Past max(i,j) + 1 every built-in tail misses the next point of Y.
  const int n_limit = static_cast<int>(to_size(max(x.i(), x.j()))) + max_n + 2;
  std::optional<int> n0;
  for (int n = 0; n <= n_limit && !n0; ++n) {
    if (!subset(y, t.basic(x, n))) {
      n0 = n;
    }
  }
  if (!n0) {
    r.notes.push_back("every basic trace at x is the whole subspace");
    r.verdict = Verdict::counterexample;
    r.elapsed_ms = clock.ms();
    return r;
  }
  const Region u = intersect(t.basic(x, *n0), y);

  // Candidate opens: traces of basic opens at points of Y near x.
  const std::size_t reach = to_size(max(x.i(), x.j())) + static_cast<std::size_t>(max_n) + 1;
  std::size_t candidates = 0;
  std::size_t dense = 0;
  std::optional<Witness> escape;
  for (const Element& p : enumerate(y, Window{reach})) {
    for (int n = 0; n <= max_n; ++n) {
      const Region v = intersect(t.basic(p, n), y);
      const Region cl = subspace_closure(t, y, v);
      ++candidates;
      if (cl == y) {
        ++dense;
      }
      if (subset(cl, u) && !escape) {
        escape = Witness{{{"p", element_json(p)}, {"n", n}}, {{"closure_in_subspace", region_json(cl)}}};
      }
    }
  }
  r.parameters["candidates"] = candidates;
  r.parameters["dense_candidates"] = dense;
  r.witnesses.push_back({{{"U_n", *n0}}, {{"U", region_json(u)}, {"subspace", region_json(y)}}});
  if (escape) {
    r.witnesses.push_back(*escape);
    r.notes.push_back("some candidate open has its relative closure inside U");
    r.verdict = Verdict::counterexample;
  } else {
    r.notes.push_back(dense == candidates
                          ? "every candidate open is dense in Y, so no relative closure fits inside U"
                          : "no candidate open has its relative closure inside U");
    r.verdict = Verdict::verified;
  }
  r.elapsed_ms = clock.ms();
  return r;
}

WitnessReport verify_quasireg(int max_index, int max_n) {
  detail::Stopwatch clock;
  WitnessReport r;
  r.claim_id = "quasireg_fail";
  r.parameters = {{"max_index", max_index}, {"max_n", max_n}};
  Recorder rec;
  for (const Topology& t : Topology::all()) {
    for (SubspaceKind kind : {SubspaceKind::down_set, SubspaceKind::idempotents}) {
      for (int i = 0; i <= max_index; ++i) {
        for (int j = 0; j <= max_index; ++j) {
          if (kind == SubspaceKind::idempotents && i != j) {
            continue;
          }
          const Element x(i, j);
          WitnessReport one = quasireg_fail(t, kind, x, max_n);
          const Verdict want = non_discrete(t) ? Verdict::verified : Verdict::counterexample;
          Json input = {{"topology", topology_json(t)}, {"subspace", kind_name(kind)}, {"x", element_json(x)}};
          Json w = {{"verdict", verdict_name(one.verdict)}};
          if (one.verdict == want) {
            rec.pass(std::move(input), std::move(w));
          } else {
            w["witnesses"] = to_json(one)["witnesses"];
            rec.fail(std::move(input), std::move(w));
          }
        }
      }
    }
  }
  r.verdict = rec.finish(r);
  r.notes.push_back("tau1, tau2, tauc fail quasi-regularity on every tested subspace; discrete does not");
  r.elapsed_ms = clock.ms();
  return r;
}

WitnessReport semireg_fail(const Topology& t, const Element& x, int max_n) {
  detail::Stopwatch clock;
  WitnessReport r;
  r.claim_id = "semireg_fail";
  r.parameters = {{"topology", topology_json(t)}, {"x", element_json(x)}, {"max_n", max_n}};
  std::vector<Region> regularised;
  Json regular = Json::array();
  for (int n = 0; n <= max_n; ++n) {
    const Region u = t.basic(x, n);
    Region ic = interior(t, closure(t, u));
    const bool is_regular = ic == u;
    regular.push_back(is_regular);
    r.witnesses.push_back({{{"n", n}}, {{"int_cl", region_json(ic)}, {"regular_open", is_regular}}});
    regularised.push_back(std::move(ic));
  }
  r.parameters["regular_open"] = regular;

  if (!non_discrete(t)) {
    r.notes.push_back("discrete is semiregular: every {x} is regular open");
    r.verdict = Verdict::counterexample;
    r.elapsed_ms = clock.ms();
    return r;
  }
  // int(cl(basic(x,n))) shrinks with n, so the last one is the smallest.
  std::optional<int> n0;
  for (int n = 0; n <= max_n + 1 && !n0; ++n) {
    if (!subset(regularised.back(), t.basic(x, n))) {
      n0 = n;
    }
  }
  if (n0) {
    r.parameters["U_n"] = *n0;
    r.notes.push_back("int(cl(basic(x,n))) ⊄ basic(x," + std::to_string(*n0) + ") for every n ≤ max_n");
    r.verdict = Verdict::verified;
  } else {
    r.notes.push_back("no basic neighbourhood separates the regularisations");
    r.verdict = Verdict::counterexample;
  }
  r.elapsed_ms = clock.ms();
  return r;
}

WitnessReport verify_semireg(int max_index, int max_n) {
  detail::Stopwatch clock;
  WitnessReport r;
  r.claim_id = "semireg_fail";
  r.parameters = {{"max_index", max_index}, {"max_n", max_n}};
  Recorder rec;
  Json regular_basics = Json::array();
  for (const Topology& t : Topology::all()) {
    for (int i = 0; i <= max_index; ++i) {
      for (int j = 0; j <= max_index; ++j) {
        const Element x(i, j);
        WitnessReport one = semireg_fail(t, x, max_n);
        const Verdict want = non_discrete(t) ? Verdict::verified : Verdict::counterexample;
        if (non_discrete(t)) {
          const Json& flags = one.parameters["regular_open"];
          for (int n = 0; n <= max_n; ++n) {
            if (flags[static_cast<std::size_t>(n)].get<bool>()) {
              regular_basics.push_back({{"topology", topology_json(t)}, {"x", element_json(x)}, {"n", n}});
            }
          }
        }
        Json input = {{"topology", topology_json(t)}, {"x", element_json(x)}};
        Json w = {{"verdict", verdict_name(one.verdict)}};
        if (one.parameters.contains("U_n")) {
          w["U_n"] = one.parameters["U_n"];
        }
        if (one.verdict == want) {
          rec.pass(std::move(input), std::move(w));
        } else {
          rec.fail(std::move(input), std::move(w));
        }
      }
    }
  }
  r.verdict = rec.finish(r);
  r.parameters["regular_basic_opens"] = regular_basics;
  if (!regular_basics.empty()) {
    r.notes.push_back(
        "some basic opens of the non-discrete topologies are regular open (listed in regular_basic_opens); "
        "semiregularity still fails because smaller neighbourhoods contain none");
  }
  r.elapsed_ms = clock.ms();
  return r;
}

WitnessReport verify_inv_continuity(int max_index, int max_n) {
  detail::Stopwatch clock;
  WitnessReport r;
  r.claim_id = "inv_continuity";
  r.parameters = {{"max_index", max_index}, {"max_n", max_n}};
  Recorder rec;
  for (const Topology& t : Topology::all()) {
    for (int i = 0; i <= max_index; ++i) {
      for (int j = 0; j <= max_index; ++j) {
        for (int n = 0; n <= max_n; ++n) {
          const Element x(i, j);
          const Region got = inverse_image(t.basic(x, n));
          const Region want = t.basic(inv(x), n);
          Json input = {{"topology", topology_json(t)}, {"x", element_json(x)}, {"n", n}};
          if (got == want) {
            rec.count();
          } else {
            rec.fail(std::move(input), {{"inverse_image", region_json(got)}, {"expected", region_json(want)}});
          }
        }
      }
    }
  }
  r.verdict = rec.finish(r);
  r.elapsed_ms = clock.ms();
  return r;
}

NotACover::NotACover(Element witness)
    : std::invalid_argument("not a cover: " + to_pair_string(witness) + " is missed"),
      witness_(std::move(witness)) {}

namespace {

std::vector<std::size_t> extract(const std::vector<Region>& traces, const Region& space) {
  Region all;
  for (const Region& t : traces) {
    all = unite(all, t);
  }
  if (auto miss = first_member(difference(space, all))) {
    throw NotACover(*miss);
  }
  std::optional<std::size_t> best;
  Integer best_size = 0;
  for (std::size_t k = 0; k < traces.size(); ++k) {
    const std::optional<Integer> rest = cardinality(difference(space, traces[k]));
    if (rest && (!best || *rest < best_size)) {
      best = k;
      best_size = *rest;
    }
  }
  if (!best) {
    // Unreachable for a cover of a space in which every point has a cofinite
    // neighbourhood trace.
    throw std::logic_error("no member with a finite remainder");
  }
  std::set<std::size_t> chosen{*best};
  for (const Element& p : detail::finite_members(difference(space, traces[*best]))) {
    for (std::size_t k = 0; k < traces.size(); ++k) {
      if (member(traces[k], p)) {
        chosen.insert(k);
        break;
      }
    }
  }
  return {chosen.begin(), chosen.end()};
}

}  // namespace

std::vector<std::size_t> subcover_tauc(const std::vector<BasicIndex>& cover) {
  std::vector<Region> traces;
  traces.reserve(cover.size());
  for (const BasicIndex& b : cover) {
    traces.push_back(Topology::tauc().basic(b.x, b.n));
  }
  return extract(traces, Region::full());
}

std::vector<std::size_t> subcover_updown(const Element& x, const std::vector<BasicIndex>& cover) {
  const Region space = updown_set(x);
  std::vector<Region> traces;
  traces.reserve(cover.size());
  for (const BasicIndex& b : cover) {
    traces.push_back(intersect(Topology::tau2().basic(b.x, b.n), space));
  }
  return extract(traces, space);
}

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Json cover_json(const std::vector<BasicIndex>& cover) {
  Json out = Json::array();
  for (const BasicIndex& b : cover) {
    out.push_back({{"x", element_json(b.x)}, {"n", integer_json(b.n)}});
  }
  return out;
}

// Checks a returned subcover: ascending indices into the cover whose traces
// cover the space.
bool check_subcover(const std::vector<std::size_t>& idx, const std::vector<BasicIndex>& cover, const Topology& t,
                    const Region& space) {
  if (!std::is_sorted(idx.begin(), idx.end()) || std::adjacent_find(idx.begin(), idx.end()) != idx.end()) {
    return false;
  }
  Region all;
  for (std::size_t k : idx) {
    if (k >= cover.size()) {
      return false;
    }
    all = unite(all, intersect(t.basic(cover[k].x, cover[k].n), space));
  }
  return all == space;
}

}  // namespace

WitnessReport verify_subcover_tauc(int covers, int max_index, std::uint64_t seed) {
  detail::Stopwatch clock;
  WitnessReport r;
  r.claim_id = "subcover_tauc";
  r.parameters = {{"covers", covers}, {"max_index", max_index}, {"seed", seed}};
  std::mt19937_64 rng(seed);
  const Topology t = Topology::tauc();
  Recorder rec;
  std::size_t largest = 0;
  for (int c = 0; c < covers; ++c) {
    std::vector<BasicIndex> cover;
    const int base = uniform(rng, 1, 4);
    for (int k = 0; k < base; ++k) {
      cover.push_back({Element(uniform(rng, 0, max_index), uniform(rng, 0, max_index)), uniform(rng, 0, max_index)});
    }
    Region all;
    for (const BasicIndex& b : cover) {
      all = unite(all, t.basic(b.x, b.n));
    }
    for (const Element& p : detail::finite_members(complement(all))) {
      cover.push_back({p, uniform(rng, 0, max_index)});
    }
    std::shuffle(cover.begin(), cover.end(), rng);
    const std::vector<std::size_t> sub = subcover_tauc(cover);
    largest = std::max(largest, sub.size());
    Json input = {{"cover_size", cover.size()}};
    if (check_subcover(sub, cover, t, Region::full())) {
      rec.pass(std::move(input), {{"subcover", sub}});
    } else {
      input["cover"] = cover_json(cover);
      rec.fail(std::move(input), {{"subcover", sub}});
    }
  }
  r.verdict = rec.finish(r);
  r.parameters["largest_subcover"] = largest;
  r.elapsed_ms = clock.ms();
  return r;
}

WitnessReport verify_subcover_updown(int covers, int max_index, std::uint64_t seed) {
  detail::Stopwatch clock;
  WitnessReport r;
  r.claim_id = "subcover_updown";
  r.parameters = {{"covers", covers}, {"max_index", max_index}, {"seed", seed}};
  std::mt19937_64 rng(seed);
  const Topology t = Topology::tau2();
  Recorder rec;
  for (int c = 0; c < covers; ++c) {
    const Element x(uniform(rng, 0, max_index), uniform(rng, 0, max_index));
    const Region space = updown_set(x);
    const int back = static_cast<int>(to_size(min(x.i(), x.j())));
    std::vector<BasicIndex> cover;
    // One member on the diagonal of x, whose trace is cofinite there.
    const int r0 = uniform(rng, -back, max_index);
    cover.push_back({Element(Integer(x.i() + r0), Integer(x.j() + r0)), uniform(rng, 0, max_index)});
    for (int k = uniform(rng, 0, 3); k > 0; --k) {
      cover.push_back({Element(uniform(rng, 0, 2 * max_index), uniform(rng, 0, 2 * max_index)), uniform(rng, 0, max_index)});
    }
    Region all;
    for (const BasicIndex& b : cover) {
      all = unite(all, intersect(t.basic(b.x, b.n), space));
    }
    for (const Element& p : detail::finite_members(difference(space, all))) {
      cover.push_back({p, uniform(rng, 0, max_index)});
    }
    std::shuffle(cover.begin(), cover.end(), rng);
    const std::vector<std::size_t> sub = subcover_updown(x, cover);
    Json input = {{"x", element_json(x)}, {"cover_size", cover.size()}};
    if (check_subcover(sub, cover, t, space)) {
      rec.pass(std::move(input), {{"subcover", sub}});
    } else {
      input["cover"] = cover_json(cover);
      rec.fail(std::move(input), {{"subcover", sub}});
    }
  }
  r.verdict = rec.finish(r);
  r.elapsed_ms = clock.ms();
  return r;
}

namespace {

bool shift_within(const Topology& t, const Element& a, const Element& x, const Integer& k, const Region& target,
                  Side side) {
  const Region u = t.basic(x, k);
  return side == Side::left ? product_subset(point(a), u, target) : product_subset(u, point(a), target);
}

}  // namespace

std::optional<Integer> continuity_witness(const Topology& t, const Element& a, const Element& x, const Integer& n,
                                          Side side, const Integer& budget) {
  const Region target = t.basic(side == Side::left ? mul(a, x) : mul(x, a), n);
  if (budget < 0 || !shift_within(t, a, x, budget, target, side)) {
    return std::nullopt;
  }
  // basic(x,k) shrinks as k grows, so the test is monotone in k.
  Integer lo = 0;
  Integer hi = budget;
  while (lo < hi) {
    Integer mid = (lo + hi) / 2;
    if (shift_within(t, a, x, mid, target, side)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

WitnessReport joint_continuity_search(const Topology& t, int bound) {
  detail::Stopwatch clock;
  WitnessReport r;
  r.claim_id = "joint_continuity_search";
  r.parameters = {{"topology", topology_json(t)}, {"bound", bound}};
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::size_t unresolved = 0;
  std::size_t largest_k = 0;
  std::vector<Witness> failed;
  std::vector<Witness> examples;
  for (int i1 = 0; i1 <= bound; ++i1) {
    for (int j1 = 0; j1 <= bound; ++j1) {
      for (int i2 = 0; i2 <= bound; ++i2) {
        for (int j2 = 0; j2 <= bound; ++j2) {
          const Element a(i1, j1);
          const Element b(i2, j2);
          const Element ab = mul(a, b);
          for (int n = 0; n <= bound; ++n) {
            ++instances;
            const Region target = t.basic(ab, n);
            const int kstar = n + std::max({i1, j1, i2, j2}) + 1;
            auto holds = [&](int k) { return product_subset(t.basic(a, k), t.basic(b, k), target); };
            Json input = {{"a", element_json(a)}, {"b", element_json(b)}, {"n", n}};
            if (!holds(kstar)) {
              // tauc: (0,k+1) and (k+1,e) lie in every W_k(a), W_k(b), and
              // their product is (0,e); one such e outside the target breaks
              // the inclusion for all k at once.
              std::optional<int> e;
              if (t.id() == Topology::Id::tauc) {
                for (int c = 0; c <= n && !e; ++c) {
                  if (!member(target, Element(0, c))) {
                    e = c;
                  }
                }
              }
              Json w = {{"k_searched", kstar}};
              if (e) {
                w["all_k"] = "(0,k+1)·(k+1," + std::to_string(*e) + ") = (0," + std::to_string(*e) +
                             ") lies outside the target for every k";
                ++failures;
                if (failed.size() < Recorder::kMaxFailures) {
                  failed.push_back({std::move(input), std::move(w)});
                }
              } else {
                ++unresolved;
                if (auto f = detail::product_escape(t.basic(a, kstar), t.basic(b, kstar), target)) {
                  w["escape_at_k_searched"] = detail::pair_json(f->first, f->second);
                }
                if (failed.size() < Recorder::kMaxFailures) {
                  failed.push_back({std::move(input), std::move(w)});
                }
              }
              continue;
            }
            int lo = 0;
            int hi = kstar;
            while (lo < hi) {
              const int mid = (lo + hi) / 2;
              if (holds(mid)) {
                hi = mid;
              } else {
                lo = mid + 1;
              }
            }
            largest_k = std::max(largest_k, static_cast<std::size_t>(lo));
            if (examples.size() < Recorder::kMaxExamples) {
              examples.push_back({std::move(input), {{"k", lo}}});
            }
          }
        }
      }
    }
  }
  r.parameters["instances"] = instances;
  r.parameters["failures"] = failures;
  r.parameters["unresolved"] = unresolved;
  r.parameters["largest_minimal_k"] = largest_k;
  if (failures > 0) {
    r.verdict = Verdict::counterexample;
    r.witnesses = failed;
    r.notes.push_back("joint continuity of multiplication fails at the listed instances");
  } else if (unresolved > 0) {
    r.verdict = Verdict::inconclusive_budget;
    r.witnesses = failed;
    r.notes.push_back("no k up to n + max coordinate + 1 works at the listed instances; nothing is concluded");
  } else {
    r.verdict = Verdict::verified;
    r.witnesses = examples;
    r.notes.push_back("a minimal k exists for every instance in the box");
  }
  r.elapsed_ms = clock.ms();
  return r;
}

WitnessReport verify_remark1(int max_index) {
  detail::Stopwatch clock;
  WitnessReport r;
  r.claim_id = "remark1_isolated";
  r.parameters = {{"max_index", max_index}};
  Recorder rec;
  Json isolated_counts = Json::object();
  for (const Topology& t : Topology::all()) {
    std::size_t count = 0;
    for (int i = 0; i <= max_index; ++i) {
      for (int j = 0; j <= max_index; ++j) {
        const Element x(i, j);
        const bool iso = is_isolated(t, x);
        count += iso ? 1 : 0;
        Json input = {{"topology", topology_json(t)}, {"x", element_json(x)}};
        if (iso == !non_discrete(t)) {
          rec.count();
        } else {
          rec.fail(std::move(input), {{"isolated", iso}});
        }
      }
    }
    isolated_counts[std::string(t.name())] = count;
  }
  r.verdict = rec.finish(r);
  r.parameters["isolated_points"] = isolated_counts;
  r.notes.push_back(
      "decides isolated points (x ∉ cl(ω² \\ {x})) only; no Baire-category property is decided");
  r.elapsed_ms = clock.ms();
  return r;
}

WitnessReport verify_region_suite(int cases, std::size_t window, std::uint64_t seed) {
  detail::Stopwatch clock;
  WitnessReport r;
  r.claim_id = "region_crosscheck";
  r.parameters = {{"cases", cases}, {"window", window}, {"seed", seed}};
  oracle::RegionGenerator gen(seed);
  Verdict v = Verdict::verified;
  Json per_op = Json::object();
  for (oracle::CheckOp op : oracle::all_ops()) {
    Recorder rec;
    for (int c = 0; c < cases; ++c) {
      oracle::CheckInputs in;
      in.a = gen.next();
      in.b = gen.next();
      in.topology = Topology::all()[static_cast<std::size_t>(c) % Topology::all().size()];
      in.x = gen.element(6);
      in.y = gen.element(6);
      in.z = gen.element(6);
      const oracle::CheckResult res = oracle::crosscheck(op, in, Window{window});
      if (res.pass) {
        rec.count();
      } else {
        Json w = {{"detail", res.detail}};
        if (res.first_difference) {
          w["first_difference"] = element_json(detail::to_element(*res.first_difference));
        }
        rec.fail({{"op", oracle::op_name(op)}, {"a", region_json(in.a)}, {"b", region_json(in.b)}}, std::move(w));
      }
    }
    per_op[std::string(oracle::op_name(op))] = rec.failures();
    v = combine(v, rec.finish(r, std::string(oracle::op_name(op)) + "_"));
  }
  Recorder laws;
  for (int c = 0; c < cases; ++c) {
    const Region a = gen.next();
    const Region b = gen.next();
    const bool involution = complement(complement(a)) == a;
    const bool de_morgan_union = complement(unite(a, b)) == intersect(complement(a), complement(b));
    const bool de_morgan_meet = complement(intersect(a, b)) == unite(complement(a), complement(b));
    if (involution && de_morgan_union && de_morgan_meet) {
      laws.count();
    } else {
      laws.fail({{"a", region_json(a)}, {"b", region_json(b)}},
                {{"involution", involution}, {"de_morgan_union", de_morgan_union}, {"de_morgan_intersection", de_morgan_meet}});
    }
  }
  v = combine(v, laws.finish(r, "laws_"));
  r.parameters["failures_by_op"] = per_op;
  r.verdict = v;
  r.elapsed_ms = clock.ms();
  return r;
}

}  // namespace bct
