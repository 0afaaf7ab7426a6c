// SPDX-License-Identifier: Apache-2.0
#include "verify_util.hpp"

#include <algorithm>

#include "bct/solve.hpp"

namespace bct::detail {

void Recorder::pass(Json input, Json witness) {
  ++instances_;
  if (examples_.size() < kMaxExamples) {
    examples_.push_back({std::move(input), std::move(witness)});
  }
}

void Recorder::fail(Json input, Json witness) {
  ++instances_;
  ++failures_;
  if (failed_.size() < kMaxFailures) {
    failed_.push_back({std::move(input), std::move(witness)});
  }
}

Verdict Recorder::finish(WitnessReport& r, const std::string& prefix) {
  r.parameters[prefix + "instances"] = instances_;
  r.parameters[prefix + "failures"] = failures_;
  const std::vector<Witness>& keep = failures_ > 0 ? failed_ : examples_;
  r.witnesses.insert(r.witnesses.end(), keep.begin(), keep.end());
  return failures_ > 0 ? Verdict::counterexample : Verdict::verified;
}

bool Sampler::take() {
  if (!cc_.enabled || taken_ >= cc_.limit) {
    return false;
  }
  if (coin_(rng_)) {
    ++taken_;
    return true;
  }
  return false;
}

void Sampler::write(WitnessReport& r) const {
  if (!cc_.enabled) {
    r.parameters["crosscheck"] = false;
    return;
  }
  r.parameters["crosscheck"] = {{"window", cc_.window},
                                {"sampled", taken_},
                                {"limit", cc_.limit},
                                {"disagreements", disagreements}};
}

BasicCache::BasicCache(Topology t, int max_coord, int max_n)
    : t_(t),
      max_coord_(max_coord),
      max_n_(max_n),
      entries_(static_cast<std::size_t>((max_coord + 1) * (max_coord + 1) * (max_n + 1))) {}

BasicCache::Entry& BasicCache::entry(int i, int j, int n) {
  Entry& e = entries_[static_cast<std::size_t>((i * (max_coord_ + 1) + j) * (max_n_ + 1) + n)];
  if (!e.region) {
    e.region = t_.basic(Element(i, j), n);
    e.outside = complement_cells(*e.region);
  }
  return e;
}

const Region& BasicCache::region(int i, int j, int n) { return *entry(i, j, n).region; }

const std::vector<Cell>& BasicCache::outside(int i, int j, int n) { return entry(i, j, n).outside; }

bool product_within(const Region& a, const Region& b, const std::vector<Cell>& outside) {
  for (const Cell& x : a.cells()) {
    for (const Cell& y : b.cells()) {
      if (any_overlap(product_cells(x, y), outside)) {
        return false;
      }
    }
  }
  return true;
}

oracle::Point to_point(const Element& x) { return {to_size(x.i()), to_size(x.j())}; }

Element to_element(const oracle::Point& p) {
  return Element(static_cast<long long>(p.i), static_cast<long long>(p.j));
}

std::vector<Element> finite_members(const Region& r) {
  Integer n = 0;
  for (const Cell& c : r.cells()) {
    n = std::max({n, c.s_max().value(), c.t_max().value()});
  }
  return enumerate(r, Window{to_size(n)});
}

std::optional<std::pair<Element, Element>> find_factors(const Region& a, const Region& b,
                                                       const Element& z) {
  // x·y = z forces x.i ≤ z.i; x.j has no a priori bound, so widen.
  for (long long w = 16; w <= 4096; w *= 2) {
    Region box(*Cell::make(0, Bound(z.i()), 0, Bound(w), Bound::neg_inf(), Bound::pos_inf()));
    for (const Element& x : enumerate(intersect(a, box), Window{static_cast<std::size_t>(w)})) {
      if (x.i() > z.i()) {
        continue;
      }
      for (const Element& y : solve_left(x, z)) {
        if (member(b, y)) {
          return std::make_pair(x, y);
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::pair<Element, Element>> product_escape(const Region& a, const Region& b,
                                                         const Region& t) {
  std::optional<Element> z = first_member(difference(product_image(a, b), t));
  if (!z) {
    return std::nullopt;
  }
  return find_factors(a, b, *z);
}

std::optional<std::pair<oracle::Point, oracle::Point>> brute_product_escape(const Region& a,
                                                                           const Region& b,
                                                                           const Region& t,
                                                                           std::size_t w) {
  const Window half{w / 2};
  oracle::WindowSet sa = oracle::window_eval(a, half);
  oracle::WindowSet sb = oracle::window_eval(b, half);
  oracle::WindowSet st = oracle::window_eval(t, Window{w});
  std::vector<oracle::Point> xs = sa.members();
  std::vector<oracle::Point> ys = sb.members();
  for (const oracle::Point& x : xs) {
    for (const oracle::Point& y : ys) {
      oracle::Point z = oracle::oracle_mul_runs(x, y);
      if (!st.at(z.i, z.j)) {
        return std::make_pair(x, y);
      }
    }
  }
  return std::nullopt;
}

bool brute_inverse_equal(const Region& r, const Region& s, std::size_t w) {
  oracle::WindowSet sr = oracle::window_eval(r, Window{w});
  oracle::WindowSet ss = oracle::window_eval(s, Window{w});
  for (std::size_t i = 0; i <= w; ++i) {
    for (std::size_t j = 0; j <= w; ++j) {
      if (sr.at(i, j) != ss.at(j, i)) {
        return false;
      }
    }
  }
  return true;
}

Json pair_json(const Element& x, const Element& y) {
  return {{"x", element_json(x)}, {"y", element_json(y)}, {"product", element_json(mul(x, y))}};
}

}  // namespace bct::detail
