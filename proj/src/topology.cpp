// SPDX-License-Identifier: Apache-2.0
#include "bct/topology.hpp"


namespace bct {

namespace {

const Bound kInf = Bound::pos_inf();

}  // namespace

std::optional<Topology> Topology::from_name(std::string_view name) {
  for (const Topology& t : all()) {
    if (t.name() == name) {
      return t;
    }
  }
  return std::nullopt;
}

const std::vector<Topology>& Topology::all() {
  static const std::vector<Topology> kAll{tau1(), tau2(), tauc(), discrete()};
  return kAll;
}

std::string_view Topology::name() const {
  switch (id_) {
    case Id::tau1:
      return "tau1";
    case Id::tau2:
      return "tau2";
    case Id::tauc:
      return "tauc";
    case Id::discrete:
      return "discrete";
  }
  return "?";
}

Region Topology::basic(const Element& x, const Integer& n) const {
  switch (id_) {
    case Id::tau1:
      return unite(point(x), quadrant(n));
    case Id::tau2:
      return unite(point(x), diagonal_tail(x, n + 1));
    case Id::tauc:
      return unite(point(x), complement(square(n)));
    case Id::discrete:
      return point(x);
  }
  return point(x);
}

bool is_isolated(const Topology& t, const Element& x) {
  return !member(closure(t, complement(point(x))), x);
}

Region closure(const Topology& t, const Region& r) {
  switch (t.id()) {
    case Topology::Id::tau1:
      for (const Cell& c : r.cells()) {
        if (c.unbounded_in_both()) {
          return Region::full();
        }
      }
      return r;
    case Topology::Id::tau2: {
      std::vector<Cell> cells = r.cells();
      for (const Cell& c : r.cells()) {
        if (c.unbounded_in_both()) {
          cells.push_back(*Cell::make(0, kInf, 0, kInf, c.d_min(), c.d_max()));
        }
      }
      return Region::from_cells(cells);
    }
    case Topology::Id::tauc:
      return is_finite(r) ? r : Region::full();
    case Topology::Id::discrete:
      return r;
  }
  return r;
}

Region interior(const Topology& t, const Region& r) {
  return complement(closure(t, complement(r)));
}

bool is_regular_open(const Topology& t, const Region& r) {
  return interior(t, closure(t, r)) == r;
}

std::optional<Integer> separation_bound(const Topology& t, const Element& x, const Region& r) {
  if (member(closure(t, r), x)) {
    return std::nullopt;
  }
  Integer n = 0;
  switch (t.id()) {
    case Topology::Id::tau1:
      // No cell is unbounded in both coordinates here.
      for (const Cell& c : r.cells()) {
        n = std::max(n, Integer(min(c.s_max(), c.t_max()).value() + 1));
      }
      break;
    case Topology::Id::tau2:
      for (const Cell& c : intersect(r, diagonal(x.i() - x.j())).cells()) {
        n = std::max(n, Integer(c.s_max().value() - x.i()));
      }
      break;
    case Topology::Id::tauc:
      for (const Cell& c : r.cells()) {
        n = std::max(n, max(c.s_max(), c.t_max()).value());
      }
      break;
    case Topology::Id::discrete:
      break;
  }
  return n;
}

std::optional<Integer> interior_bound(const Topology& t, const Element& x, const Region& r) {
  if (!member(r, x)) {
    return std::nullopt;
  }
  return separation_bound(t, x, complement(r));
}

NotInSubspace::NotInSubspace(Element witness)
    : std::invalid_argument("region is not contained in the subspace: " +
                            to_pair_string(witness) + " lies outside"),
      witness_(std::move(witness)) {}

namespace {

void require_inside(const Region& y, const Region& r) {
  if (auto w = first_member(difference(r, y))) {
    throw NotInSubspace(*w);
  }
}

}  // namespace

Region subspace_closure(const Topology& t, const Region& y, const Region& r) {
  require_inside(y, r);
  return intersect(closure(t, r), y);
}

Region subspace_interior(const Topology& t, const Region& y, const Region& r) {
  require_inside(y, r);
  return intersect(r, interior(t, unite(r, complement(y))));
}

namespace {

// Least n with y ∉ basic(x,n); membership is antitone in n, so bisect below
// the separation bound.
Integer separating_index(const Topology& t, const Element& x, const Element& y) {
  Integer lo = 0;
  Integer hi = *separation_bound(t, x, point(y));
  while (lo < hi) {
    Integer mid = (lo + hi) / 2;
    if (member(t.basic(x, mid), y)) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace

std::pair<Integer, Integer> t1_separation(const Topology& t, const Element& x, const Element& y) {
  if (x == y) {
    throw std::invalid_argument("t1_separation needs distinct points");
  }
  return {separating_index(t, x, y), separating_index(t, y, x)};
}

}  // namespace bct
