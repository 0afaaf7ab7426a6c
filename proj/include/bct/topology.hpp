// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bct/element.hpp"
#include "bct/region.hpp"

namespace bct {

/// The neighbourhood bases on C(p,q). basic(x, n) is x together with a tail
/// that shrinks as n grows:
///   tau1      {x} ∪ {(s,t) : s, t ≥ n}
///   tau2      {x} ∪ {(i+n+r, j+n+r) : r ≥ 1}       for x = (i,j)
///   tauc      {x} ∪ (ω² \ C_n),  C_n = [0,n]²
///   discrete  {x}
class Topology {
 public:
  enum class Id { tau1, tau2, tauc, discrete };

  constexpr explicit Topology(Id id) : id_(id) {}

  static Topology tau1() { return Topology(Id::tau1); }
  static Topology tau2() { return Topology(Id::tau2); }
  static Topology tauc() { return Topology(Id::tauc); }
  static Topology discrete() { return Topology(Id::discrete); }

  /// nullopt for unknown names.
  static std::optional<Topology> from_name(std::string_view name);
  static const std::vector<Topology>& all();

  Id id() const { return id_; }
  std::string_view name() const;

  Region basic(const Element& x, const Integer& n) const;

  friend bool operator==(const Topology&, const Topology&) = default;

 private:
  Id id_;
};

bool is_isolated(const Topology& t, const Element& x);

/// {x : basic(x,n) meets R for every n}.
///
/// Each tail is decided structurally on the normal form:
///   tau1  quadrants meet R for all n iff some cell is unbounded in s and t;
///   tau2  the diagonal of x keeps meeting R iff some such cell spans it;
///   tauc  the co-squares keep meeting R iff R is infinite.
/// The limit points so obtained are the whole space (tau1, tauc) or the
/// diagonal bands of the doubly unbounded cells (tau2).
Region closure(const Topology& t, const Region& r);

/// {x : basic(x,n) ⊆ R for some n}, computed as ω² \ cl(ω² \ R).
Region interior(const Topology& t, const Region& r);

bool is_regular_open(const Topology& t, const Region& r);

/// For x outside cl(R), an n with basic(x,m) ∩ R = ∅ for all m ≥ n; nullopt
/// when x ∈ cl(R). The bound comes from the cell limits of R:
///   tau1  1 + max over cells of min(s_max, t_max);
///   tau2  max s of R on the diagonal of x, minus x.i (at least 0);
///   tauc  max over cells of max(s_max, t_max).
std::optional<Integer> separation_bound(const Topology& t, const Element& x, const Region& r);

/// For x in int(R), an n with basic(x,n) ⊆ R (the separation bound of the
/// complement); nullopt when x ∉ int(R).
std::optional<Integer> interior_bound(const Topology& t, const Element& x, const Region& r);

/// Thrown when a subspace operation receives R ⊄ Y.
class NotInSubspace : public std::invalid_argument {
 public:
  NotInSubspace(Element witness);
  const Element& witness() const { return witness_; }

 private:
  Element witness_;
};

/// cl(R) ∩ Y.
Region subspace_closure(const Topology& t, const Region& y, const Region& r);
/// {x ∈ R : basic(x,n) ∩ Y ⊆ R for some n} = R ∩ int(R ∪ (ω² \ Y)).
Region subspace_interior(const Topology& t, const Region& y, const Region& r);

/// Minimal (n_x, n_y) with y ∉ basic(x,n_x) and x ∉ basic(y,n_y); x ≠ y.
std::pair<Integer, Integer> t1_separation(const Topology& t, const Element& x, const Element& y);

}  // namespace bct
