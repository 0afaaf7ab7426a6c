// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bct/cell.hpp"
#include "bct/element.hpp"
#include "bct/window.hpp"

namespace bct {

/// A subset of ω² given as a finite union of cells, always held in normal form.
///
/// The normal form describes the set row by row (fixed t): each row is a
/// union of maximal s-intervals, and consecutive rows whose intervals move
/// the same way (each endpoint either constant or shifting with t) are
/// grouped into one run. A run emits one cell per interval. Runs are maximal
/// under a greedy left-to-right scan, so the cell list is a function of the
/// set alone and `==` is extensional equality.
class Region {
 public:
  Region() = default;
  explicit Region(const Cell& cell);
  /// Normalises an arbitrary union of cells.
  static Region from_cells(const std::vector<Cell>& cells);

  static Region full();

  const std::vector<Cell>& cells() const { return cells_; }
  bool empty() const { return cells_.empty(); }

  std::string str() const;

  friend bool operator==(const Region&, const Region&) = default;

 private:
  std::vector<Cell> cells_;
};

// Shapes.
Region point(const Element& x);
/// {(s,t) : s ≥ n, t ≥ n}.
Region quadrant(const Integer& n);
/// C_n = {(s,t) : s ≤ n, t ≤ n}.
Region square(const Integer& n);
/// {(anchor.i + k, anchor.j + k) : k ≥ offset}.
Region diagonal_tail(const Element& anchor, const Integer& offset);
/// {(s,t) : s − t = d}.
Region diagonal(const Integer& d);
/// {(i, t) : t ≥ from}.
Region column_ray(const Integer& i, const Integer& from);
/// {(s, j) : s ≥ from}.
Region row_ray(const Integer& j, const Integer& from);
/// Points of a finite list.
Region points(const std::vector<Element>& xs);

bool member(const Region& r, const Element& x);

Region unite(const Region& a, const Region& b);
Region intersect(const Region& a, const Region& b);
Region complement(const Region& r);
Region difference(const Region& a, const Region& b);

bool subset(const Region& a, const Region& b);
bool is_empty(const Region& r);
bool is_finite(const Region& r);
bool is_cofinite(const Region& r);
/// Member count; nullopt for infinite regions.
std::optional<Integer> cardinality(const Region& r);

/// {a·b : a ∈ A, b ∈ B}.
Region product_image(const Region& a, const Region& b);
/// {x⁻¹ : x ∈ R}.
Region inverse_image(const Region& r);
/// Decides A·B ⊆ T without normalising the product.
bool product_subset(const Region& a, const Region& b, const Region& target);

/// Members inside the window, lexicographic.
std::vector<Element> enumerate(const Region& r, const Window& w);
/// Lexicographically smallest member.
std::optional<Element> first_member(const Region& r);

namespace detail {

/// Pairwise-disjoint cells covering the complement, not normalised.
std::vector<Cell> complement_cells(const Region& r);
/// Whether some cell of `a` meets some cell of `b`.
bool any_overlap(const std::vector<Cell>& a, const std::vector<Cell>& b);

}  // namespace detail

}  // namespace bct
