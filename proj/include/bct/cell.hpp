// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bct/element.hpp"
#include "bct/integer.hpp"

namespace bct {

/// A difference-bound cell of ω²:
///   s_min ≤ s ≤ s_max,  t_min ≤ t ≤ t_max,  d_min ≤ s − t ≤ d_max.
///
/// Cells only exist in closed form: nonempty, with every bound tight (attained
/// by a member, or infinite and unbounded in that direction). s_min and t_min
/// are always finite and non-negative.
class Cell {
 public:
  /// Closes the given constraints; nullopt when they have no solution in ω².
  /// Lower bounds may be -inf or negative; they are clamped to 0 for s and t.
  static std::optional<Cell> make(const Bound& s_min, const Bound& s_max, const Bound& t_min,
                                  const Bound& t_max, const Bound& d_min, const Bound& d_max);

  static Cell full();
  static Cell point(const Element& x);

  const Bound& s_min() const { return s_min_; }
  const Bound& s_max() const { return s_max_; }
  const Bound& t_min() const { return t_min_; }
  const Bound& t_max() const { return t_max_; }
  const Bound& d_min() const { return d_min_; }
  const Bound& d_max() const { return d_max_; }

  bool contains(const Element& x) const;
  bool is_finite() const { return s_max_.is_finite() && t_max_.is_finite(); }
  /// Both coordinates unbounded on the cell, equivalently min(s,t) → ∞ along it.
  bool unbounded_in_both() const { return s_max_.is_pos_inf() && t_max_.is_pos_inf(); }
  /// Number of members; nullopt when infinite.
  std::optional<Integer> cardinality() const;

  std::optional<Cell> intersect(const Cell& other) const;
  /// Pairwise-disjoint cells whose union is ω² minus this cell.
  std::vector<Cell> complement() const;
  /// The image under (s,t) ↦ (t,s).
  Cell swapped() const;

  std::string str() const;

  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;

 private:
  Cell() = default;

  Bound s_min_;
  Bound s_max_;
  Bound t_min_;
  Bound t_max_;
  Bound d_min_;
  Bound d_max_;
};

/// {a·b : a ∈ A, b ∈ B} as at most two cells.
std::vector<Cell> product_cells(const Cell& a, const Cell& b);

}  // namespace bct
