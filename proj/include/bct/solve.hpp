// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "bct/element.hpp"

namespace bct {

// Complete solution sets of the one- and two-sided equations in C(p,q).
//
// Writing a = (k,l) and x = (u,v), the product is
//   a·x = (k, l − u + v)      when u ≤ l,
//   a·x = (k − l + u, v)      when u > l.
// So a·x = b has the solutions
//   u ∈ [max(0, l − b.j), l], v = b.j − l + u      (only if b.i = k), and
//   u = b.i − k + l, v = b.j                       (only if b.i > k),
// at most min(l, b.j) + 2 elements in total, every one inside
// [0, l + max(0, b.i − k)] × [0, b.j]. Right equations reduce to left ones
// through the anti-automorphism x ↦ x⁻¹, and a·x·c = b is the union of
// a·x = y over the solutions y of y·c = b.

/// Inclusive box [0, max_i] × [0, max_j] containing every solution.
struct SolutionBound {
  Integer max_i;
  Integer max_j;
};

/// {x : a·x = b}, sorted.
std::vector<Element> solve_left(const Element& a, const Element& b);
/// {x : x·c = d}, sorted.
std::vector<Element> solve_right(const Element& c, const Element& d);
/// {x : a·x·c = b}, sorted.
std::vector<Element> solve_two_sided(const Element& a, const Element& c, const Element& b);

SolutionBound solve_left_bound(const Element& a, const Element& b);
SolutionBound solve_right_bound(const Element& c, const Element& d);
SolutionBound solve_two_sided_bound(const Element& a, const Element& c, const Element& b);

}  // namespace bct
