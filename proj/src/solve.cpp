// SPDX-License-Identifier: Apache-2.0
#include "bct/solve.hpp"

#include <algorithm>

namespace bct {

std::vector<Element> solve_left(const Element& a, const Element& b) {
  const Integer& k = a.i();
  const Integer& l = a.j();
  std::vector<Element> out;
  if (b.i() == k) {
    Integer u = l > b.j() ? Integer(l - b.j()) : Integer(0);
    for (; u <= l; ++u) {
      out.emplace_back(u, b.j() - l + u);
    }
  }
  if (b.i() > k) {
    out.emplace_back(b.i() - k + l, b.j());
  }
  return out;
}

std::vector<Element> solve_right(const Element& c, const Element& d) {
  std::vector<Element> out;
  for (const Element& y : solve_left(inv(c), inv(d))) {
    out.push_back(inv(y));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Element> solve_two_sided(const Element& a, const Element& c, const Element& b) {
  std::vector<Element> out;
  for (const Element& y : solve_right(c, b)) {
    auto part = solve_left(a, y);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SolutionBound solve_left_bound(const Element& a, const Element& b) {
  Integer excess = b.i() > a.i() ? Integer(b.i() - a.i()) : Integer(0);
  return {a.j() + excess, b.j()};
}

SolutionBound solve_right_bound(const Element& c, const Element& d) {
  SolutionBound mirrored = solve_left_bound(inv(c), inv(d));
  return {mirrored.max_j, mirrored.max_i};
}

SolutionBound solve_two_sided_bound(const Element& a, const Element& c, const Element& b) {
  // Every intermediate y = a·x lies in the right-equation box; the left box
  // is monotone in y, so its value at the corner covers all of them.
  SolutionBound right = solve_right_bound(c, b);
  return solve_left_bound(a, Element(right.max_i, right.max_j));
}

}  // namespace bct
