// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "bct/element.hpp"
#include "bct/oracle.hpp"
#include "bct/region.hpp"

namespace bct::test {

inline oracle::Point pt(const Element& x) {
  return {x.i().convert_to<std::size_t>(), x.j().convert_to<std::size_t>()};
}

inline Element el(const oracle::Point& p) {
  return Element(static_cast<long long>(p.i), static_cast<long long>(p.j));
}

inline Element el(std::size_t i, std::size_t j) {
  return Element(static_cast<long long>(i), static_cast<long long>(j));
}

// Same membership on [0,n]²?
inline bool same_on_window(const Region& a, const Region& b, std::size_t n) {
  return oracle::window_eval(a, Window{n}) == oracle::window_eval(b, Window{n});
}

inline Region from_points(const std::vector<oracle::Point>& ps) {
  std::vector<Element> xs;
  for (const auto& p : ps) xs.push_back(el(p));
  return points(xs);
}

}  // namespace bct::test
