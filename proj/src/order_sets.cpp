// SPDX-License-Identifier: Apache-2.0
#include "bct/order_sets.hpp"

namespace bct {

Region up_set(const Element& a) {
  Integer d = a.i() - a.j();
  return Region(*Cell::make(0, a.i(), 0, a.j(), d, d));
}

Region down_set(const Element& a) { return diagonal_tail(a, 0); }

Region strict_down_set(const Element& a) { return diagonal_tail(a, 1); }

Region updown_set(const Element& a) { return unite(up_set(a), down_set(a)); }

Region idempotents() { return diagonal(0); }

}  // namespace bct
