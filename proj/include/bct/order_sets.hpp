// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "bct/element.hpp"
#include "bct/region.hpp"

namespace bct {

// Order sets of the natural partial order. Everything comparable with (i,j)
// lies on its diagonal s − t = i − j: the finitely many points above it and
// the tail below it.

/// {(i−k, j−k) : 0 ≤ k ≤ min(i,j)}.
Region up_set(const Element& a);
/// {(i+k, j+k) : k ≥ 0}.
Region down_set(const Element& a);
/// down_set(a) without a.
Region strict_down_set(const Element& a);
/// up_set(a) ∪ down_set(a), the whole diagonal through a.
Region updown_set(const Element& a);
/// E(C(p,q)) = {(k,k) : k ≥ 0}.
Region idempotents();

}  // namespace bct
