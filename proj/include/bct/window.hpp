// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>

namespace bct {

/// The square [0,n]² of ω².
struct Window {
  std::size_t n = 0;

  std::size_t side() const { return n + 1; }
  std::size_t size() const { return side() * side(); }

  bool operator==(const Window&) const = default;
};

}  // namespace bct
