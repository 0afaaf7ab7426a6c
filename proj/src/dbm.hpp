// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstddef>

#include "bct/integer.hpp"

namespace bct::detail {

/// Difference-bound matrix over N variables, variable 0 being the constant
/// zero. `w[i][j]` bounds x_j − x_i from above (+inf when unconstrained).
///
/// Difference constraints are totally unimodular, so shortest-path closure
/// yields bounds that are attained by integer points and projection (dropping
/// a variable after closure) is exact over the integers.
template <std::size_t N>
struct Dbm {
  std::array<std::array<Bound, N>, N> w;

  Dbm() {
    for (std::size_t i = 0; i < N; ++i) {
      for (std::size_t j = 0; j < N; ++j) {
        w[i][j] = i == j ? Bound(0) : Bound::pos_inf();
      }
    }
  }

  /// Adds x_j − x_i ≤ c.
  void constrain(std::size_t i, std::size_t j, const Bound& c) {
    if (c < w[i][j]) {
      w[i][j] = c;
    }
  }

  /// Shortest-path closure; returns false when the system is infeasible.
  bool close() {
    for (std::size_t k = 0; k < N; ++k) {
      for (std::size_t i = 0; i < N; ++i) {
        if (w[i][k].is_pos_inf()) {
          continue;
        }
        for (std::size_t j = 0; j < N; ++j) {
          if (w[k][j].is_pos_inf()) {
            continue;
          }
          Bound through = w[i][k] + w[k][j];
          if (through < w[i][j]) {
            w[i][j] = std::move(through);
          }
        }
      }
      for (std::size_t i = 0; i < N; ++i) {
        if (w[i][i] < Bound(0)) {
          return false;
        }
      }
    }
    return true;
  }

  /// Upper bound of x_i.
  Bound upper(std::size_t i) const { return w[0][i]; }
  /// Lower bound of x_i.
  Bound lower(std::size_t i) const { return -w[i][0]; }
};

}  // namespace bct::detail
