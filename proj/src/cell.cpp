// SPDX-License-Identifier: Apache-2.0
#include "bct/cell.hpp"

#include <algorithm>

#include "dbm.hpp"

namespace bct {

namespace {

// Variables of the cell matrix.
constexpr std::size_t kZero = 0;
constexpr std::size_t kS = 1;
constexpr std::size_t kT = 2;

// Lower bounds of s and t are stored finite; a −inf lower bound would come
// out of Dbm::lower only for an unconstrained variable, which never happens
// because s, t ≥ 0 is always imposed.
Bound finite_or_zero(const Bound& b) { return b.is_finite() ? b : Bound(0); }

}  // namespace

std::optional<Cell> Cell::make(const Bound& s_min, const Bound& s_max, const Bound& t_min,
                               const Bound& t_max, const Bound& d_min, const Bound& d_max) {
  if (s_max.is_neg_inf() || t_max.is_neg_inf() || d_max.is_neg_inf() || s_min.is_pos_inf() ||
      t_min.is_pos_inf() || d_min.is_pos_inf()) {
    return std::nullopt;
  }
  detail::Dbm<3> m;
  m.constrain(kS, kZero, Bound(0));
  m.constrain(kT, kZero, Bound(0));
  if (s_min.is_finite()) {
    m.constrain(kS, kZero, -s_min);
  }
  m.constrain(kZero, kS, s_max);
  if (t_min.is_finite()) {
    m.constrain(kT, kZero, -t_min);
  }
  m.constrain(kZero, kT, t_max);
  m.constrain(kT, kS, d_max);
  if (d_min.is_finite()) {
    m.constrain(kS, kT, -d_min);
  }
  if (!m.close()) {
    return std::nullopt;
  }
  Cell c;
  c.s_min_ = finite_or_zero(m.lower(kS));
  c.s_max_ = m.upper(kS);
  c.t_min_ = finite_or_zero(m.lower(kT));
  c.t_max_ = m.upper(kT);
  c.d_min_ = -m.w[kS][kT];
  c.d_max_ = m.w[kT][kS];
  return c;
}

Cell Cell::full() {
  return *make(0, Bound::pos_inf(), 0, Bound::pos_inf(), Bound::neg_inf(), Bound::pos_inf());
}

Cell Cell::point(const Element& x) {
  Integer d = x.i() - x.j();
  return *make(x.i(), x.i(), x.j(), x.j(), d, d);
}

bool Cell::contains(const Element& x) const {
  Bound s(x.i());
  Bound t(x.j());
  Bound d(x.i() - x.j());
  return s_min_ <= s && s <= s_max_ && t_min_ <= t && t <= t_max_ && d_min_ <= d && d <= d_max_;
}

std::optional<Integer> Cell::cardinality() const {
  if (!is_finite()) {
    return std::nullopt;
  }
  // Row t holds s ∈ [max(s_min, t + d_min), min(s_max, t + d_max)], nonempty
  // for every t in [t_min, t_max] because the bounds are closed. The width is
  // linear between the two kinks, so each piece sums as an arithmetic series.
  const Integer& lo_t = t_min_.value();
  const Integer& hi_t = t_max_.value();
  auto width = [&](const Integer& t) {
    Bound hi = min(s_max_, Bound(t) + d_max_);
    Bound lo = max(s_min_, Bound(t) + d_min_);
    return Integer(hi.value() - lo.value() + 1);
  };
  std::vector<Integer> cuts{lo_t};
  auto add_cut = [&](const Bound& kink) {
    if (kink.is_finite() && kink.value() > lo_t && kink.value() <= hi_t) {
      cuts.push_back(kink.value());
    }
  };
  if (d_max_.is_finite()) {
    add_cut(s_max_ - d_max_ + Bound(1));
  }
  if (d_min_.is_finite()) {
    add_cut(s_min_ - d_min_ + Bound(1));
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  Integer total = 0;
  for (std::size_t k = 0; k < cuts.size(); ++k) {
    const Integer& a = cuts[k];
    Integer b = k + 1 < cuts.size() ? Integer(cuts[k + 1] - 1) : hi_t;
    total += (width(a) + width(b)) * (b - a + 1) / 2;
  }
  return total;
}

std::optional<Cell> Cell::intersect(const Cell& other) const {
  return make(max(s_min_, other.s_min_), min(s_max_, other.s_max_), max(t_min_, other.t_min_),
              min(t_max_, other.t_max_), max(d_min_, other.d_min_), min(d_max_, other.d_max_));
}

std::vector<Cell> Cell::complement() const {
  // Constraint k is violated while constraints 0..k−1 hold: disjoint pieces.
  struct Limits {
    Bound s_min = 0, s_max = Bound::pos_inf(), t_min = 0, t_max = Bound::pos_inf(),
          d_min = Bound::neg_inf(), d_max = Bound::pos_inf();
  };
  Limits held;
  std::vector<Cell> out;
  auto emit = [&](Limits piece) {
    if (auto c = make(piece.s_min, piece.s_max, piece.t_min, piece.t_max, piece.d_min,
                      piece.d_max)) {
      out.push_back(*c);
    }
  };
  Limits piece = held;
  piece.s_max = s_min_ - Bound(1);
  emit(piece);
  held.s_min = s_min_;

  if (s_max_.is_finite()) {
    piece = held;
    piece.s_min = s_max_ + Bound(1);
    emit(piece);
    held.s_max = s_max_;
  }
  piece = held;
  piece.t_max = t_min_ - Bound(1);
  emit(piece);
  held.t_min = t_min_;

  if (t_max_.is_finite()) {
    piece = held;
    piece.t_min = t_max_ + Bound(1);
    emit(piece);
    held.t_max = t_max_;
  }
  if (d_min_.is_finite()) {
    piece = held;
    piece.d_max = d_min_ - Bound(1);
    emit(piece);
    held.d_min = d_min_;
  }
  if (d_max_.is_finite()) {
    piece = held;
    piece.d_min = d_max_ + Bound(1);
    emit(piece);
  }
  return out;
}

Cell Cell::swapped() const {
  Cell c;
  c.s_min_ = t_min_;
  c.s_max_ = t_max_;
  c.t_min_ = s_min_;
  c.t_max_ = s_max_;
  c.d_min_ = -d_max_;
  c.d_max_ = -d_min_;
  return c;
}

std::string Cell::str() const {
  return "{s∈[" + s_min_.str() + "," + s_max_.str() + "] t∈[" + t_min_.str() + "," +
         t_max_.str() + "] d∈[" + d_min_.str() + "," + d_max_.str() + "]}";
}

namespace {

// Products (k,l)·(m,n) with l ≤ m, giving (k − l + m, n).
//
// Over variables (0, u, v, m) with u = k − l + m and v = n, the second factor
// contributes its own constraints on (m, v) and the side condition l ≤ m,
// while the first factor contributes, for u − m = k − l:
//   k − l ∈ [A.d_min, A.d_max],
//   k − l ∈ [A.s_min − A.t_max, A.s_max − A.t_min],
//   u ≥ k ≥ A.s_min,   m ≥ l ≥ A.t_min.
// On the diagonal k − l = δ of A the smallest l is max(A.t_min, A.s_min − δ),
// so a factor with l ≤ m exists iff m ≥ A.t_min and u ≥ A.s_min. The image
// is the projection of a difference system, hence again a difference cell.
std::optional<Cell> lower_product(const Cell& a, const Cell& b) {
  constexpr std::size_t u = 1;
  constexpr std::size_t v = 2;
  constexpr std::size_t m = 3;
  detail::Dbm<4> g;
  g.constrain(u, kZero, Bound(0));
  g.constrain(v, kZero, Bound(0));
  g.constrain(m, kZero, Bound(0));
  // second factor (m, v)
  g.constrain(m, kZero, -b.s_min());
  g.constrain(kZero, m, b.s_max());
  g.constrain(v, kZero, -b.t_min());
  g.constrain(kZero, v, b.t_max());
  g.constrain(v, m, b.d_max());
  if (b.d_min().is_finite()) {
    g.constrain(m, v, -b.d_min());
  }
  // first factor
  g.constrain(m, kZero, -a.t_min());
  g.constrain(u, kZero, -a.s_min());
  Bound lo = max(a.d_min(), a.s_min() - a.t_max());
  Bound hi = min(a.d_max(), a.s_max() - a.t_min());
  g.constrain(m, u, hi);
  if (lo.is_finite()) {
    g.constrain(u, m, -lo);
  }
  if (!g.close()) {
    return std::nullopt;
  }
  return Cell::make(g.lower(u), g.upper(u), g.lower(v), g.upper(v), -g.w[u][v], g.w[v][u]);
}

}  // namespace

std::vector<Cell> product_cells(const Cell& a, const Cell& b) {
  std::vector<Cell> out;
  if (auto c = lower_product(a, b)) {
    out.push_back(*c);
  }
  // l ≥ m mirrors through inversion: (a·b)⁻¹ = b⁻¹·a⁻¹.
  if (auto c = lower_product(b.swapped(), a.swapped())) {
    out.push_back(c->swapped());
  }
  return out;
}

}  // namespace bct
