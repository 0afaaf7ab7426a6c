// SPDX-License-Identifier: Apache-2.0
#include "bct/oracle.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <limits>

#include "bct/solve.hpp"

namespace bct::oracle {

namespace {

using i64 = long long;
constexpr i64 kHuge = std::numeric_limits<i64>::max() / 4;

Point normal_form(std::string_view reduced) {
  Point out;
  std::size_t k = 0;
  while (k < reduced.size() && reduced[k] == 'q') {
    ++out.i;
    ++k;
  }
  while (k < reduced.size() && reduced[k] == 'p') {
    ++out.j;
    ++k;
  }
  if (k != reduced.size()) {
    throw std::logic_error("reduction left a factor pq in " + std::string(reduced));
  }
  return out;
}

std::string letters(std::string_view word) {
  std::string out;
  out.reserve(word.size());
  for (std::size_t k = 0; k < word.size(); ++k) {
    char c = word[k];
    if (std::isspace(static_cast<unsigned char>(c))) {
      continue;
    }
    if (c != 'p' && c != 'q') {
      throw ParseError(k, std::string("expected 'p' or 'q', found '") + c + "'");
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace

Point word_reduce(std::string_view word, Strategy strategy) {
  std::string w = letters(word);
  switch (strategy) {
    case Strategy::stack: {
      std::string st;
      for (char c : w) {
        if (c == 'q' && !st.empty() && st.back() == 'p') {
          st.pop_back();
        } else {
          st.push_back(c);
        }
      }
      return normal_form(st);
    }
    case Strategy::leftmost:
      for (auto pos = w.find("pq"); pos != std::string::npos; pos = w.find("pq")) {
        w.erase(pos, 2);
      }
      return normal_form(w);
    case Strategy::rightmost:
      for (auto pos = w.rfind("pq"); pos != std::string::npos; pos = w.rfind("pq")) {
        w.erase(pos, 2);
      }
      return normal_form(w);
  }
  return normal_form(w);
}

std::string product_word(const Point& a, const Point& b) {
  std::string w;
  w.append(a.i, 'q');
  w.append(a.j, 'p');
  w.append(b.i, 'q');
  w.append(b.j, 'p');
  return w;
}

Point oracle_mul(const Point& a, const Point& b) { return word_reduce(product_word(a, b)); }

Point oracle_mul_runs(const Point& a, const Point& b) {
  // q^a.i · p^a.j · q^b.i · p^b.j; only the middle p-block meets a q-block.
  std::size_t cancel = std::min(a.j, b.i);
  std::size_t p_left = a.j - cancel;
  std::size_t q_right = b.i - cancel;
  if (p_left == 0) {
    return {a.i + q_right, b.j};
  }
  return {a.i, p_left + b.j};
}

std::size_t WindowSet::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

std::vector<Point> WindowSet::members() const {
  std::vector<Point> out;
  for (std::size_t i = 0; i <= w_.n; ++i) {
    for (std::size_t j = 0; j <= w_.n; ++j) {
      if (at(i, j)) {
        out.push_back({i, j});
      }
    }
  }
  return out;
}

std::optional<Point> WindowSet::first_difference(const WindowSet& other) const {
  std::size_t n = std::min(w_.n, other.w_.n);
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= n; ++j) {
      if (at(i, j) != other.at(i, j)) {
        return Point{i, j};
      }
    }
  }
  return std::nullopt;
}

namespace {

i64 lower_of(const Bound& b) {
  if (b.is_neg_inf()) {
    return -kHuge;
  }
  if (b.is_pos_inf()) {
    return kHuge;
  }
  auto v = to_int64(b.value());
  if (!v) {
    return b.value() < 0 ? -kHuge : kHuge;
  }
  return *v;
}

i64 upper_of(const Bound& b) { return lower_of(b); }

struct RawCell {
  i64 s_lo, s_hi, t_lo, t_hi, d_lo, d_hi;

  bool holds(i64 s, i64 t) const {
    i64 d = s - t;
    return s_lo <= s && s <= s_hi && t_lo <= t && t <= t_hi && d_lo <= d && d <= d_hi;
  }
};

std::vector<RawCell> raw_cells(const Region& r) {
  std::vector<RawCell> out;
  for (const Cell& c : r.cells()) {
    out.push_back({lower_of(c.s_min()), upper_of(c.s_max()), lower_of(c.t_min()),
                   upper_of(c.t_max()), lower_of(c.d_min()), upper_of(c.d_max())});
  }
  return out;
}

// Largest magnitude among the finite bounds, capped to keep windows small.
std::size_t largest_constant(const Region& r) {
  i64 best = 0;
  auto take = [&](const Bound& b) {
    if (b.is_finite()) {
      i64 v = lower_of(b);
      best = std::max(best, v < 0 ? -v : v);
    }
  };
  for (const Cell& c : r.cells()) {
    take(c.s_min());
    take(c.s_max());
    take(c.t_min());
    take(c.t_max());
    take(c.d_min());
    take(c.d_max());
  }
  return static_cast<std::size_t>(std::min<i64>(best, 1 << 12));
}

Point to_point(const Element& x) { return {to_size(x.i()), to_size(x.j())}; }

}  // namespace

WindowSet window_eval(const Region& r, const Window& w) {
  WindowSet out(w);
  std::vector<RawCell> cells = raw_cells(r);
  for (std::size_t i = 0; i <= w.n; ++i) {
    for (std::size_t j = 0; j <= w.n; ++j) {
      for (const RawCell& c : cells) {
        if (c.holds(static_cast<i64>(i), static_cast<i64>(j))) {
          out.set(i, j);
          break;
        }
      }
    }
  }
  return out;
}

bool basic_contains(const Topology& t, const Point& x, std::size_t n, const Point& y) {
  if (x == y) {
    return true;
  }
  switch (t.id()) {
    case Topology::Id::tau1:
      return y.i >= n && y.j >= n;
    case Topology::Id::tau2:
      return static_cast<i64>(y.i) - static_cast<i64>(y.j) ==
                 static_cast<i64>(x.i) - static_cast<i64>(x.j) &&
             y.i >= x.i + n + 1;
    case Topology::Id::tauc:
      return y.i > n || y.j > n;
    case Topology::Id::discrete:
      return false;
  }
  return false;
}

namespace {

constexpr std::array<std::pair<CheckOp, std::string_view>, 11> kOps{{
    {CheckOp::unite, "union"},
    {CheckOp::intersect, "intersect"},
    {CheckOp::complement, "complement"},
    {CheckOp::difference, "difference"},
    {CheckOp::product_image, "product_image"},
    {CheckOp::inverse_image, "inverse_image"},
    {CheckOp::closure_membership, "closure-membership"},
    {CheckOp::interior_membership, "interior-membership"},
    {CheckOp::solve_left, "solve_left"},
    {CheckOp::solve_right, "solve_right"},
    {CheckOp::solve_two_sided, "solve_two_sided"},
}};

CheckResult compare(const WindowSet& symbolic, const WindowSet& brute) {
  CheckResult r;
  if (auto p = symbolic.first_difference(brute)) {
    r.pass = false;
    r.first_difference = p;
    r.detail = "symbolic says " + std::string(symbolic.at(p->i, p->j) ? "member" : "non-member") +
               " at (" + std::to_string(p->i) + "," + std::to_string(p->j) + ")";
  }
  return r;
}

template <typename F>
WindowSet pointwise(const Window& w, F f) {
  WindowSet out(w);
  for (std::size_t i = 0; i <= w.n; ++i) {
    for (std::size_t j = 0; j <= w.n; ++j) {
      out.set(i, j, f(i, j));
    }
  }
  return out;
}

CheckResult check_product(const CheckInputs& in, const Window& w) {
  const std::size_t k = in.factor_bound;
  Region box = square(static_cast<long long>(k));
  WindowSet symbolic = window_eval(product_image(intersect(in.a, box), intersect(in.b, box)), w);
  std::vector<Point> left = window_eval(in.a, Window{k}).members();
  std::vector<Point> right = window_eval(in.b, Window{k}).members();
  WindowSet brute(w);
  for (const Point& x : left) {
    for (const Point& y : right) {
      Point z = oracle_mul_runs(x, y);
      if (z.i <= w.n && z.j <= w.n) {
        brute.set(z.i, z.j);
      }
    }
  }
  return compare(symbolic, brute);
}

// Whether the tail of basic(x, depth) meets the bitmap `hits` (members of a
// set, searched inside its window). For tau2 the per-diagonal maxima are
// precomputed.
class TailProbe {
 public:
  TailProbe(const Topology& t, const WindowSet& hits, std::size_t depth)
      : t_(t), depth_(depth), n_(hits.window().n) {
    diag_max_.assign(2 * n_ + 1, -1);
    for (std::size_t i = 0; i <= n_; ++i) {
      for (std::size_t j = 0; j <= n_; ++j) {
        if (!hits.at(i, j)) {
          continue;
        }
        if (i >= depth && j >= depth) {
          quadrant_ = true;
        }
        if (i > depth || j > depth) {
          cosquare_ = true;
        }
        i64& m = diag_max_[static_cast<std::size_t>(static_cast<i64>(i) - static_cast<i64>(j) +
                                                    static_cast<i64>(n_))];
        m = std::max(m, static_cast<i64>(i));
      }
    }
  }

  bool meets(const Point& x) const {
    switch (t_.id()) {
      case Topology::Id::tau1:
        return quadrant_;
      case Topology::Id::tau2: {
        i64 d = static_cast<i64>(x.i) - static_cast<i64>(x.j) + static_cast<i64>(n_);
        if (d < 0 || d > static_cast<i64>(2 * n_)) {
          return false;
        }
        return diag_max_[static_cast<std::size_t>(d)] >= static_cast<i64>(x.i + depth_ + 1);
      }
      case Topology::Id::tauc:
        return cosquare_;
      case Topology::Id::discrete:
        return false;
    }
    return false;
  }

 private:
  Topology t_;
  std::size_t depth_;
  std::size_t n_;
  bool quadrant_ = false;
  bool cosquare_ = false;
  std::vector<i64> diag_max_;
};

// The depth at which every non-limit point of the window is already
// separated from R, and the search square that contains a witness for every
// tail that does meet R.
std::pair<std::size_t, std::size_t> probe_sizes(const Region& r, const Window& w,
                                                std::size_t depth) {
  std::size_t c = largest_constant(r) + 1;
  std::size_t d = std::max(depth, c + w.n + 1);
  return {d, 2 * w.n + d + 2 * c + 2};
}

CheckResult check_closure(const CheckInputs& in, const Window& w) {
  auto [depth, search] = probe_sizes(in.a, w, in.depth);
  WindowSet members = window_eval(in.a, Window{search});
  TailProbe probe(in.topology, members, depth);
  WindowSet symbolic = window_eval(closure(in.topology, in.a), w);
  WindowSet brute = pointwise(w, [&](std::size_t i, std::size_t j) {
    return members.at(i, j) || probe.meets({i, j});
  });
  CheckResult r = compare(symbolic, brute);
  r.detail += (r.detail.empty() ? "" : "; ") + std::string("depth ") + std::to_string(depth);
  return r;
}

CheckResult check_interior(const CheckInputs& in, const Window& w) {
  auto [depth, search] = probe_sizes(in.a, w, in.depth);
  WindowSet members = window_eval(in.a, Window{search});
  WindowSet outside = pointwise(Window{search},
                                [&](std::size_t i, std::size_t j) { return !members.at(i, j); });
  TailProbe probe(in.topology, outside, depth);
  WindowSet symbolic = window_eval(interior(in.topology, in.a), w);
  WindowSet brute = pointwise(w, [&](std::size_t i, std::size_t j) {
    return members.at(i, j) && !probe.meets({i, j});
  });
  CheckResult r = compare(symbolic, brute);
  r.detail += (r.detail.empty() ? "" : "; ") + std::string("depth ") + std::to_string(depth);
  return r;
}

CheckResult check_solve(CheckOp op, const CheckInputs& in, const Window& w) {
  std::vector<Element> symbolic;
  switch (op) {
    case CheckOp::solve_left:
      symbolic = solve_left(in.x, in.z);
      break;
    case CheckOp::solve_right:
      symbolic = solve_right(in.x, in.z);
      break;
    default:
      symbolic = solve_two_sided(in.x, in.y, in.z);
      break;
  }
  Point a = to_point(in.x);
  Point c = to_point(in.y);
  Point b = to_point(in.z);
  WindowSet brute = pointwise(w, [&](std::size_t i, std::size_t j) {
    Point u{i, j};
    switch (op) {
      case CheckOp::solve_left:
        return oracle_mul_runs(a, u) == b;
      case CheckOp::solve_right:
        return oracle_mul_runs(u, a) == b;
      default:
        return oracle_mul_runs(oracle_mul_runs(a, u), c) == b;
    }
  });
  WindowSet found(w);
  for (const Element& e : symbolic) {
    if (e.i() > w.n || e.j() > w.n) {
      CheckResult r;
      r.pass = false;
      r.detail = "solution " + to_pair_string(e) + " lies outside the window";
      return r;
    }
    found.set(to_size(e.i()), to_size(e.j()));
  }
  return compare(found, brute);
}

}  // namespace

std::string_view op_name(CheckOp op) {
  for (const auto& [o, name] : kOps) {
    if (o == op) {
      return name;
    }
  }
  return "?";
}

std::optional<CheckOp> op_from_name(std::string_view name) {
  for (const auto& [o, n] : kOps) {
    if (n == name) {
      return o;
    }
  }
  return std::nullopt;
}

const std::vector<CheckOp>& all_ops() {
  static const std::vector<CheckOp> kAll = [] {
    std::vector<CheckOp> v;
    for (const auto& entry : kOps) {
      v.push_back(entry.first);
    }
    return v;
  }();
  return kAll;
}

CheckResult crosscheck(CheckOp op, const CheckInputs& in, const Window& w) {
  switch (op) {
    case CheckOp::unite:
    case CheckOp::intersect:
    case CheckOp::complement:
    case CheckOp::difference:
    case CheckOp::inverse_image: {
      WindowSet a = window_eval(in.a, w);
      WindowSet b = window_eval(in.b, w);
      Region symbolic;
      WindowSet brute(w);
      if (op == CheckOp::unite) {
        symbolic = unite(in.a, in.b);
        brute = pointwise(w, [&](auto i, auto j) { return a.at(i, j) || b.at(i, j); });
      } else if (op == CheckOp::intersect) {
        symbolic = intersect(in.a, in.b);
        brute = pointwise(w, [&](auto i, auto j) { return a.at(i, j) && b.at(i, j); });
      } else if (op == CheckOp::complement) {
        symbolic = complement(in.a);
        brute = pointwise(w, [&](auto i, auto j) { return !a.at(i, j); });
      } else if (op == CheckOp::difference) {
        symbolic = difference(in.a, in.b);
        brute = pointwise(w, [&](auto i, auto j) { return a.at(i, j) && !b.at(i, j); });
      } else {
        symbolic = inverse_image(in.a);
        brute = pointwise(w, [&](auto i, auto j) { return a.at(j, i); });
      }
      return compare(window_eval(symbolic, w), brute);
    }
    case CheckOp::product_image:
      return check_product(in, w);
    case CheckOp::closure_membership:
      return check_closure(in, w);
    case CheckOp::interior_membership:
      return check_interior(in, w);
    case CheckOp::solve_left:
    case CheckOp::solve_right:
    case CheckOp::solve_two_sided:
      return check_solve(op, in, w);
  }
  return {};
}

RegionGenerator::RegionGenerator(std::uint64_t seed, RegionShape shape)
    : rng_(seed), shape_(shape) {}

int RegionGenerator::uniform(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng_);
}

Element RegionGenerator::element(int max_coord) {
  return Element(uniform(0, max_coord), uniform(0, max_coord));
}

Cell RegionGenerator::cell() {
  const Bound inf = Bound::pos_inf();
  const Bound ninf = Bound::neg_inf();
  const int c = shape_.max_const;
  const int o = shape_.max_offset;
  auto upper = [&](int lo) -> Bound {
    return uniform(0, 99) < shape_.open_percent ? inf : Bound(uniform(lo, c));
  };
  for (;;) {
    std::optional<Cell> out;
    switch (uniform(0, 7)) {
      case 0: {
        int s = uniform(0, c);
        int t = uniform(0, c);
        Bound d_lo = uniform(0, 1) ? ninf : Bound(uniform(-o, o));
        Bound d_hi = uniform(0, 1) ? inf : Bound(uniform(-o, o));
        out = Cell::make(s, upper(s), t, upper(t), d_lo, d_hi);
        break;
      }
      case 1:
        out = Cell::point(element(c));
        break;
      case 2: {
        int n = uniform(0, c);
        out = Cell::make(n, inf, n, inf, ninf, inf);
        break;
      }
      case 3: {
        Element a = element(c);
        Integer d = a.i() - a.j();
        out = Cell::make(a.i(), inf, a.j(), inf, d, d);
        break;
      }
      case 4: {
        int i = uniform(0, c);
        out = Cell::make(i, i, uniform(0, c), inf, ninf, inf);
        break;
      }
      case 5: {
        int j = uniform(0, c);
        out = Cell::make(uniform(0, c), inf, j, j, ninf, inf);
        break;
      }
      case 6: {
        int n = uniform(0, c);
        out = Cell::make(0, n, 0, n, ninf, inf);
        break;
      }
      default: {
        int d1 = uniform(-o, o);
        out = Cell::make(0, inf, 0, inf, d1, d1 + uniform(0, 3));
        break;
      }
    }
    if (out) {
      return *out;
    }
  }
}

Region RegionGenerator::next() {
  std::vector<Cell> cells;
  int k = uniform(0, shape_.max_cells);
  for (int n = 0; n < k; ++n) {
    cells.push_back(cell());
  }
  return Region::from_cells(cells);
}

}  // namespace bct::oracle
