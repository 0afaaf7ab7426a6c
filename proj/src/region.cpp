// SPDX-License-Identifier: Apache-2.0
#include "bct/region.hpp"

#include <algorithm>
#include <set>

namespace bct {

namespace {

const Bound kInf = Bound::pos_inf();
const Bound kNegInf = Bound::neg_inf();

// An interval endpoint as a function of the row t = b: c, or b + c.
struct Form {
  int slope = 0;
  Integer c;

  Integer at(const Integer& b) const { return slope == 0 ? c : Integer(b + c); }
  bool operator==(const Form&) const = default;
};

// s ∈ [lo, hi], hi absent meaning unbounded.
struct Span {
  Form lo;
  std::optional<Form> hi;

  bool operator==(const Span&) const = default;
};

// Rows first..last (last absent: to infinity) sharing one symbolic description.
// Single-row runs use constant forms only.
struct Run {
  Integer first;
  std::optional<Integer> last;
  std::vector<Span> spans;

  bool single() const { return last && *last == first; }
};

std::vector<Span> evaluate(const std::vector<Span>& spans, const Integer& b) {
  std::vector<Span> out;
  out.reserve(spans.size());
  for (const Span& sp : spans) {
    Span c{{0, sp.lo.at(b)}, std::nullopt};
    if (sp.hi) {
      c.hi = Form{0, sp.hi->at(b)};
    }
    out.push_back(std::move(c));
  }
  return out;
}

// Symbolic row description of `cells` at row b, valid on the whole
// elementary interval that starts at b.
std::vector<Span> describe(const std::vector<Cell>& cells, const Integer& b) {
  struct Piece {
    Form lo;
    std::optional<Form> hi;
    Integer lo_v;
    Bound hi_v;
  };
  std::vector<Piece> active;
  const Bound row(b);
  for (const Cell& cell : cells) {
    if (row < cell.t_min() || cell.t_max() < row) {
      continue;
    }
    Piece p;
    if (cell.d_min().is_finite() && cell.s_min() < row + cell.d_min()) {
      p.lo = Form{1, cell.d_min().value()};
    } else {
      p.lo = Form{0, cell.s_min().value()};
    }
    Bound by_d = row + cell.d_max();
    if (cell.s_max().is_finite() && cell.s_max() <= by_d) {
      p.hi = Form{0, cell.s_max().value()};
    } else if (by_d.is_finite()) {
      p.hi = Form{1, cell.d_max().value()};
    }
    p.lo_v = p.lo.at(b);
    p.hi_v = p.hi ? Bound(p.hi->at(b)) : kInf;
    if (Bound(p.lo_v) <= p.hi_v) {
      active.push_back(std::move(p));
    }
  }
  std::sort(active.begin(), active.end(),
            [](const Piece& x, const Piece& y) { return x.lo_v < y.lo_v; });
  std::vector<Span> out;
  std::optional<Piece> cur;
  for (Piece& p : active) {
    if (cur && Bound(p.lo_v) <= cur->hi_v + Bound(1)) {
      if (cur->hi_v < p.hi_v) {
        cur->hi = p.hi;
        cur->hi_v = p.hi_v;
      }
      continue;
    }
    if (cur) {
      out.push_back({cur->lo, cur->hi});
    }
    cur = std::move(p);
  }
  if (cur) {
    out.push_back({cur->lo, cur->hi});
  }
  return out;
}

// Every row where the combinatorics of `cells` can change: cell row limits
// and the crossings (±1) of constant endpoints with diagonal ones.
std::vector<Integer> breakpoints(const std::vector<Cell>& cells) {
  std::set<Integer> bp{0};
  std::set<Integer> consts;
  std::set<Integer> offsets;
  for (const Cell& c : cells) {
    bp.insert(c.t_min().value());
    if (c.t_max().is_finite()) {
      bp.insert(c.t_max().value() + 1);
    }
    consts.insert(c.s_min().value());
    if (c.s_max().is_finite()) {
      consts.insert(c.s_max().value());
    }
    if (c.d_min().is_finite()) {
      offsets.insert(c.d_min().value());
    }
    if (c.d_max().is_finite()) {
      offsets.insert(c.d_max().value());
    }
  }
  for (const Integer& c : consts) {
    for (const Integer& o : offsets) {
      for (int delta = -1; delta <= 1; ++delta) {
        Integer x = c - o + delta;
        if (x >= 0) {
          bp.insert(x);
          bp.insert(x + 1);
        }
      }
    }
  }
  return {bp.begin(), bp.end()};
}

// Joins a row (constant spans) directly below the run.
bool extend_by_row(Run& run, const Integer& b, const std::vector<Span>& row) {
  if (run.spans.size() != row.size()) {
    return false;
  }
  if (!run.single()) {
    if (evaluate(run.spans, b) != row) {
      return false;
    }
    run.last = b;
    return true;
  }
  auto fit = [&](const Form& was, const Form& now, Form& out) {
    Integer diff = now.c - was.c;
    if (diff == 0) {
      out = was;
    } else if (diff == 1) {
      out = Form{1, was.c - run.first};
    } else {
      return false;
    }
    return true;
  };
  std::vector<Span> forms(row.size());
  for (std::size_t k = 0; k < row.size(); ++k) {
    const Span& was = run.spans[k];
    const Span& now = row[k];
    if (!fit(was.lo, now.lo, forms[k].lo)) {
      return false;
    }
    if (was.hi.has_value() != now.hi.has_value()) {
      return false;
    }
    if (was.hi) {
      Form f;
      if (!fit(*was.hi, *now.hi, f)) {
        return false;
      }
      forms[k].hi = f;
    }
  }
  run.spans = std::move(forms);
  run.last = b;
  return true;
}

// Joins a multi-row run directly below.
bool extend_by_run(Run& run, const Run& next) {
  if (run.spans.size() != next.spans.size()) {
    return false;
  }
  bool fits = run.single() ? evaluate(next.spans, run.first) == run.spans : run.spans == next.spans;
  if (!fits) {
    return false;
  }
  run.spans = next.spans;
  run.last = next.last;
  return true;
}

Run make_run(const Integer& first, const std::optional<Integer>& last, std::vector<Span> spans) {
  Run r{first, last, std::move(spans)};
  if (r.single()) {
    r.spans = evaluate(r.spans, first);
  }
  return r;
}

// Maximal runs of the rows of a union of cells, scanning rows upward and
// joining each row to the current run whenever the result is still linear.
std::vector<Run> row_runs(const std::vector<Cell>& cells) {
  std::vector<Integer> bp = breakpoints(cells);
  std::vector<Run> runs;
  for (std::size_t k = 0; k < bp.size(); ++k) {
    std::optional<Integer> last;
    if (k + 1 < bp.size()) {
      last = bp[k + 1] - 1;
    }
    Run piece = make_run(bp[k], last, describe(cells, bp[k]));
    if (runs.empty()) {
      runs.push_back(std::move(piece));
      continue;
    }
    Run& cur = runs.back();
    if (piece.single()) {
      if (!extend_by_row(cur, piece.first, piece.spans)) {
        runs.push_back(std::move(piece));
      }
      continue;
    }
    if (extend_by_run(cur, piece)) {
      continue;
    }
    if (extend_by_row(cur, piece.first, evaluate(piece.spans, piece.first))) {
      runs.push_back(make_run(piece.first + 1, piece.last, std::move(piece.spans)));
    } else {
      runs.push_back(std::move(piece));
    }
  }
  return runs;
}

Bound lower_s(const Form& f) { return f.slope == 0 ? Bound(f.c) : Bound(0); }
Bound lower_d(const Form& f) { return f.slope == 1 ? Bound(f.c) : kNegInf; }
Bound upper_s(const std::optional<Form>& f) {
  return f && f->slope == 0 ? Bound(f->c) : kInf;
}
Bound upper_d(const std::optional<Form>& f) {
  return f && f->slope == 1 ? Bound(f->c) : kInf;
}

void emit(std::vector<Cell>& out, const Run& run, const Form& lo, const std::optional<Form>& hi) {
  Bound t_max = run.last ? Bound(*run.last) : kInf;
  if (auto c = Cell::make(lower_s(lo), upper_s(hi), run.first, t_max, lower_d(lo), upper_d(hi))) {
    out.push_back(*c);
  }
}

std::vector<Cell> cells_of(const std::vector<Run>& runs) {
  std::vector<Cell> out;
  for (const Run& run : runs) {
    for (const Span& sp : run.spans) {
      emit(out, run, sp.lo, sp.hi);
    }
  }
  return out;
}

Form shifted(const Form& f, int by) { return Form{f.slope, f.c + by}; }

}  // namespace

Region::Region(const Cell& cell) : Region(from_cells({cell})) {}

Region Region::from_cells(const std::vector<Cell>& cells) {
  Region r;
  if (!cells.empty()) {
    r.cells_ = cells_of(row_runs(cells));
  }
  return r;
}

Region Region::full() { return Region(Cell::full()); }

std::string Region::str() const {
  if (cells_.empty()) {
    return "∅";
  }
  std::string out;
  for (const Cell& c : cells_) {
    if (!out.empty()) {
      out += " ∪ ";
    }
    out += c.str();
  }
  return out;
}

Region point(const Element& x) { return Region(Cell::point(x)); }

Region quadrant(const Integer& n) {
  return Region(*Cell::make(n, kInf, n, kInf, kNegInf, kInf));
}

Region square(const Integer& n) { return Region(*Cell::make(0, n, 0, n, kNegInf, kInf)); }

Region diagonal_tail(const Element& anchor, const Integer& offset) {
  Integer d = anchor.i() - anchor.j();
  return Region(*Cell::make(Integer(anchor.i() + offset), kInf, Integer(anchor.j() + offset), kInf, d, d));
}

Region diagonal(const Integer& d) { return Region(*Cell::make(0, kInf, 0, kInf, d, d)); }

Region column_ray(const Integer& i, const Integer& from) {
  return Region(*Cell::make(i, i, from, kInf, kNegInf, kInf));
}

Region row_ray(const Integer& j, const Integer& from) {
  return Region(*Cell::make(from, kInf, j, j, kNegInf, kInf));
}

Region points(const std::vector<Element>& xs) {
  std::vector<Cell> cells;
  cells.reserve(xs.size());
  for (const Element& x : xs) {
    cells.push_back(Cell::point(x));
  }
  return Region::from_cells(cells);
}

bool member(const Region& r, const Element& x) {
  return std::any_of(r.cells().begin(), r.cells().end(),
                     [&](const Cell& c) { return c.contains(x); });
}

Region unite(const Region& a, const Region& b) {
  std::vector<Cell> cells = a.cells();
  cells.insert(cells.end(), b.cells().begin(), b.cells().end());
  return Region::from_cells(cells);
}

Region intersect(const Region& a, const Region& b) {
  std::vector<Cell> cells;
  for (const Cell& x : a.cells()) {
    for (const Cell& y : b.cells()) {
      if (auto c = x.intersect(y)) {
        cells.push_back(*c);
      }
    }
  }
  return Region::from_cells(cells);
}

Region complement(const Region& r) { return Region::from_cells(detail::complement_cells(r)); }

Region difference(const Region& a, const Region& b) {
  std::vector<Cell> cells;
  for (const Cell& x : a.cells()) {
    for (const Cell& y : detail::complement_cells(b)) {
      if (auto c = x.intersect(y)) {
        cells.push_back(*c);
      }
    }
  }
  return Region::from_cells(cells);
}

bool subset(const Region& a, const Region& b) {
  return !detail::any_overlap(a.cells(), detail::complement_cells(b));
}

bool is_empty(const Region& r) { return r.empty(); }

bool is_finite(const Region& r) {
  return std::all_of(r.cells().begin(), r.cells().end(),
                     [](const Cell& c) { return c.is_finite(); });
}

bool is_cofinite(const Region& r) { return is_finite(complement(r)); }

std::optional<Integer> cardinality(const Region& r) {
  // Normal-form cells are pairwise disjoint.
  Integer total = 0;
  for (const Cell& c : r.cells()) {
    auto n = c.cardinality();
    if (!n) {
      return std::nullopt;
    }
    total += *n;
  }
  return total;
}

Region product_image(const Region& a, const Region& b) {
  std::vector<Cell> cells;
  for (const Cell& x : a.cells()) {
    for (const Cell& y : b.cells()) {
      auto part = product_cells(x, y);
      cells.insert(cells.end(), part.begin(), part.end());
    }
  }
  return Region::from_cells(cells);
}

Region inverse_image(const Region& r) {
  std::vector<Cell> cells;
  cells.reserve(r.cells().size());
  for (const Cell& c : r.cells()) {
    cells.push_back(c.swapped());
  }
  return Region::from_cells(cells);
}

bool product_subset(const Region& a, const Region& b, const Region& target) {
  std::vector<Cell> outside = detail::complement_cells(target);
  for (const Cell& x : a.cells()) {
    for (const Cell& y : b.cells()) {
      if (detail::any_overlap(product_cells(x, y), outside)) {
        return false;
      }
    }
  }
  return true;
}

std::vector<Element> enumerate(const Region& r, const Window& w) {
  std::vector<Element> out;
  for (std::size_t i = 0; i <= w.n; ++i) {
    for (std::size_t j = 0; j <= w.n; ++j) {
      Element x(static_cast<long long>(i), static_cast<long long>(j));
      if (member(r, x)) {
        out.push_back(std::move(x));
      }
    }
  }
  return out;
}

std::optional<Element> first_member(const Region& r) {
  std::optional<Element> best;
  for (const Cell& c : r.cells()) {
    // Closed bounds: s_min is attained, and on that column t starts at
    // max(t_min, s_min − d_max).
    const Integer& s = c.s_min().value();
    Bound t = max(c.t_min(), c.s_min() - c.d_max());
    Element x(s, t.value());
    if (!best || x < *best) {
      best = std::move(x);
    }
  }
  return best;
}

namespace detail {

std::vector<Cell> complement_cells(const Region& r) {
  if (r.empty()) {
    return {Cell::full()};
  }
  // Rows not covered by any run are empty; the runs of a normal form cover
  // every row from 0, so only gaps inside runs matter.
  std::vector<Run> runs = row_runs(r.cells());
  std::vector<Cell> out;
  for (const Run& run : runs) {
    std::optional<Form> from = Form{0, 0};
    for (const Span& sp : run.spans) {
      emit(out, run, *from, shifted(sp.lo, -1));
      if (!sp.hi) {
        from.reset();
        break;
      }
      from = shifted(*sp.hi, 1);
    }
    if (from) {
      emit(out, run, *from, std::nullopt);
    }
  }
  return out;
}

bool any_overlap(const std::vector<Cell>& a, const std::vector<Cell>& b) {
  for (const Cell& x : a) {
    for (const Cell& y : b) {
      if (x.intersect(y)) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace detail

}  // namespace bct
